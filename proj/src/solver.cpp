#include "hanoifib/solver.hpp"

#include <array>

#include "hanoifib/error.hpp"
#include "hanoifib/numeration.hpp"
#include "hanoifib/state_graph.hpp"

namespace hanoifib {

namespace {

enum class Scheme { kClassical, kFibonacci, kPQ, kLinearFibonacci };

Scheme scheme_for(const RuleSet& rules) {
  if (rules.pegs.is_complete()) {
    switch (rules.family) {
      case Family::kClassical: return Scheme::kClassical;
      case Family::kFibonacci: return Scheme::kFibonacci;
      case Family::kPQ: return Scheme::kPQ;
    }
  }
  if (rules.family == Family::kFibonacci && rules.style == Style::kOriginal &&
      rules.pegs == PegDigraph::linear()) {
    return Scheme::kLinearFibonacci;
  }
  fail(Errc::kUnsupported, "no optimal solver for " + describe(rules) + " rules");
}

void check_n(int n) {
  if (n < 0) fail(Errc::kDomain, "disk count must be nonnegative, got " + std::to_string(n));
}

// Abstract move: principal disk and its source and destination pegs.
struct Step {
  int disk;
  Peg from;
  Peg to;
};

class Planner {
 public:
  explicit Planner(const RuleSet& rules) : rules_(rules) {}

  std::vector<Step> plan(int n, Scheme scheme) {
    switch (scheme) {
      case Scheme::kClassical:
      case Scheme::kPQ:
        tower(n, Peg::A, Peg::C);
        break;
      case Scheme::kFibonacci:
        rules_.style == Style::kOriginal ? tower(n, Peg::A, Peg::C) : variant(n, Peg::A, Peg::C);
        break;
      case Scheme::kLinearFibonacci:
        linear(n, Peg::A, Peg::C);
        break;
    }
    return std::move(steps_);
  }

 private:
  void emit(int disk, Peg from, Peg to) {
    if (steps_.size() >= kMaxSolutionMoves) fail(Errc::kResource, "solution exceeds the move cap");
    steps_.push_back({disk, from, to});
  }

  // Tower 1..k from s to t with (lift, carry)-moves: bring the k-lift smaller
  // disks out of the way, move the principal run, then finish the remainder.
  void tower(int k, Peg s, Peg t) {
    if (k <= 0) return;
    const int lift = rules_.lift();
    if (k <= lift) {
      emit(k, s, t);
      return;
    }
    const Peg m = third_peg(s, t);
    tower(k - lift, s, m);
    emit(k, s, t);
    tower(k - lift - rules_.carry(), m, t);
  }

  // Variant Fibonacci moves drop the tower 1..k-2 back onto the source peg.
  void variant(int k, Peg s, Peg t) {
    if (k <= 0) return;
    const Peg m = third_peg(s, t);
    variant(k - 1, s, m);
    emit(k, s, t);
    variant(k - 2, s, t);
  }

  // Linear restriction between the end pegs s and t, through the middle peg.
  void linear(int k, Peg s, Peg t) {
    if (k <= 0) return;
    if (k <= 2) {
      linear_base(k, s, t);
      return;
    }
    const Peg m = third_peg(s, t);
    linear(k - 1, s, t);
    emit(k, s, m);
    emit(k - 1, m, s);
    linear(k - 3, t, s);
    emit(k, m, t);
    linear(k - 2, s, t);
  }

  void linear_base(int k, Peg s, Peg t) {
    const StateGraph g = build_graph(k, rules_);
    const ShortestPath path = shortest_path(g, State::tower(k, s), State::tower(k, t));
    if (!path.distance) fail(Errc::kInternal, "linear base case unreachable");
    for (const Move& mv : path.moves) emit(mv.disk, mv.from, mv.to);
  }

  RuleSet rules_;
  std::vector<Step> steps_;
};

Solution replay(int n, const RuleSet& rules, const std::vector<Step>& steps) {
  Solution sol{rules, n, {}, {}};
  sol.moves.reserve(steps.size());
  sol.states.reserve(steps.size() + 1);
  sol.states.push_back(State::tower(n, Peg::A));
  for (const Step& st : steps) {
    const State& cur = sol.states.back();
    auto mv = find_move(cur, rules, st.disk, st.to);
    if (!mv || mv->from != st.from) {
      fail(Errc::kInternal, "planned move of disk " + std::to_string(st.disk) + " to " + peg_name(st.to) +
                                " is illegal at " + to_string(cur));
    }
    sol.states.push_back(apply_move(cur, *mv, rules));
    sol.moves.push_back(*mv);
  }
  if (sol.states.back() != State::tower(n, Peg::C)) fail(Errc::kInternal, "plan does not end on peg C");
  return sol;
}

// Raw parity rule: r iff the number of 1s in zeckendorf(m) plus n is odd.
char parity_letter(std::uint64_t m, int n) {
  return (zeckendorf(m).ones() + n) % 2 == 1 ? 'r' : 'l';
}

// Compares the parity rule with the recursive solver on small puzzles of each
// parity class. Returns, per class (n % 2), whether the rule must be inverted.
std::array<bool, 2> calibrate_parity() {
  std::array<bool, 2> flip{};
  for (int n : {2, 3, 4, 5}) {
    const Solution ref = solve_recursive(n, RuleSet::fibonacci());
    int agree = 0;
    int disagree = 0;
    for (std::size_t i = 0; i < ref.moves.size(); ++i) {
      const Move& mv = ref.moves[i];
      if (mv.disk != 1) continue;
      (direction_letter(mv.from, mv.to) == parity_letter(i + 1, n) ? agree : disagree)++;
    }
    if (agree != 0 && disagree != 0) fail(Errc::kInternal, "d_1 directions follow no parity rule");
    const bool f = disagree != 0;
    if (n >= 4 && flip[n % 2] != f) fail(Errc::kInternal, "parity rule differs within a parity class");
    flip[n % 2] = f;
  }
  return flip;
}

const std::array<bool, 2>& parity_flip() {
  static const std::array<bool, 2> flip = calibrate_parity();
  return flip;
}

}  // namespace

BigInt min_moves(int n, const RuleSet& rules) {
  check_n(n);
  switch (scheme_for(rules)) {
    case Scheme::kClassical:
      return (BigInt(1) << n) - 1;
    case Scheme::kFibonacci:
      return fib_exact(n + 2) - 1;
    case Scheme::kPQ: {
      // m_j = 0 for j <= 0, m_j = m_{j-p} + m_{j-p-q} + 1.
      std::vector<BigInt> m(n + 1);
      auto at = [&](int j) { return j <= 0 ? BigInt(0) : m[j]; };
      for (int j = 1; j <= n; ++j) m[j] = at(j - rules.p) + at(j - rules.p - rules.q) + 1;
      return at(n);
    }
    case Scheme::kLinearFibonacci: {
      std::vector<BigInt> m{0, 2, 5};
      for (int j = 3; j <= n; ++j) m.push_back(m[j - 1] + m[j - 2] + m[j - 3] + 3);
      return m[n];
    }
  }
  fail(Errc::kInternal, "unreachable");
}

Solution solve_recursive(int n, const RuleSet& rules) {
  check_n(n);
  const Scheme scheme = scheme_for(rules);
  if (min_moves(n, rules) > kMaxSolutionMoves) {
    fail(Errc::kResource, "solution with " + std::to_string(n) + " disks exceeds the move cap");
  }
  return replay(n, rules, Planner(rules).plan(n, scheme));
}

int disk_for_move(std::uint64_t m, int n) {
  check_n(n);
  if (n + 2 > kMaxFibIndex) fail(Errc::kDomain, "n too large for 64-bit move indices");
  if (m < 1 || m > fib(n + 2) - 1) {
    fail(Errc::kDomain, "move index " + std::to_string(m) + " outside 1.." + std::to_string(fib(n + 2) - 1));
  }
  return leading_change_index(m) - 1;
}

std::uint64_t k_move_count(int n, int k) {
  if (k < 1 || k > n) {
    fail(Errc::kDomain, "disk " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  return fib(n + 1 - k);
}

std::vector<std::uint64_t> moves_per_disk(const Solution& solution) {
  std::vector<std::uint64_t> counts(solution.n + 1, 0);
  for (const Move& m : solution.moves) ++counts[m.disk];
  return counts;
}

char direction_letter(Peg from, Peg to) {
  return (index_of(to) - index_of(from) + 3) % 3 == 1 ? 'r' : 'l';
}

std::string mu_word(int n) {
  check_n(n);
  if (n > 36) fail(Errc::kResource, "mu word of length F_" + std::to_string(n) + " is too long");
  std::string prev2;       // mu_0
  std::string prev1 = "l";  // mu_1
  if (n == 0) return prev2;
  for (int i = 2; i <= n; ++i) {
    std::string next = prev1 + prev2;
    for (char& c : next) c = c == 'l' ? 'r' : 'l';
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

char mu_letter_by_parity(std::uint64_t m, int n) {
  if (disk_for_move(m, n) != 1) {
    fail(Errc::kDomain, "move " + std::to_string(m) + " of the " + std::to_string(n) +
                            "-disk solution does not move d_1");
  }
  const char raw = parity_letter(m, n);
  if (!parity_flip()[n % 2]) return raw;
  return raw == 'l' ? 'r' : 'l';
}

Solution solve_iterative(int n, const RuleSet& rules) {
  check_n(n);
  if (rules.family != Family::kFibonacci || !rules.pegs.is_complete()) {
    fail(Errc::kUnsupported, "the iterative solver handles unrestricted Fibonacci rules only");
  }
  if (min_moves(n, rules) > kMaxSolutionMoves) {
    fail(Errc::kResource, "solution with " + std::to_string(n) + " disks exceeds the move cap");
  }
  const std::uint64_t total = fib(n + 2) - 1;
  Solution sol{rules, n, {}, {}};
  sol.moves.reserve(total);
  sol.states.reserve(total + 1);
  sol.states.push_back(State::tower(n, Peg::A));
  for (std::uint64_t m = 1; m <= total; ++m) {
    const State& cur = sol.states.back();
    const int k = disk_for_move(m, n);
    std::optional<Move> chosen;
    if (k == 1) {
      const Peg from = cur.location(1);
      // Variant style: d_1 keeps one direction throughout, r for even n.
      const char letter = rules.style == Style::kVariant ? (n % 2 == 0 ? 'r' : 'l') : mu_letter_by_parity(m, n);
      const int step = letter == 'r' ? 1 : 2;
      chosen = find_move(cur, rules, 1, peg_at((index_of(from) + step) % 3));
    } else {
      int candidates = 0;
      for (const Move& mv : legal_moves(cur, rules)) {
        if (mv.disk != k) continue;
        ++candidates;
        chosen = mv;
      }
      if (candidates != 1) {
        fail(Errc::kInternal, std::to_string(candidates) + " legal " + std::to_string(k) + "-moves at step " +
                                  std::to_string(m) + " from " + to_string(cur));
      }
    }
    if (!chosen) fail(Errc::kInternal, "no legal move at step " + std::to_string(m));
    sol.states.push_back(apply_move(cur, *chosen, rules));
    sol.moves.push_back(*chosen);
  }
  return sol;
}

}  // namespace hanoifib
