#include "hanoifib/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hanoifib/error.hpp"
#include "hanoifib/graycode.hpp"
#include "hanoifib/solver.hpp"
#include "hanoifib/state_graph.hpp"

namespace hanoifib {

OracleResult oracle_min_moves(int n, const RuleSet& rules, std::uint64_t vertex_cap) {
  const StateGraph g = build_graph(n, rules, vertex_cap);
  const ShortestPath sp = shortest_path(g, State::tower(n, Peg::A), State::tower(n, Peg::C));
  return {sp.distance, sp.count};
}

std::vector<ZFWord> enumerate_zf_words(int max_len) {
  if (max_len < 0 || max_len > 25) fail(Errc::kDomain, "enumerate_zf_words supports lengths up to 25");
  std::vector<ZFWord> out;
  // Words of exact length L are "10" followed by any ZF-word of length L-2
  // (with leading zeros allowed), plus "1" itself. Build by extension.
  std::vector<std::string> all_of_len{""};  // all ZF strings (leading zeros allowed) of length L
  std::vector<std::string> prev_len;        // length L-1
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& s : all_of_len) {
      next.push_back(s + "0");
      if (s.empty() || s.back() == '0') next.push_back(s + "1");
    }
    prev_len = std::move(all_of_len);
    all_of_len = std::move(next);
    std::vector<std::string> exact;
    for (const auto& s : all_of_len) {
      if (s.front() == '1') exact.push_back(s);
    }
    std::sort(exact.begin(), exact.end());
    for (const auto& s : exact) out.push_back(ZFWord::parse(s));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"numeration", "optimality", "gray", "graph", "identity"};
  return names;
}

std::string format_report_line(const CheckReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["check"] = report.name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = params;
  j["passed"] = report.passed;
  j["details"] = report.details;
  if (with_timing) j["elapsed_us"] = report.elapsed.count();
  return j.dump();
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

namespace {

using Failure = std::optional<std::string>;
using Params = std::vector<std::pair<std::string, std::string>>;

class Suite {
 public:
  explicit Suite(const Bounds& bounds) : bounds_(bounds) {}

  int bound(const std::string& key, int fallback) const {
    auto it = bounds_.find(key);
    return it == bounds_.end() ? fallback : it->second;
  }

  void check(std::string name, Params params, const std::function<Failure()>& body) {
    CheckReport r{std::move(name), std::move(params), false, {}, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Failure f = body();
      r.passed = !f.has_value();
      if (f) r.details = f->empty() ? "failed" : *f;
    } catch (const std::exception& e) {
      r.details = std::string("exception: ") + e.what();
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    reports_.push_back(std::move(r));
  }

  std::vector<CheckReport> take() { return std::move(reports_); }

 private:
  const Bounds& bounds_;
  std::vector<CheckReport> reports_;
};

std::string str(const BigInt& v) { return v.str(); }

Params upto(const std::string& key, int v) { return {{key, std::to_string(v)}}; }

const std::vector<std::string>& five_disk_trace() {
  static const std::vector<std::string> trace{
      "(12345,-,-)", "(2345,-,1)", "(345,12,-)", "(45,1,23)",  "(45,-,123)", "(5,34,12)",   "(15,34,2)",
      "(5,1234,-)",  "(-,123,45)", "(-,23,145)", "(12,3,45)",  "(1,-,2345)", "(-,-,12345)",
  };
  return trace;
}

const std::vector<std::string>& six_disk_table() {
  static const std::vector<std::string> rows{
      "000001", "000010", "000100", "000101", "001001", "001000", "001010", "010010", "010000", "010001",
      "010101", "010100", "100100", "100101", "100001", "100000", "100010", "101010", "101000", "101001",
  };
  return rows;
}

std::vector<RuleSet> all_rule_families() {
  return {RuleSet::classical(),
          RuleSet::fibonacci(Style::kOriginal),
          RuleSet::fibonacci(Style::kVariant),
          RuleSet::pq(1, 2),
          RuleSet::pq(2, 1),
          RuleSet::pq(2, 2),
          RuleSet::pq(3, 1),
          RuleSet::fibonacci().restricted(PegDigraph::linear()),
          RuleSet::fibonacci(Style::kVariant).restricted(PegDigraph::clockwise())};
}

const std::vector<std::pair<int, int>>& pq_pairs() {
  static const std::vector<std::pair<int, int>> pairs{{1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
  return pairs;
}

// ---------------------------------------------------------------------------

void numeration_suite(Suite& s) {
  const int max_k = s.bound("max_k", 100000);
  s.check("zeckendorf_has_no_11", upto("max_k", max_k), [&]() -> Failure {
    for (int k = 0; k <= max_k; ++k) {
      if (zeckendorf(k).digits().find("11") != std::string::npos) return "k=" + std::to_string(k);
    }
    return std::nullopt;
  });

  s.check("zeckendorf_round_trip", upto("max_k", 10000), [&]() -> Failure {
    for (std::uint64_t k = 0; k <= 10000; ++k) {
      if (zf_value(zeckendorf(k)) != k) return "k=" + std::to_string(k);
    }
    return std::nullopt;
  });

  s.check("zeckendorf_unique", upto("max_len", 18), [&]() -> Failure {
    // Every value below F_20 is hit exactly once by the words of length <= 18,
    // and the hit is the greedy expansion.
    const std::uint64_t limit = fib(20);
    std::vector<int> hits(limit, 0);
    hits[0] = 1;  // the zero word
    for (const ZFWord& w : enumerate_zf_words(18)) {
      const auto v = zf_value(w);
      if (v >= limit) return "value " + std::to_string(v) + " out of range for " + w.str();
      ++hits[v];
      if (!(zeckendorf(v) == w)) return "greedy expansion of " + std::to_string(v) + " is not " + w.str();
    }
    for (std::uint64_t k = 0; k < limit; ++k) {
      if (hits[k] != 1) return "k=" + std::to_string(k) + " hit " + std::to_string(hits[k]) + " times";
    }
    return std::nullopt;
  });

  s.check("leading_change_at_fibonacci_values", upto("max_n", 25), [&]() -> Failure {
    for (int n = 2; n <= 25; ++n) {
      if (leading_change_index(fib(n + 1)) != n + 1) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  const int mu_max = s.bound("mu_max_n", 24);
  s.check("mu_recursion", upto("max_n", mu_max), [&]() -> Failure {
    if (mu_word(0) != "" || mu_word(1) != "l") return "base cases";
    for (int n = 2; n <= mu_max; ++n) {
      std::string expect = mu_word(n - 1) + mu_word(n - 2);
      for (char& c : expect) c = c == 'l' ? 'r' : 'l';
      if (mu_word(n) != expect) return "n=" + std::to_string(n);
      if (mu_word(n).size() != fib(n)) return "length at n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  s.check("mu_four_factor_identity", upto("max_n", mu_max), [&]() -> Failure {
    for (int n = 4; n <= mu_max; ++n) {
      if (mu_word(n) != mu_word(n - 2) + mu_word(n - 3) + mu_word(n - 3) + mu_word(n - 4)) {
        return "n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  s.check("mu_balance_mod_3", upto("max_n", mu_max), [&]() -> Failure {
    for (int n = 0; n <= mu_max; ++n) {
      const std::string w = mu_word(n);
      const auto r = static_cast<long>(std::count(w.begin(), w.end(), 'r'));
      const auto l = static_cast<long>(w.size()) - r;
      const long want_l_minus_r = n % 3 == 0 ? 0 : (n % 3 == 1 ? 1 : -1);
      if (l - r != want_l_minus_r) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  const int solver_max = s.bound("solver_max_n", 16);
  s.check("mu_matches_optimal_solution", upto("max_n", solver_max), [&]() -> Failure {
    for (int n = 0; n <= solver_max; ++n) {
      const Solution sol = solve_recursive(n, RuleSet::fibonacci());
      std::string seen;
      for (std::size_t i = 0; i < sol.moves.size(); ++i) {
        const Move& m = sol.moves[i];
        if (m.disk != 1) continue;
        const char d = direction_letter(m.from, m.to);
        seen += d;
        if (mu_letter_by_parity(i + 1, n) != d) {
          return "parity rule wrong at n=" + std::to_string(n) + " move " + std::to_string(i + 1);
        }
      }
      if (seen != mu_word(n)) return "mu word differs at n=" + std::to_string(n);
    }
    return std::nullopt;
  });
}

void optimality_suite(Suite& s) {
  const int max_n = s.bound("max_n", 8);
  const int solver_max = s.bound("solver_max_n", 16);

  s.check("five_disk_trace", {}, [&]() -> Failure {
    const Solution sol = solve_recursive(5, RuleSet::fibonacci());
    const auto& want = five_disk_trace();
    if (sol.states.size() != want.size()) return "trace has " + std::to_string(sol.states.size()) + " states";
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (to_string(sol.states[i]) != want[i]) return "state " + std::to_string(i) + " is " + to_string(sol.states[i]);
    }
    return std::nullopt;
  });

  s.check("fibonacci_closed_form", upto("max_n", 20), [&]() -> Failure {
    for (int n = 0; n <= 20; ++n) {
      for (Style st : {Style::kOriginal, Style::kVariant}) {
        const BigInt m = min_moves(n, RuleSet::fibonacci(st));
        if (m != BigInt(fib(n + 2) - 1)) return "n=" + std::to_string(n);
        if (n <= solver_max && solve_recursive(n, RuleSet::fibonacci(st)).moves.size() != fib(n + 2) - 1) {
          return "recursive length at n=" + std::to_string(n);
        }
      }
    }
    return std::nullopt;
  });

  for (Style st : {Style::kOriginal, Style::kVariant}) {
    const std::string style = st == Style::kOriginal ? "original" : "variant";
    s.check("fibonacci_bfs_" + style, upto("max_n", max_n), [&, st]() -> Failure {
      for (int n = 0; n <= max_n; ++n) {
        const auto o = oracle_min_moves(n, RuleSet::fibonacci(st));
        if (!o.distance) return "unreachable at n=" + std::to_string(n);
        if (BigInt(*o.distance) != min_moves(n, RuleSet::fibonacci(st))) {
          return "n=" + std::to_string(n) + " bfs distance " + std::to_string(*o.distance);
        }
        if (o.path_count != 1) return "n=" + std::to_string(n) + " has " + str(o.path_count) + " shortest paths";
      }
      return std::nullopt;
    });
  }

  s.check("iterative_equals_recursive", upto("max_n", solver_max), [&]() -> Failure {
    for (int n = 0; n <= solver_max; ++n) {
      for (Style st : {Style::kOriginal, Style::kVariant}) {
        const Solution a = solve_recursive(n, RuleSet::fibonacci(st));
        const Solution b = solve_iterative(n, RuleSet::fibonacci(st));
        if (a.moves != b.moves || a.states != b.states) return "n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  s.check("per_disk_counts", upto("max_n", solver_max), [&]() -> Failure {
    for (int n = 1; n <= solver_max; ++n) {
      const auto counts = moves_per_disk(solve_recursive(n, RuleSet::fibonacci()));
      for (int k = 1; k <= n; ++k) {
        if (counts[k] != k_move_count(n, k) || counts[k] != fib(n + 1 - k)) {
          return "n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    }
    return std::nullopt;
  });

  s.check("disk_for_move_matches_solution", upto("max_n", solver_max), [&]() -> Failure {
    for (int n = 0; n <= solver_max; ++n) {
      const Solution sol = solve_recursive(n, RuleSet::fibonacci());
      for (std::size_t i = 0; i < sol.moves.size(); ++i) {
        if (disk_for_move(i + 1, n) != sol.moves[i].disk) {
          return "n=" + std::to_string(n) + " move " + std::to_string(i + 1);
        }
      }
    }
    return std::nullopt;
  });

  s.check("classical_baseline", upto("max_n", 12), [&]() -> Failure {
    for (int n = 0; n <= 12; ++n) {
      const Solution sol = solve_recursive(n, RuleSet::classical());
      if (sol.moves.size() != (std::size_t{1} << n) - 1) return "length at n=" + std::to_string(n);
      const auto counts = moves_per_disk(sol);
      for (int k = 1; k <= n; ++k) {
        if (counts[k] != std::uint64_t{1} << (n - k)) return "n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
      if (n <= std::min(max_n, 8)) {
        const auto o = oracle_min_moves(n, RuleSet::classical());
        if (!o.distance || *o.distance != sol.moves.size() || o.path_count != 1) {
          return "bfs disagrees at n=" + std::to_string(n);
        }
      }
    }
    return std::nullopt;
  });

  const int pq_max = s.bound("pq_max_n", 9);
  const int pq_bfs_max = std::min(s.bound("pq_bfs_max_n", 7), max_n);
  for (const auto& [p, q] : pq_pairs()) {
    const std::string name = "pq_" + std::to_string(p) + "_" + std::to_string(q);
    s.check(name + "_recurrence", upto("max_n", pq_max), [&, p, q]() -> Failure {
      const RuleSet rules = RuleSet::pq(p, q);
      std::vector<std::uint64_t> m;
      for (int n = 0; n <= pq_max; ++n) m.push_back(solve_recursive(n, rules).moves.size());
      auto at = [&](int j) { return j <= 0 ? std::uint64_t{0} : m[j]; };
      for (int n = 1; n <= pq_max; ++n) {
        if (m[n] != at(n - p) + at(n - p - q) + 1) return "n=" + std::to_string(n);
        if (n <= p && m[n] != 1) return "n=" + std::to_string(n) + " should take one move";
        if (BigInt(m[n]) != min_moves(n, rules)) return "closed form at n=" + std::to_string(n);
      }
      if (p == 1 && q == 0) {
        for (int n = 0; n <= pq_max; ++n) {
          if (m[n] != (std::uint64_t{1} << n) - 1) return "not 2^n-1 at n=" + std::to_string(n);
        }
      }
      if (p == 2 && q == 2) {
        for (int n = 1; 2 * n <= pq_max; ++n) {
          if (m[2 * n - 1] != m[2 * n]) return "m_{2n-1} != m_{2n} at n=" + std::to_string(n);
        }
      }
      return std::nullopt;
    });
    s.check(name + "_bfs", upto("max_n", pq_bfs_max), [&, p, q]() -> Failure {
      const RuleSet rules = RuleSet::pq(p, q);
      for (int n = 0; n <= pq_bfs_max; ++n) {
        const auto o = oracle_min_moves(n, rules);
        if (!o.distance || BigInt(*o.distance) != min_moves(n, rules)) return "distance at n=" + std::to_string(n);
        if (o.path_count != 1) return "n=" + std::to_string(n) + " has " + str(o.path_count) + " shortest paths";
      }
      return std::nullopt;
    });
  }

  const RuleSet linear = RuleSet::fibonacci().restricted(PegDigraph::linear());
  const int lin_max = s.bound("linear_max_n", 8);
  s.check("linear_tribonacci", upto("max_n", lin_max), [&]() -> Failure {
    const std::vector<int> head{0, 2, 5, 10, 20, 38};
    for (int n = 0; n <= lin_max; ++n) {
      const Solution sol = solve_recursive(n, linear);
      const BigInt m = min_moves(n, linear);
      if (BigInt(sol.moves.size()) != m) return "recursive length at n=" + std::to_string(n);
      if (n < static_cast<int>(head.size()) && m != head[n]) return "sequence at n=" + std::to_string(n);
      if (n >= 3 && m != min_moves(n - 1, linear) + min_moves(n - 2, linear) + min_moves(n - 3, linear) + 3) {
        return "recurrence at n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  const int lin_bfs = std::min(s.bound("linear_bfs_max_n", 6), max_n);
  s.check("linear_bfs_optimal", upto("max_n", lin_bfs), [&]() -> Failure {
    for (int n = 0; n <= lin_bfs; ++n) {
      const auto o = oracle_min_moves(n, linear);
      if (!o.distance || BigInt(*o.distance) != min_moves(n, linear)) {
        return "n=" + std::to_string(n) + " bfs distance " + (o.distance ? std::to_string(*o.distance) : "none");
      }
    }
    return std::nullopt;
  });
}

void gray_suite(Suite& s) {
  const int max_len = s.bound("max_len", s.bound("max_n", 16));

  s.check("table_six_disks", {}, [&]() -> Failure {
    if (gray_list(6) != six_disk_table()) return "gray_list(6) differs from the reference table";
    return std::nullopt;
  });

  s.check("block_sizes", upto("max_n", max_len), [&]() -> Failure {
    for (int n = 1; n <= max_len; ++n) {
      if (gray_block_mirror(n).size() != fib(n)) return "n=" + std::to_string(n);
    }
    if (gray_list(max_len).size() != fib(max_len + 2) - 1) return "list size";
    return std::nullopt;
  });

  s.check("bijection_with_zf_words", upto("max_n", max_len), [&]() -> Failure {
    for (int n = 1; n <= max_len; ++n) {
      std::set<std::string> listed;
      for (const Word& w : gray_list(n)) {
        if (!is_zf_word(w)) return "non-ZF word " + w;
        if (!listed.insert(ZFWord::parse(w).digits()).second) return "duplicate " + w + " at n=" + std::to_string(n);
      }
      std::set<std::string> all;
      for (const ZFWord& w : enumerate_zf_words(n)) all.insert(w.digits());
      if (listed != all) return "set mismatch at n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  s.check("hamming_pattern", upto("max_n", max_len), [&]() -> Failure {
    const auto g = gray_list(max_len);
    std::set<std::uint64_t> fibs;
    for (int k = 3; k <= max_len + 3; ++k) fibs.insert(fib(k));
    for (std::size_t m = 1; m < g.size(); ++m) {
      const int want = fibs.count(m + 1) ? 2 : 1;
      if (hamming(g[m - 1], g[m]) != want) return "m=" + std::to_string(m);
    }
    return std::nullopt;
  });

  s.check("demirror_equals_mirror", upto("max_n", max_len), [&]() -> Failure {
    for (int n = 2; n <= max_len; ++n) {
      if (gray_block_demirror(n) != gray_block_mirror(n)) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  s.check("demirror_offsets", upto("max_n", max_len), [&]() -> Failure {
    for (int n = 4; n <= max_len; ++n) {
      const auto prev = gray_block_mirror(n - 1);
      for (std::size_t m = 0; m < prev.size(); ++m) {
        if (!demirror_offset(prev, m)) return "no unique offset at n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
      if (demirror_by_offsets(prev) != gray_block_mirror(n)) return "offset rebuild differs at n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  s.check("length_increasing_lower_bound", upto("max_len", 5), [&]() -> Failure {
    const auto g = gray_list(5);
    std::vector<std::vector<Word>> blocks(6);
    for (const ZFWord& w : enumerate_zf_words(5)) blocks[w.length()].push_back(w.digits());
    std::vector<std::vector<std::vector<Word>>> perms(6);
    for (int len = 1; len <= 5; ++len) {
      auto b = blocks[len];
      std::sort(b.begin(), b.end());
      do perms[len].push_back(b); while (std::next_permutation(b.begin(), b.end()));
    }
    std::size_t orderings = 0;
    Failure bad;
    std::vector<Word> u;
    std::function<void(int)> rec = [&](int len) {
      if (bad) return;
      if (len > 5) {
        ++orderings;
        for (std::size_t m = 1; m < u.size(); ++m) {
          if (hamming(u[m - 1], u[m]) < hamming(g[m - 1], g[m])) {
            bad = "ordering " + std::to_string(orderings) + " beats the list at m=" + std::to_string(m);
            return;
          }
        }
        return;
      }
      for (const auto& p : perms[len]) {
        u.insert(u.end(), p.begin(), p.end());
        rec(len + 1);
        u.resize(u.size() - p.size());
      }
    };
    rec(1);
    if (bad) return bad;
    if (orderings != 1440) return "enumerated " + std::to_string(orderings) + " orderings";
    return std::nullopt;
  });

  s.check("classical_gray_adjacency", upto("max_n", 12), [&]() -> Failure {
    for (int n = 0; n <= 12; ++n) {
      const auto g = classical_gray(n);
      if (g.size() != std::size_t{1} << n) return "size at n=" + std::to_string(n);
      for (std::size_t i = 1; i < g.size(); ++i) {
        if (hamming(g[i - 1], g[i]) != 1) return "n=" + std::to_string(n) + " i=" + std::to_string(i);
      }
    }
    return std::nullopt;
  });

  s.check("classical_leftmost_digit_is_moved_disk", upto("max_n", 10), [&]() -> Failure {
    for (int n = 1; n <= 10; ++n) {
      const Solution sol = solve_recursive(n, RuleSet::classical());
      for (std::uint64_t i = 0; i + 1 < (std::uint64_t{1} << n); ++i) {
        // Highest set bit of i ^ (i+1), counted from 1 at the right.
        const int k = std::bit_width(i ^ (i + 1));
        if (sol.moves[i].disk != k) return "n=" + std::to_string(n) + " step " + std::to_string(i + 1);
      }
    }
    return std::nullopt;
  });
}

void graph_suite(Suite& s) {
  const int max_n = s.bound("max_n", 7);
  const int pseudo_max = s.bound("pseudo_max_n", 8);
  const int core_max = std::min(max_n, 6);

  s.check("edges_follow_apply_move", upto("max_n", max_n), [&]() -> Failure {
    for (const RuleSet& rules : all_rule_families()) {
      for (int n = 0; n <= max_n; ++n) {
        const StateGraph g = build_graph(n, rules);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
          const State src = g.vertex(v);
          for (const Edge& e : g.out_edges(v)) {
            if (apply_move(src, e.move, rules) != g.vertex(e.target)) {
              return describe(rules) + " " + to_string(src) + " " + to_string(e.move);
            }
          }
        }
      }
    }
    return std::nullopt;
  });

  s.check("moves_unique_per_disk_and_pegs", upto("max_n", core_max), [&]() -> Failure {
    for (Style st : {Style::kOriginal, Style::kVariant}) {
      for (int n = 0; n <= core_max; ++n) {
        for (std::uint64_t c = 0; c < build_graph(n, RuleSet::classical()).vertex_count(); ++c) {
          const State v = State::from_code(n, c);
          const auto moves = legal_moves(v, RuleSet::fibonacci(st));
          std::set<std::tuple<int, int, int>> seen;
          for (const Move& m : moves) {
            const int via = m.via ? index_of(*m.via) : -1;
            if (!seen.insert({m.disk, index_of(m.from), via}).second && m.disk >= 2) return to_string(v);
          }
          for (std::size_t i = 1; i < moves.size(); ++i) {
            if (moves[i - 1] == moves[i]) return "duplicate at " + to_string(v);
          }
        }
      }
    }
    return std::nullopt;
  });

  s.check("pq_1_1_equals_fibonacci", upto("max_n", core_max), [&]() -> Failure {
    for (int n = 0; n <= core_max; ++n) {
      for (std::uint64_t c = 0; c < build_graph(n, RuleSet::classical()).vertex_count(); ++c) {
        const State v = State::from_code(n, c);
        const auto a = legal_moves(v, RuleSet::pq(1, 1));
        const auto b = legal_moves(v, RuleSet::fibonacci());
        if (a.size() != b.size()) return to_string(v);
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i].disk != b[i].disk || a[i].from != b[i].from || a[i].to != b[i].to ||
              apply_move(v, a[i], RuleSet::pq(1, 1)) != apply_move(v, b[i], RuleSet::fibonacci())) {
            return to_string(v);
          }
        }
      }
    }
    return std::nullopt;
  });

  s.check("restriction_only_removes_moves", upto("max_n", core_max), [&]() -> Failure {
    for (const RuleSet& base : {RuleSet::classical(), RuleSet::fibonacci(), RuleSet::fibonacci(Style::kVariant),
                                RuleSet::pq(2, 1)}) {
      for (PegDigraph d : {PegDigraph::linear(), PegDigraph::clockwise()}) {
        for (int n = 0; n <= core_max; ++n) {
          for (std::uint64_t c = 0; c < build_graph(n, RuleSet::classical()).vertex_count(); ++c) {
            const State v = State::from_code(n, c);
            const auto all = legal_moves(v, base);
            for (const Move& m : legal_moves(v, base.restricted(d))) {
              if (std::find(all.begin(), all.end(), m) == all.end()) return to_string(v);
            }
          }
        }
      }
    }
    return std::nullopt;
  });

  s.check("two_disk_edge_count", {}, [&]() -> Failure {
    for (Style st : {Style::kOriginal, Style::kVariant}) {
      const StateGraph g = build_graph(2, RuleSet::fibonacci(st));
      if (g.vertex_count() != 9 || g.edge_count() != 24) return "got " + std::to_string(g.edge_count()) + " edges";
    }
    return std::nullopt;
  });

  s.check("strongly_connected", upto("max_n", max_n), [&]() -> Failure {
    for (int n = 0; n <= max_n; ++n) {
      for (Style st : {Style::kOriginal, Style::kVariant}) {
        const auto c = is_strongly_connected(build_graph(n, RuleSet::fibonacci(st)));
        if (!c.strongly_connected) return "n=" + std::to_string(n) + " has " + std::to_string(c.components) + " SCCs";
      }
      if (!is_weakly_connected(build_graph(n, RuleSet::classical()))) return "classical n=" + std::to_string(n);
    }
    return std::nullopt;
  });

  s.check("k33_minor", {}, [&]() -> Failure {
    if (!k33_minor_f2(RuleSet::fibonacci(Style::kOriginal))) return "original rules";
    if (!k33_minor_f2(RuleSet::fibonacci(Style::kVariant))) return "variant rules";
    if (k33_minor_f2(RuleSet::classical())) return "classical rules should not contract to K3,3";
    return std::nullopt;
  });

  s.check("embedding_injective", upto("max_n", pseudo_max), [&]() -> Failure {
    for (int n = 0; n <= pseudo_max; ++n) {
      std::set<std::pair<std::int64_t, std::int64_t>> seen;
      std::uint64_t count = 1;
      for (int i = 0; i < n; ++i) count *= 3;
      for (std::uint64_t c = 0; c < count; ++c) {
        const EmbedCoord p = embed(State::from_code(n, c));
        if (!seen.insert({p.x, p.y}).second) return "collision at n=" + std::to_string(n);
      }
      const std::int64_t side = (std::int64_t{1} << n) - 1;
      if (!(embed(State::tower(n, Peg::A)) == EmbedCoord{0, 0}) ||
          !(embed(State::tower(n, Peg::B)) == EmbedCoord{2 * side, 0}) ||
          !(embed(State::tower(n, Peg::C)) == EmbedCoord{side, side})) {
        return "corners at n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  s.check("pseudo_edges_realise_variant_moves", upto("max_n", pseudo_max), [&]() -> Failure {
    const RuleSet variant = RuleSet::fibonacci(Style::kVariant);
    for (int n = 2; n <= pseudo_max; ++n) {
      std::uint64_t count = 1;
      for (int i = 0; i < n; ++i) count *= 3;
      for (std::uint64_t c = 0; c < count; ++c) {
        const State v = State::from_code(n, c);
        for (const Move& m : legal_moves(v, variant)) {
          if (m.disk < 2) continue;
          if (!is_pseudo_edge_origin(v, m.disk)) return "missing origin " + to_string(v);
          if (pseudo_edge_target(v, m.disk) != apply_move(v, m, variant)) {
            return to_string(v) + " k=" + std::to_string(m.disk);
          }
        }
      }
    }
    return std::nullopt;
  });

  s.check("bfs_distance_fibonacci", upto("max_n", std::min(max_n, 10)), [&]() -> Failure {
    for (int n = 0; n <= std::min(max_n, 10); ++n) {
      const auto o = oracle_min_moves(n, RuleSet::fibonacci());
      if (!o.distance || *o.distance != fib(n + 2) - 1 || o.path_count != 1) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  });
}

void identity_suite(Suite& s) {
  const int max_n = s.bound("max_n", 30);
  s.check("power_identity", upto("max_n", max_n), [&]() -> Failure {
    for (int n = 0; n <= max_n; ++n) {
      const PowerIdentity id = check_power_identity(n);
      if (!id.holds) {
        return "n=" + std::to_string(n) + ": 2^n=" + str(id.power) + " fibonacci side=" + str(id.fibonacci_side) +
               " combinatorial=" + str(id.combinatorial);
      }
    }
    return std::nullopt;
  });
  s.check("power_identity_five_disks", {}, [&]() -> Failure {
    const PowerIdentity id = check_power_identity(5);
    BigInt tail = 0;
    for (int k = 0; k <= 3; ++k) tail += (BigInt(1) << k) * fib_exact(4 - k);
    if (id.power != 32 || fib(7) != 13 || tail != 19 || !id.holds) return "32 = 13 + 19 fails";
    return std::nullopt;
  });
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& name, const Bounds& bounds) {
  Suite s(bounds);
  auto run_one = [&](const std::string& n) {
    if (n == "numeration") numeration_suite(s);
    else if (n == "optimality") optimality_suite(s);
    else if (n == "gray") gray_suite(s);
    else if (n == "graph") graph_suite(s);
    else if (n == "identity") identity_suite(s);
    else fail(Errc::kUnknownSuite, "unknown suite '" + n + "'");
  };
  if (name == "all") {
    for (const auto& n : suite_names()) run_one(n);
  } else {
    run_one(name);
  }
  return s.take();
}

}  // namespace hanoifib
