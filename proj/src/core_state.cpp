#include "hanoifib/core_state.hpp"

#include <algorithm>
#include <sstream>

#include "hanoifib/error.hpp"

namespace hanoifib {

char peg_name(Peg p) { return "ABC"[index_of(p)]; }

std::optional<Peg> parse_peg(char c) {
  switch (c) {
    case 'A': case 'a': return Peg::A;
    case 'B': case 'b': return Peg::B;
    case 'C': case 'c': return Peg::C;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// DiskSet

namespace {

void check_radius(int radius) {
  if (radius < 1 || radius > kMaxDisks) {
    fail(Errc::kDomain, "disk radius " + std::to_string(radius) + " outside 1.." +
                            std::to_string(kMaxDisks));
  }
}

}  // namespace

DiskSet::DiskSet(std::initializer_list<int> radii) {
  for (int r : radii) {
    check_radius(r);
    mask_ |= std::uint64_t{1} << (r - 1);
  }
}

DiskSet DiskSet::range(int lo, int hi) {
  lo = std::max(lo, 1);
  hi = std::min(hi, kMaxDisks);
  if (lo > hi) return {};
  const std::uint64_t upto_hi = (std::uint64_t{1} << hi) - 1;
  const std::uint64_t below_lo = (std::uint64_t{1} << (lo - 1)) - 1;
  return from_mask(upto_hi & ~below_lo);
}

bool DiskSet::contains(int radius) const {
  return radius >= 1 && radius <= kMaxDisks && (mask_ >> (radius - 1)) & 1U;
}

std::vector<int> DiskSet::radii() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

// ---------------------------------------------------------------------------
// State

State::State(int n, DiskSet a, DiskSet b, DiskSet c) : n_(n), pegs_{a, b, c} {
  if (n < 0 || n > kMaxDisks) {
    fail(Errc::kInvalidState, "disk count " + std::to_string(n) + " outside 0.." +
                                  std::to_string(kMaxDisks));
  }
  if (!(a & b).empty() || !(a & c).empty() || !(b & c).empty()) {
    fail(Errc::kInvalidState, "pegs share a disk");
  }
  if ((a | b | c) != DiskSet::smallest(n)) {
    fail(Errc::kInvalidState, "pegs do not hold exactly the disks 1.." + std::to_string(n));
  }
}

State State::tower(int n, Peg peg) {
  std::array<DiskSet, 3> pegs{};
  pegs[index_of(peg)] = DiskSet::smallest(n);
  return State(n, pegs[0], pegs[1], pegs[2]);
}

State State::from_code(int n, std::uint64_t code) {
  std::array<std::uint64_t, 3> masks{};
  for (int k = 1; k <= n; ++k) {
    masks[code % 3] |= std::uint64_t{1} << (k - 1);
    code /= 3;
  }
  if (code != 0) fail(Errc::kInvalidState, "state code too large for " + std::to_string(n) + " disks");
  return State(n, DiskSet::from_mask(masks[0]), DiskSet::from_mask(masks[1]),
               DiskSet::from_mask(masks[2]));
}

Peg State::location(int radius) const {
  for (Peg p : kPegs) {
    if (on(p).contains(radius)) return p;
  }
  fail(Errc::kDomain, "disk " + std::to_string(radius) + " not in a state of " +
                          std::to_string(n_) + " disks");
}

std::uint64_t State::code() const {
  std::uint64_t code = 0;
  for (int k = n_; k >= 1; --k) code = code * 3 + static_cast<std::uint64_t>(index_of(location(k)));
  return code;
}

std::string to_string(const State& state) {
  const bool dotted = state.disks() >= 10;
  std::string out = "(";
  for (Peg p : kPegs) {
    if (p != Peg::A) out += ',';
    const auto radii = state.on(p).radii();
    if (radii.empty()) out += '-';
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (dotted && i > 0) out += '.';
      out += std::to_string(radii[i]);
    }
  }
  out += ')';
  return out;
}

State parse_state(std::string_view text) {
  auto bad = [&](const std::string& why) -> State {
    fail(Errc::kInvalidState, "cannot parse state '" + std::string(text) + "': " + why);
  };
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') return bad("expected (A,B,C)");
  text = text.substr(1, text.size() - 2);

  std::array<std::uint64_t, 3> masks{};
  int peg = 0;
  int max_radius = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ',') continue;
    if (peg > 2) return bad("more than three pegs");
    std::string_view field = text.substr(start, i - start);
    start = i + 1;
    if (field == "-" || field.empty() || field == "∅") {
      ++peg;
      continue;
    }
    std::vector<int> radii;
    if (field.find('.') != std::string_view::npos) {
      std::size_t s = 0;
      for (std::size_t j = 0; j <= field.size(); ++j) {
        if (j < field.size() && field[j] != '.') continue;
        const auto part = field.substr(s, j - s);
        if (part.empty()) return bad("empty radius");
        int v = 0;
        for (char c : part) {
          if (c < '0' || c > '9') return bad("non-digit in radius");
          v = v * 10 + (c - '0');
          if (v > kMaxDisks) return bad("radius too large");
        }
        radii.push_back(v);
        s = j + 1;
      }
    } else {
      for (char c : field) {
        if (c < '1' || c > '9') return bad("unexpected character");
        radii.push_back(c - '0');
      }
    }
    for (int r : radii) {
      if (r < 1) return bad("radius must be positive");
      const std::uint64_t bit = std::uint64_t{1} << (r - 1);
      if ((masks[0] | masks[1] | masks[2]) & bit) return bad("disk listed twice");
      masks[peg] |= bit;
      max_radius = std::max(max_radius, r);
    }
    ++peg;
  }
  if (peg != 3) return bad("expected three pegs");
  return State(max_radius, DiskSet::from_mask(masks[0]), DiskSet::from_mask(masks[1]),
               DiskSet::from_mask(masks[2]));
}

// ---------------------------------------------------------------------------
// Rules

namespace {

int pair_bit(Peg from, Peg to) { return index_of(from) * 3 + index_of(to); }

}  // namespace

PegDigraph PegDigraph::complete() {
  PegDigraph g;
  for (Peg x : kPegs) {
    for (Peg y : kPegs) {
      if (x != y) g.allow(x, y);
    }
  }
  return g;
}

PegDigraph PegDigraph::linear() {
  PegDigraph g;
  g.allow(Peg::A, Peg::B).allow(Peg::B, Peg::A).allow(Peg::B, Peg::C).allow(Peg::C, Peg::B);
  return g;
}

PegDigraph PegDigraph::clockwise() {
  PegDigraph g;
  g.allow(Peg::A, Peg::B).allow(Peg::B, Peg::C).allow(Peg::C, Peg::A);
  return g;
}

// Off-diagonal pairs from*3+to (1,2,3,5,6,7) are packed into bits 0..5.
PegDigraph& PegDigraph::allow(Peg from, Peg to) {
  if (from == to) fail(Errc::kDomain, "a peg digraph cannot hold a loop");
  const int b = pair_bit(from, to);
  bits_ |= static_cast<std::uint8_t>(1U << (b - b / 4 - 1));
  return *this;
}

bool PegDigraph::allows(Peg from, Peg to) const {
  if (from == to) return false;
  const int b = pair_bit(from, to);
  return (bits_ >> (b - b / 4 - 1)) & 1U;
}

RuleSet RuleSet::classical() { return RuleSet{Family::kClassical, Style::kOriginal, 1, 0, PegDigraph::complete()}; }

RuleSet RuleSet::fibonacci(Style style) {
  return RuleSet{Family::kFibonacci, style, 1, 1, PegDigraph::complete()};
}

RuleSet RuleSet::pq(int p, int q) {
  if (p < 1 || q < 0) {
    fail(Errc::kDomain, "(p,q)-moves need p >= 1 and q >= 0, got (" + std::to_string(p) + "," +
                            std::to_string(q) + ")");
  }
  return RuleSet{Family::kPQ, Style::kOriginal, p, q, PegDigraph::complete()};
}

RuleSet RuleSet::restricted(PegDigraph digraph) const {
  RuleSet r = *this;
  r.pegs = digraph;
  return r;
}

int RuleSet::lift() const {
  switch (family) {
    case Family::kClassical: return 1;
    case Family::kFibonacci: return 1;
    case Family::kPQ: return p;
  }
  return 1;
}

int RuleSet::carry() const {
  switch (family) {
    case Family::kClassical: return 0;
    case Family::kFibonacci: return 1;
    case Family::kPQ: return q;
  }
  return 0;
}

std::string describe(const RuleSet& rules) {
  std::string out;
  switch (rules.family) {
    case Family::kClassical: out = "classical"; break;
    case Family::kFibonacci:
      out = rules.style == Style::kOriginal ? "fibonacci/original" : "fibonacci/variant";
      break;
    case Family::kPQ:
      out = "pq(" + std::to_string(rules.p) + "," + std::to_string(rules.q) + ")";
      break;
  }
  if (rules.pegs == PegDigraph::linear()) {
    out += "+linear";
  } else if (rules.pegs == PegDigraph::clockwise()) {
    out += "+clockwise";
  } else if (!rules.pegs.is_complete()) {
    out += "+restricted";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Moves

const char* kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::kSingle: return "single";
    case MoveKind::kFib: return "fib";
    case MoveKind::kPQ: return "pq";
  }
  return "?";
}

std::string to_string(const Move& move) {
  std::string out = kind_name(move.kind);
  out += ' ';
  out += std::to_string(move.disk);
  out += ' ';
  out += peg_name(move.from);
  out += "->";
  out += peg_name(move.to);
  return out;
}

namespace {

MoveKind kind_for(Family family) {
  switch (family) {
    case Family::kClassical: return MoveKind::kSingle;
    case Family::kFibonacci: return MoveKind::kFib;
    case Family::kPQ: return MoveKind::kPQ;
  }
  return MoveKind::kFib;
}

Move make_move(const RuleSet& rules, int disk, Peg from, Peg to) {
  Move m{kind_for(rules.family), disk, from, std::nullopt, to};
  if (rules.family != Family::kClassical) m.via = third_peg(from, to);
  return m;
}

// Why the principal disk `disk` cannot leave its peg for `to`, or nullopt if
// it can. The run disk-lift+1..disk must top its peg X and every smaller disk
// must sit on one other peg Y; the destination is the remaining peg unless
// there are no smaller disks, in which case either other peg will do.
std::optional<std::string> blocker(const State& s, const RuleSet& rules, int disk, Peg to) {
  if (disk < 1 || disk > s.disks()) return "no disk " + std::to_string(disk) + " in this state";
  const Peg x = s.location(disk);
  if (x == to) return "destination equals the source peg";
  const int run_lo = std::max(1, disk - rules.lift() + 1);
  const DiskSet run = DiskSet::range(run_lo, disk);
  if (!s.on(x).contains_all(run) || s.on(x).top() != run_lo) {
    return "disks " + std::to_string(run_lo) + ".." + std::to_string(disk) + " are not the top of peg " +
           peg_name(x);
  }
  const int below = disk - rules.lift();
  if (below >= 1) {
    const Peg y = s.location(1);
    if (y == x || !s.on(y).contains_all(DiskSet::smallest(below))) {
      return "the tower 1.." + std::to_string(below) + " is not on a single other peg";
    }
    if (third_peg(x, y) != to) return std::string("destination is not the free peg ") + peg_name(third_peg(x, y));
  }
  if (!rules.pegs.allows(x, to)) {
    return std::string("peg restriction forbids ") + peg_name(x) + "->" + peg_name(to);
  }
  return std::nullopt;
}

}  // namespace

std::vector<Move> legal_moves(const State& state, const RuleSet& rules) {
  std::vector<Move> out;
  for (int k = 1; k <= state.disks(); ++k) {
    const Peg x = state.location(k);
    for (Peg to : kPegs) {
      if (to == x) continue;
      if (!blocker(state, rules, k, to)) out.push_back(make_move(rules, k, x, to));
    }
  }
  return out;
}

std::optional<Move> find_move(const State& state, const RuleSet& rules, int disk, Peg to) {
  if (disk < 1 || disk > state.disks()) return std::nullopt;
  if (blocker(state, rules, disk, to)) return std::nullopt;
  return make_move(rules, disk, state.location(disk), to);
}

State apply_move(const State& state, const Move& move, const RuleSet& rules) {
  auto reject = [&](const std::string& why) -> State {
    fail(Errc::kIllegalMove, "illegal move " + to_string(move) + " at " + to_string(state) + ": " + why);
  };
  if (move.kind != kind_for(rules.family)) {
    return reject(std::string("a ") + kind_name(move.kind) + " move under " + describe(rules) + " rules");
  }
  if (auto why = blocker(state, rules, move.disk, move.to)) return reject(*why);
  if (move.from != state.location(move.disk)) {
    return reject(std::string("disk ") + std::to_string(move.disk) + " is not on peg " + peg_name(move.from));
  }
  const Move expected = make_move(rules, move.disk, move.from, move.to);
  if (move.via != expected.via) return reject("helper peg does not match");

  const int k = move.disk;
  const DiskSet moved = DiskSet::range(k - rules.lift() + 1 - rules.carry(), k);
  std::array<DiskSet, 3> pegs{state.on(Peg::A), state.on(Peg::B), state.on(Peg::C)};
  for (auto& p : pegs) p = p - moved;
  pegs[index_of(move.to)] = pegs[index_of(move.to)] | moved;

  if (rules.family == Family::kFibonacci && rules.style == Style::kVariant && move.via) {
    // The tower left behind on the helper peg follows the principal disk's old peg.
    const DiskSet rest = DiskSet::smallest(k - 2);
    pegs[index_of(*move.via)] = pegs[index_of(*move.via)] - rest;
    pegs[index_of(move.from)] = pegs[index_of(move.from)] | rest;
  }
  return State(state.disks(), pegs[0], pegs[1], pegs[2]);
}

}  // namespace hanoifib
