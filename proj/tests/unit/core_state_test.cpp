#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>
#include <tuple>
#include <vector>

#include "hanoifib/core_state.hpp"
#include "hanoifib/error.hpp"

using namespace hanoifib;

namespace {

// Pegs as plain lists of radii, smallest first; index 0 is the top.
using Pegs = std::array<std::vector<int>, 3>;

Pegs pegs_of(int n, std::uint64_t code) {
  Pegs p;
  for (int d = 1; d <= n; ++d) {
    p[code % 3].push_back(d);
    code /= 3;
  }
  return p;
}

std::uint64_t code_of(const Pegs& p) {
  std::uint64_t code = 0;
  std::uint64_t w = 1;
  int n = 0;
  for (const auto& peg : p) n += static_cast<int>(peg.size());
  for (int d = 1; d <= n; ++d, w *= 3) {
    for (int i = 0; i < 3; ++i) {
      if (std::find(p[i].begin(), p[i].end(), d) != p[i].end()) code += w * i;
    }
  }
  return code;
}

bool holds(const std::vector<int>& peg, int d) { return std::find(peg.begin(), peg.end(), d) != peg.end(); }

// The successor set written straight from the move definitions: the run
// lo..k forms the top of X, the tower 1..lo-1 is all on Y, and the disks
// max(1, lo-carry)..k land on Z. Variant moves put 1..k-2 back on X.
using Succ = std::tuple<int, int, int, std::uint64_t>;  // disk, from, to, code

std::set<Succ> oracle_successors(int n, std::uint64_t code, const RuleSet& rules) {
  const Pegs p = pegs_of(n, code);
  std::set<Succ> out;
  const int lift = rules.family == Family::kClassical ? 1 : rules.family == Family::kFibonacci ? 1 : rules.p;
  const int carry = rules.family == Family::kClassical ? 0 : rules.family == Family::kFibonacci ? 1 : rules.q;
  for (int k = 1; k <= n; ++k) {
    const int lo = std::max(1, k - lift + 1);
    for (int x = 0; x < 3; ++x) {
      // X's top must be exactly lo..k.
      if (p[x].size() < static_cast<std::size_t>(k - lo + 1)) continue;
      bool run = true;
      for (int i = 0; i <= k - lo; ++i) run = run && p[x][i] == lo + i;
      if (!run) continue;
      for (int y = 0; y < 3; ++y) {
        if (y == x) continue;
        bool tower = true;
        for (int d = 1; d < lo; ++d) tower = tower && holds(p[y], d);
        if (!tower) continue;
        const int z = 3 - x - y;
        if (!rules.pegs.allows(peg_at(x), peg_at(z))) continue;
        const int bottom = std::max(1, lo - carry);
        Pegs q = p;
        std::vector<int> moved;
        for (int d = bottom; d <= k; ++d) moved.push_back(d);
        for (auto& peg : q) {
          std::erase_if(peg, [&](int d) { return d >= bottom && d <= k; });
        }
        if (!q[z].empty() && q[z].front() < k) continue;
        q[z].insert(q[z].begin(), moved.begin(), moved.end());
        if (rules.family == Family::kFibonacci && rules.style == Style::kVariant) {
          std::vector<int> rest;
          for (int d = 1; d < bottom; ++d) rest.push_back(d);
          for (auto& peg : q) std::erase_if(peg, [&](int d) { return d < bottom; });
          q[x].insert(q[x].begin(), rest.begin(), rest.end());
        }
        out.insert({k, x, z, code_of(q)});
      }
    }
  }
  return out;
}

std::uint64_t pow3(int n) {
  std::uint64_t r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

std::vector<RuleSet> families() {
  return {RuleSet::classical(),
          RuleSet::fibonacci(Style::kOriginal),
          RuleSet::fibonacci(Style::kVariant),
          RuleSet::pq(1, 0),
          RuleSet::pq(1, 2),
          RuleSet::pq(2, 1),
          RuleSet::pq(2, 2),
          RuleSet::pq(3, 1),
          RuleSet::fibonacci().restricted(PegDigraph::linear()),
          RuleSet::fibonacci(Style::kVariant).restricted(PegDigraph::clockwise()),
          RuleSet::classical().restricted(PegDigraph::linear())};
}

}  // namespace

TEST(CoreState, LegalMovesMatchDefinitionOracle) {
  for (const RuleSet& rules : families()) {
    for (int n = 0; n <= 6; ++n) {
      for (std::uint64_t c = 0; c < pow3(n); ++c) {
        const State s = State::from_code(n, c);
        std::set<Succ> got;
        for (const Move& m : legal_moves(s, rules)) {
          got.insert({m.disk, index_of(m.from), index_of(m.to), apply_move(s, m, rules).code()});
        }
        ASSERT_EQ(got, oracle_successors(n, c, rules)) << describe(rules) << " " << to_string(s);
      }
    }
  }
}

TEST(CoreState, PartitionPreservedAndNoDuplicates) {
  for (const RuleSet& rules : families()) {
    for (int n = 0; n <= 7; ++n) {
      for (std::uint64_t c = 0; c < pow3(n); ++c) {
        const State s = State::from_code(n, c);
        const auto moves = legal_moves(s, rules);
        for (std::size_t i = 0; i < moves.size(); ++i) {
          const State t = apply_move(s, moves[i], rules);
          EXPECT_EQ((t.on(Peg::A) | t.on(Peg::B) | t.on(Peg::C)), DiskSet::smallest(n));
          EXPECT_TRUE((t.on(Peg::A) & t.on(Peg::B)).empty());
          for (std::size_t j = 0; j < i; ++j) ASSERT_FALSE(moves[i] == moves[j]);
        }
      }
    }
  }
}

TEST(CoreState, IllegalMovesRejected) {
  const RuleSet rules = RuleSet::fibonacci();
  const int n = 4;
  for (std::uint64_t c = 0; c < pow3(n); ++c) {
    const State s = State::from_code(n, c);
    const auto legal = legal_moves(s, rules);
    for (int k = 1; k <= n; ++k) {
      for (Peg from : kPegs) {
        for (Peg to : kPegs) {
          if (from == to) continue;
          Move m{MoveKind::kFib, k, from, third_peg(from, to), to};
          if (std::find(legal.begin(), legal.end(), m) != legal.end()) continue;
          try {
            apply_move(s, m, rules);
            FAIL() << "accepted " << to_string(m) << " at " << to_string(s);
          } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::kIllegalMove);
          }
        }
      }
    }
  }
}

TEST(CoreState, SpecExamples) {
  const RuleSet fib = RuleSet::fibonacci();

  const auto start = legal_moves(parse_state("(12,-,-)"), fib);
  ASSERT_EQ(start.size(), 2u);
  EXPECT_EQ(to_string(start[0]), "fib 1 A->B");
  EXPECT_EQ(to_string(start[1]), "fib 1 A->C");

  const State s = parse_state("(2345,-,1)");
  const auto m = find_move(s, fib, 2, Peg::B);
  ASSERT_TRUE(m);
  EXPECT_EQ(to_string(apply_move(s, *m, fib)), "(345,12,-)");

  const State fig = parse_state("(35,124,6)");
  const auto three = find_move(fig, fib, 3, Peg::C);
  ASSERT_TRUE(three);
  EXPECT_EQ(three->via, Peg::B);
  EXPECT_EQ(to_string(apply_move(fig, *three, fib)), "(5,14,236)");

  const RuleSet var = RuleSet::fibonacci(Style::kVariant);
  const auto two = find_move(parse_state("(2,1,-)"), var, 2, Peg::C);
  ASSERT_TRUE(two);
  EXPECT_EQ(to_string(apply_move(parse_state("(2,1,-)"), *two, var)), "(-,-,12)");
}

TEST(CoreState, TwoDiskEdgeCount) {
  std::size_t single = 0;
  std::size_t pairs = 0;
  for (std::uint64_t c = 0; c < 9; ++c) {
    for (const Move& m : legal_moves(State::from_code(2, c), RuleSet::fibonacci())) {
      (m.disk == 1 ? single : pairs)++;
    }
  }
  EXPECT_EQ(single, 18u);
  EXPECT_EQ(pairs, 6u);
}

TEST(CoreState, SingleDiskMovesAreReversible) {
  const RuleSet fib = RuleSet::fibonacci();
  for (std::uint64_t c = 0; c < pow3(5); ++c) {
    const State s = State::from_code(5, c);
    for (const Move& m : legal_moves(s, fib)) {
      if (m.disk != 1) continue;
      const State t = apply_move(s, m, fib);
      const auto back = find_move(t, fib, 1, m.from);
      ASSERT_TRUE(back);
      EXPECT_EQ(apply_move(t, *back, fib), s);
    }
  }
}

TEST(CoreState, TextRoundTrip) {
  for (int n = 0; n <= 7; ++n) {
    for (std::uint64_t c = 0; c < pow3(n); ++c) {
      const State s = State::from_code(n, c);
      ASSERT_EQ(parse_state(to_string(s)), s);
      ASSERT_EQ(s.code(), c);
    }
  }
  const State big = State::tower(12, Peg::B);
  EXPECT_EQ(to_string(big), "(-,1.2.3.4.5.6.7.8.9.10.11.12,-)");
  EXPECT_EQ(parse_state(to_string(big)), big);
  EXPECT_EQ(parse_state("(∅,1,∅)"), State::tower(1, Peg::B));
  EXPECT_EQ(to_string(State::tower(0, Peg::A)), "(-,-,-)");
}

TEST(CoreState, InvalidStatesRejected) {
  auto code_of_error = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kInternal;
  };
  EXPECT_EQ(code_of_error([] { State(3, DiskSet{1, 2}, DiskSet{2}, DiskSet{3}); }), Errc::kInvalidState);
  EXPECT_EQ(code_of_error([] { State(3, DiskSet{1}, DiskSet{2}, DiskSet{}); }), Errc::kInvalidState);
  EXPECT_EQ(code_of_error([] { parse_state("(12,2,3)"); }), Errc::kInvalidState);
  EXPECT_EQ(code_of_error([] { RuleSet::pq(0, 1); }), Errc::kDomain);
  EXPECT_EQ(code_of_error([] { RuleSet::pq(1, -1); }), Errc::kDomain);
}

TEST(CoreState, PegDigraphs) {
  const PegDigraph lin = PegDigraph::linear();
  EXPECT_TRUE(lin.allows(Peg::A, Peg::B));
  EXPECT_TRUE(lin.allows(Peg::C, Peg::B));
  EXPECT_FALSE(lin.allows(Peg::A, Peg::C));
  EXPECT_FALSE(lin.allows(Peg::C, Peg::A));
  const PegDigraph cw = PegDigraph::clockwise();
  EXPECT_TRUE(cw.allows(Peg::C, Peg::A));
  EXPECT_FALSE(cw.allows(Peg::A, Peg::C));
  EXPECT_TRUE(PegDigraph::complete().is_complete());
  EXPECT_FALSE(lin.is_complete());
}
