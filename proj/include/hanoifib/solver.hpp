#pragma once

// Optimal solutions of the classical, Fibonacci, (p,q) and linear-Fibonacci
// puzzles: move counts, the recursive decompositions, and the Zeckendorf
// driven iterative solver for the Fibonacci puzzle.

#include <cstdint>
#include <string>
#include <vector>

#include "hanoifib/bigint.hpp"
#include "hanoifib/core_state.hpp"

namespace hanoifib {

/// Solutions longer than this are refused with Error(kResource).
inline constexpr std::uint64_t kMaxSolutionMoves = std::uint64_t{1} << 21;

/// A solution from (1..n, -, -) to (-, -, 1..n). states.size() == moves.size() + 1.
struct Solution {
  RuleSet rules;
  int n = 0;
  std::vector<Move> moves;
  std::vector<State> states;
};

/// Minimal number of moves. Supported: classical, Fibonacci (either style) and
/// (p,q) without peg restriction, and the original-style Fibonacci puzzle under
/// the linear restriction. Anything else throws Error(kUnsupported).
BigInt min_moves(int n, const RuleSet& rules);

Solution solve_recursive(int n, const RuleSet& rules);

/// Principal disk of the m-th optimal Fibonacci move with n disks.
int disk_for_move(std::uint64_t m, int n);

/// Number of k-Fibonacci moves in the optimal n-disk solution, F_{n+1-k}.
std::uint64_t k_move_count(int n, int k);

/// Per-disk move counts of a solution, indexed by radius (entry 0 unused).
std::vector<std::uint64_t> moves_per_disk(const Solution& solution);

/// 'r' when the move goes A->B, B->C or C->A, 'l' otherwise.
char direction_letter(Peg from, Peg to);

/// Directions of the d_1 moves in the optimal Fibonacci solution, over {l, r}.
std::string mu_word(int n);

/// Direction of the m-th move of the optimal n-disk Fibonacci solution, which
/// must move d_1, read off the parity of the number of 1s in zeckendorf(m).
char mu_letter_by_parity(std::uint64_t m, int n);

/// Fibonacci family without peg restriction, either style. d_1 follows the
/// parity rule in the original style and a constant direction in the variant.
Solution solve_iterative(int n, const RuleSet& rules);

}  // namespace hanoifib
