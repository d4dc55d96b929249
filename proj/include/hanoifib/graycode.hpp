#pragma once

// The Gray-like listing of Zeckendorf words. Blocks hold the words of exact
// length n (leading digits "10"); the full list is the concatenation of
// blocks 1..n. Words are binary strings, most significant digit first.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hanoifib {

using Word = std::string;

/// Block of the F_n words of length n, built by the mirror recursion
/// N_n = 10.reverse(tail(N_{n-1})) + 10.reverse(N_{n-2}).
std::vector<Word> gray_block_mirror(int n);

/// Same block built forward from N_2 = {10}: words ending in 0 are doubled and
/// every word gets the next digit of the substitution-driven tau sequence.
std::vector<Word> gray_block_demirror(int n);

/// Blocks 1..n, each word left-padded with zeros to n digits; F_{n+2}-1 words.
std::vector<Word> gray_list(int n);

/// tau_1..tau_len as '0'/'1' characters (index 0 holds tau_1).
std::string tau_prefix(int len);

/// Prefix of the fixed point of a -> ab, b -> a, as 'a'/'b' characters.
std::string fibonacci_word_prefix(std::size_t len);

/// Differing positions after right-aligning both words with leading zeros.
int hamming(std::string_view a, std::string_view b);

/// Reflected binary Gray code on n digits; 2^n words.
std::vector<Word> classical_gray(int n);

/// The offset q in {-2..2} of smallest magnitude such that block[m+q] ends in
/// 1; nullopt when there is none or two offsets tie.
std::optional<int> demirror_offset(const std::vector<Word>& block, std::size_t m);

/// Next block rebuilt from `block` through the offsets: each word w_m yields
/// w_m0 (offset 0), w_m0 w_m1 (offset -1 or 2) or w_m1 w_m0 (offset -2 or 1).
std::vector<Word> demirror_by_offsets(const std::vector<Word>& block);

}  // namespace hanoifib
