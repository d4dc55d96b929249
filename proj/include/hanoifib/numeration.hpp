#pragma once

// Fibonacci numbers and the Zeckendorf numeration system. Fibonacci indices
// follow F_1 = F_2 = 1; digit positions of a Zeckendorf word start at 2, so the
// word "10101" is F_6 + F_4 + F_2 = 12.

#include <cstdint>
#include <string>
#include <string_view>

#include "hanoifib/bigint.hpp"

namespace hanoifib {

/// Largest index whose Fibonacci number fits in 64 bits.
inline constexpr int kMaxFibIndex = 93;

/// F_i for 1 <= i <= 93; Error(kDomain) otherwise.
std::uint64_t fib(int i);
/// F_i for any i >= 0 (F_0 = 0), exact.
BigInt fib_exact(int i);

/// True iff `digits` is a nonempty binary string with no factor "11".
bool is_zf_word(std::string_view digits);

/// A binary word without two adjacent 1s, stored most significant digit first
/// without leading zeros. The zero word has no digits.
class ZFWord {
 public:
  ZFWord() = default;

  /// Accepts leading zeros; throws Error(kInvalidWord) on "11" or non-binary input.
  static ZFWord parse(std::string_view digits);

  /// Canonical digits; empty for zero.
  const std::string& digits() const { return digits_; }
  /// Canonical digits, "0" for zero.
  std::string str() const { return digits_.empty() ? std::string("0") : digits_; }
  int length() const { return static_cast<int>(digits_.size()); }
  bool is_zero() const { return digits_.empty(); }
  /// Digit carrying weight F_position (position >= 2); 0 beyond the word.
  int digit(int position) const;
  int ones() const;
  /// Left-padded with zeros to `width` digits (never truncates).
  std::string padded(int width) const;

  friend bool operator==(const ZFWord&, const ZFWord&) = default;

 private:
  explicit ZFWord(std::string canonical) : digits_(std::move(canonical)) {}
  std::string digits_;
};

/// Greedy expansion; zeckendorf(0) is the zero word.
ZFWord zeckendorf(std::uint64_t k);

/// Sum of the Fibonacci weights of the 1 digits.
std::uint64_t zf_value(const ZFWord& word);

/// Largest digit position at which the expansions of m-1 and m differ. m >= 1.
int leading_change_index(std::uint64_t m);

}  // namespace hanoifib
