#include "hanoifib/numeration.hpp"

#include <algorithm>
#include <array>

#include "hanoifib/error.hpp"

namespace hanoifib {

namespace {

constexpr std::array<std::uint64_t, kMaxFibIndex + 1> make_fib_table() {
  std::array<std::uint64_t, kMaxFibIndex + 1> t{};
  t[0] = 0;
  t[1] = 1;
  for (int i = 2; i <= kMaxFibIndex; ++i) t[i] = t[i - 1] + t[i - 2];
  return t;
}

constexpr auto kFib = make_fib_table();

// Positions 2..kMaxFibIndex-1 keep every word value below F_93.
constexpr int kMaxWordLength = kMaxFibIndex - 2;

}  // namespace

std::uint64_t fib(int i) {
  if (i < 1 || i > kMaxFibIndex) {
    fail(Errc::kDomain, "fib index " + std::to_string(i) + " outside 1.." + std::to_string(kMaxFibIndex));
  }
  return kFib[i];
}

BigInt fib_exact(int i) {
  if (i < 0) fail(Errc::kDomain, "fib index must be nonnegative");
  if (i <= kMaxFibIndex) return BigInt(kFib[i]);
  BigInt a = kFib[kMaxFibIndex - 1];
  BigInt b = kFib[kMaxFibIndex];
  for (int j = kMaxFibIndex; j < i; ++j) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

bool is_zf_word(std::string_view digits) {
  if (digits.empty()) return false;
  char prev = '0';
  for (char c : digits) {
    if (c != '0' && c != '1') return false;
    if (c == '1' && prev == '1') return false;
    prev = c;
  }
  return true;
}

ZFWord ZFWord::parse(std::string_view digits) {
  if (!is_zf_word(digits)) {
    fail(Errc::kInvalidWord, "'" + std::string(digits) + "' is not a binary word without the factor 11");
  }
  const auto first_one = digits.find('1');
  if (first_one == std::string_view::npos) return {};
  if (digits.size() - first_one > static_cast<std::size_t>(kMaxWordLength)) {
    fail(Errc::kDomain, "word longer than " + std::to_string(kMaxWordLength) + " significant digits");
  }
  return ZFWord(std::string(digits.substr(first_one)));
}

int ZFWord::digit(int position) const {
  const int idx = length() - 1 - (position - 2);
  if (position < 2 || idx < 0) return 0;
  return digits_[idx] == '1' ? 1 : 0;
}

int ZFWord::ones() const { return static_cast<int>(std::count(digits_.begin(), digits_.end(), '1')); }

std::string ZFWord::padded(int width) const {
  if (width <= length()) return digits_;
  return std::string(width - length(), '0') + digits_;
}

ZFWord zeckendorf(std::uint64_t k) {
  if (k == 0) return {};
  int top = 2;
  while (top + 1 <= kMaxFibIndex && kFib[top + 1] <= k) ++top;
  std::string digits(top - 1, '0');
  std::uint64_t rest = k;
  for (int pos = top; pos >= 2 && rest > 0; --pos) {
    if (kFib[pos] <= rest) {
      digits[top - pos] = '1';
      rest -= kFib[pos];
      --pos;  // the next position is necessarily 0
    }
  }
  return ZFWord::parse(digits);
}

std::uint64_t zf_value(const ZFWord& word) {
  std::uint64_t total = 0;
  for (int pos = 2; pos < word.length() + 2; ++pos) {
    if (word.digit(pos)) total += kFib[pos];
  }
  return total;
}

int leading_change_index(std::uint64_t m) {
  if (m < 1) fail(Errc::kDomain, "leading_change_index needs m >= 1");
  const ZFWord before = zeckendorf(m - 1);
  const ZFWord after = zeckendorf(m);
  for (int pos = std::max(before.length(), after.length()) + 1; pos >= 2; --pos) {
    if (before.digit(pos) != after.digit(pos)) return pos;
  }
  fail(Errc::kInternal, "expansions of consecutive integers coincide");
}

}  // namespace hanoifib
