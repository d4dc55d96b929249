#include <gtest/gtest.h>

#include <map>
#include <string>
#include <vector>

#include "hanoifib/error.hpp"
#include "hanoifib/numeration.hpp"

using namespace hanoifib;

namespace {

// Fibonacci numbers by plain addition, F_1 = F_2 = 1.
std::vector<std::uint64_t> fibs(int upto) {
  std::vector<std::uint64_t> f{0, 1, 1};
  while (static_cast<int>(f.size()) <= upto) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

// Every subset of {F_2..F_{L+1}} with no two adjacent indices, as a digit
// string (most significant first), keyed by its weight.
std::map<std::uint64_t, std::vector<std::string>> subset_sums(int len) {
  const auto f = fibs(len + 2);
  std::map<std::uint64_t, std::vector<std::string>> out;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    if (mask & (mask >> 1)) continue;
    std::uint64_t v = 0;
    std::string digits;
    for (int i = len - 1; i >= 0; --i) {
      const bool one = mask >> i & 1;
      if (one) v += f[i + 2];
      if (one || !digits.empty()) digits += one ? '1' : '0';
    }
    out[v].push_back(digits);
  }
  return out;
}

}  // namespace

TEST(Numeration, FibValues) {
  EXPECT_EQ(fib(1), 1u);
  EXPECT_EQ(fib(2), 1u);
  EXPECT_EQ(fib(3), 2u);
  EXPECT_EQ(fib(7), 13u);
  const auto f = fibs(93);
  for (int i = 1; i <= 93; ++i) ASSERT_EQ(fib(i), f[i]) << i;
  EXPECT_EQ(fib_exact(93), BigInt(f[93]));
  EXPECT_EQ(fib_exact(100).str(), "354224848179261915075");
  EXPECT_THROW(fib(94), Error);
  EXPECT_THROW(fib(0), Error);
}

TEST(Numeration, ZeckendorfAgainstSubsetOracle) {
  const auto sums = subset_sums(16);  // covers 0 .. F_18 - 1
  for (const auto& [v, words] : sums) {
    ASSERT_EQ(words.size(), 1u) << "value " << v;
    ASSERT_EQ(zeckendorf(v).digits(), words.front()) << v;
    ASSERT_EQ(zf_value(ZFWord::parse(words.front().empty() ? "0" : words.front())), v);
  }
  EXPECT_EQ(sums.size(), fibs(18)[18]);
}

TEST(Numeration, SpecExamples) {
  EXPECT_EQ(zeckendorf(0).str(), "0");
  EXPECT_EQ(zeckendorf(1).str(), "1");
  EXPECT_EQ(zeckendorf(12).str(), "10101");
  EXPECT_EQ(zeckendorf(7).str(), "1010");
  EXPECT_EQ(zf_value(ZFWord::parse("1")), 1u);
  EXPECT_EQ(zf_value(ZFWord::parse("10101")), 12u);
  EXPECT_EQ(leading_change_index(1), 2);
  EXPECT_EQ(leading_change_index(2), 3);
  EXPECT_EQ(leading_change_index(5), 5);
}

TEST(Numeration, RoundTripAndNoFactor11) {
  for (std::uint64_t k = 0; k <= 10000; ++k) {
    const ZFWord w = zeckendorf(k);
    ASSERT_EQ(w.digits().find("11"), std::string::npos);
    ASSERT_EQ(zf_value(w), k);
  }
  const std::uint64_t big = fib(93) - 1;
  EXPECT_EQ(zf_value(zeckendorf(big)), big);
}

TEST(Numeration, LeadingChangeIndexByComparison) {
  for (std::uint64_t m = 1; m <= 5000; ++m) {
    const std::string a = zeckendorf(m - 1).padded(30);
    const std::string b = zeckendorf(m).padded(30);
    std::size_t i = 0;
    while (a[i] == b[i]) ++i;
    // Character i of a 30-digit word carries weight F_{31-i}.
    ASSERT_EQ(leading_change_index(m), 31 - static_cast<int>(i)) << m;
  }
}

TEST(Numeration, WordParsing) {
  EXPECT_EQ(ZFWord::parse("0010").digits(), "10");
  EXPECT_EQ(ZFWord::parse("0").str(), "0");
  EXPECT_TRUE(ZFWord::parse("000").is_zero());
  EXPECT_EQ(ZFWord::parse("10100").ones(), 2);
  EXPECT_EQ(ZFWord::parse("101").digit(2), 1);
  EXPECT_EQ(ZFWord::parse("101").digit(3), 0);
  EXPECT_EQ(ZFWord::parse("101").digit(9), 0);
  EXPECT_EQ(ZFWord::parse("101").padded(6), "000101");
  EXPECT_TRUE(is_zf_word("1001"));
  EXPECT_FALSE(is_zf_word("0110"));
  EXPECT_FALSE(is_zf_word(""));
  for (const char* bad : {"11", "0110", "12", "a", ""}) {
    try {
      ZFWord::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kInvalidWord) << bad;
    }
  }
}
