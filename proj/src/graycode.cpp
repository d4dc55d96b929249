#include "hanoifib/graycode.hpp"

#include <algorithm>

#include "hanoifib/error.hpp"
#include "hanoifib/numeration.hpp"

namespace hanoifib {

namespace {

void check_block_index(int n) {
  if (n < 0 || n > 40) fail(Errc::kDomain, "block index " + std::to_string(n) + " outside 0..40");
}

}  // namespace

std::vector<Word> gray_block_mirror(int n) {
  check_block_index(n);
  std::vector<Word> older;         // N_{i-2}
  std::vector<Word> newer{"1"};    // N_{i-1}
  if (n == 0) return older;
  for (int i = 2; i <= n; ++i) {
    std::vector<Word> next;
    next.reserve(newer.size() + older.size());
    for (auto it = newer.rbegin(); it != newer.rend(); ++it) next.push_back("10" + it->substr(1));
    for (auto it = older.rbegin(); it != older.rend(); ++it) next.push_back("10" + *it);
    older = std::move(newer);
    newer = std::move(next);
  }
  return newer;
}

std::string fibonacci_word_prefix(std::size_t len) {
  std::string w = "a";
  while (w.size() < len) {
    std::string next;
    next.reserve(w.size() * 2);
    for (char c : w) next += c == 'a' ? "ab" : "a";
    w = std::move(next);
  }
  w.resize(len);
  return w;
}

std::string tau_prefix(int len) {
  if (len < 1) fail(Errc::kDomain, "tau prefix length must be positive");
  const std::string sigma = fibonacci_word_prefix(static_cast<std::size_t>(len / 2) + 1);
  std::string tau(len, '0');
  tau[0] = '1';
  for (int i = 2; i <= len; ++i) tau[i - 1] = sigma[i / 2 - 1] == 'b' ? '1' : '0';
  return tau;
}

std::vector<Word> gray_block_demirror(int n) {
  check_block_index(n);
  if (n < 2) fail(Errc::kDomain, "the forward construction starts at block 2");
  const std::string tau = tau_prefix(static_cast<int>(fib(n + 2)));
  std::vector<Word> block{"10"};
  for (int k = 2; k < n; ++k) {
    // Block k+1 occupies global indices F_{k+2} .. F_{k+3}-1.
    std::vector<Word> next;
    for (const Word& w : block) {
      next.push_back(w);
      if (w.back() == '0') next.push_back(w);
    }
    std::uint64_t index = fib(k + 2);
    for (Word& w : next) {
      w += tau[index - 1];
      ++index;
      if (w.find("11") != Word::npos) fail(Errc::kInternal, "forward construction produced " + w);
    }
    block = std::move(next);
  }
  return block;
}

std::vector<Word> gray_list(int n) {
  if (n < 1) fail(Errc::kDomain, "gray_list needs n >= 1");
  check_block_index(n);
  std::vector<Word> out;
  out.reserve(fib(n + 2) - 1);
  for (int i = 1; i <= n; ++i) {
    for (const Word& w : gray_block_mirror(i)) out.push_back(std::string(n - i, '0') + w);
  }
  return out;
}

int hamming(std::string_view a, std::string_view b) {
  const std::size_t len = std::max(a.size(), b.size());
  int d = 0;
  for (std::size_t i = 0; i < len; ++i) {
    // Position i counted from the right.
    const char x = i < a.size() ? a[a.size() - 1 - i] : '0';
    const char y = i < b.size() ? b[b.size() - 1 - i] : '0';
    if (x != y) ++d;
  }
  return d;
}

std::vector<Word> classical_gray(int n) {
  if (n < 0 || n > 24) fail(Errc::kDomain, "reflected Gray code supported for 0 <= n <= 24");
  std::vector<Word> list{""};
  for (int i = 1; i <= n; ++i) {
    std::vector<Word> next;
    next.reserve(list.size() * 2);
    for (const Word& w : list) next.push_back("0" + w);
    for (auto it = list.rbegin(); it != list.rend(); ++it) next.push_back("1" + *it);
    list = std::move(next);
  }
  return list;
}

std::optional<int> demirror_offset(const std::vector<Word>& block, std::size_t m) {
  auto ends_in_one = [&](long i) {
    return i >= 0 && i < static_cast<long>(block.size()) && block[i].back() == '1';
  };
  const long at = static_cast<long>(m);
  for (int mag = 0; mag <= 2; ++mag) {
    const bool minus = ends_in_one(at - mag);
    const bool plus = ends_in_one(at + mag);
    if (minus && plus) return mag == 0 ? std::optional<int>(0) : std::nullopt;
    if (minus) return -mag;
    if (plus) return mag;
  }
  return std::nullopt;
}

std::vector<Word> demirror_by_offsets(const std::vector<Word>& block) {
  std::vector<Word> out;
  for (std::size_t m = 0; m < block.size(); ++m) {
    const auto q = demirror_offset(block, m);
    if (!q) fail(Errc::kInternal, "no unique offset at position " + std::to_string(m));
    const Word& w = block[m];
    switch (*q) {
      case 0: out.push_back(w + "0"); break;
      case -1: case 2: out.push_back(w + "0"); out.push_back(w + "1"); break;
      default: out.push_back(w + "1"); out.push_back(w + "0"); break;
    }
  }
  return out;
}

}  // namespace hanoifib
