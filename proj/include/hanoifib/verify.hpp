#pragma once

// Brute-force oracles and the named check suites. Every check is exhaustive
// within its bounds, deterministic, and reports the first counterexample in
// enumeration order when it fails.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hanoifib/bigint.hpp"
#include "hanoifib/core_state.hpp"
#include "hanoifib/numeration.hpp"

namespace hanoifib {

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool passed = false;
  std::string details;
  std::chrono::microseconds elapsed{0};
};

/// Suite bounds by key ("max_n", "max_len", "solver_max_n", ...); absent
/// keys take the suite defaults.
using Bounds = std::map<std::string, int>;

struct OracleResult {
  std::optional<std::uint64_t> distance;
  BigInt path_count;
};

/// BFS over the full state graph from (1..n,-,-) to (-,-,1..n).
OracleResult oracle_min_moves(int n, const RuleSet& rules, std::uint64_t vertex_cap = 59049);

/// All nonzero ZF-words of length <= max_len (max_len <= 25), shortest first
/// and in increasing value within a length.
std::vector<ZFWord> enumerate_zf_words(int max_len);

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// Throws Error(kUnknownSuite) for names outside suite_names() and "all".
std::vector<CheckReport> run_suite(const std::string& name, const Bounds& bounds = {});

/// One JSON object per line: check, params, passed, details (and elapsed_us
/// when with_timing is set).
std::string format_report_line(const CheckReport& report, bool with_timing = false);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace hanoifib
