// Acceptance runner: one PASS/FAIL line per criterion. Usage: acceptance <path-to-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hanoifib/graycode.hpp"
#include "hanoifib/numeration.hpp"
#include "hanoifib/solver.hpp"
#include "hanoifib/state_graph.hpp"
#include "hanoifib/verify.hpp"

using namespace hanoifib;

namespace {

std::string g_cli;

struct Outcome {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

std::string run_cli(const std::string& args, int* code) {
  FILE* pipe = popen((g_cli + " " + args + " 2>/dev/null").c_str(), "r");
  std::string out;
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// F_i by plain addition, F_1 = F_2 = 1.
std::vector<BigInt> fibs(int upto) {
  std::vector<BigInt> f{0, 1, 1};
  while (static_cast<int>(f.size()) <= upto) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

// The named checks of a verify suite, each of which must have run and passed.
void require_checks(Outcome& o, const std::string& suite, const Bounds& bounds, const std::set<std::string>& names) {
  std::set<std::string> seen;
  for (const CheckReport& r : run_suite(suite, bounds)) {
    if (!names.count(r.name)) continue;
    seen.insert(r.name);
    o.require(r.passed, r.name + ": " + r.details);
  }
  for (const auto& n : names) o.require(seen.count(n) == 1, "check " + n + " did not run");
}

const std::vector<std::string> kTrace{
    "(12345,-,-)", "(2345,-,1)", "(345,12,-)", "(45,1,23)",  "(45,-,123)", "(5,34,12)",   "(15,34,2)",
    "(5,1234,-)",  "(-,123,45)", "(-,23,145)", "(12,3,45)",  "(1,-,2345)", "(-,-,12345)",
};

const std::vector<std::string> kTable{
    "000001", "000010", "000100", "000101", "001001", "001000", "001010", "010010", "010000", "010001",
    "010101", "010100", "100100", "100101", "100001", "100000", "100010", "101010", "101000", "101001",
};

Outcome trace() {
  Outcome o;
  int code = -1;
  const auto out = lines(run_cli("solve -n 5 --family fibonacci --style original", &code));
  o.require(code == 0, "exit code " + std::to_string(code));
  o.require(out.size() == kTrace.size(), "expected 13 lines, got " + std::to_string(out.size()));
  for (std::size_t i = 0; i < out.size() && i < kTrace.size(); ++i) {
    const auto state = out[i].substr(out[i].rfind(' ') + 1);
    o.require(state == kTrace[i], "line " + std::to_string(i) + ": " + out[i]);
    o.require(out[i].rfind(std::to_string(i) + " ", 0) == 0, "line numbering at " + std::to_string(i));
  }
  return o;
}

Outcome optimal_counts() {
  Outcome o;
  const auto f = fibs(22);
  for (int n = 0; n <= 20; ++n) {
    for (Style st : {Style::kOriginal, Style::kVariant}) {
      o.require(min_moves(n, RuleSet::fibonacci(st)) == f[n + 2] - 1, "closed form n=" + std::to_string(n));
    }
  }
  for (int n = 0; n <= 10; ++n) {
    for (Style st : {Style::kOriginal, Style::kVariant}) {
      const auto r = oracle_min_moves(n, RuleSet::fibonacci(st));
      o.require(r.distance && BigInt(*r.distance) == f[n + 2] - 1, "BFS distance n=" + std::to_string(n));
      o.require(r.path_count == 1, "shortest path count " + r.path_count.str() + " at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome iterative() {
  Outcome o;
  for (int n = 0; n <= 16; ++n) {
    for (Style st : {Style::kOriginal, Style::kVariant}) {
      const Solution a = solve_recursive(n, RuleSet::fibonacci(st));
      const Solution b = solve_iterative(n, RuleSet::fibonacci(st));
      o.require(a.moves == b.moves && a.states == b.states, "differs at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome per_disk() {
  Outcome o;
  const auto f = fibs(20);
  for (int n = 1; n <= 16; ++n) {
    std::vector<std::uint64_t> count(n + 1, 0);
    for (const Move& m : solve_recursive(n, RuleSet::fibonacci()).moves) ++count[m.disk];
    for (int k = 1; k <= n; ++k) {
      o.require(BigInt(count[k]) == f[n + 1 - k], "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome mu() {
  Outcome o;
  o.require(mu_word(5) == "lrrrl", "mu_5 = " + mu_word(5));
  // d_1 moves of the reference trace, read off the state strings.
  std::string from_trace;
  for (std::size_t i = 1; i < kTrace.size(); ++i) {
    const State a = parse_state(kTrace[i - 1]);
    const State b = parse_state(kTrace[i]);
    if (a.location(1) == b.location(1)) continue;
    if (a.location(2) != b.location(2)) continue;  // d_1 travelled inside a larger move
    from_trace += direction_letter(a.location(1), b.location(1));
  }
  o.require(from_trace == "lrrrl", "trace gives " + from_trace);
  require_checks(o, "numeration", {{"mu_max_n", 24}, {"max_k", 10}},
                 {"mu_recursion", "mu_four_factor_identity", "mu_balance_mod_3", "mu_matches_optimal_solution"});
  return o;
}

Outcome gray() {
  Outcome o;
  int code = -1;
  const std::string out = run_cli("gray --n 6", &code);
  std::string want;
  for (const auto& r : kTable) want += r + "\n";
  o.require(code == 0 && out == want, "gray --n 6 differs from the table");
  const auto g = gray_list(14);
  o.require(g.size() == fib(16) - 1, "list length");
  std::set<std::uint64_t> f;
  for (int k = 3; k <= 16; ++k) f.insert(fib(k));
  for (std::size_t m = 1; m < g.size(); ++m) {
    o.require(hamming(g[m - 1], g[m]) == (f.count(m + 1) ? 2 : 1), "hamming at m=" + std::to_string(m));
  }
  for (int n = 2; n <= 16; ++n) {
    o.require(gray_block_demirror(n) == gray_block_mirror(n), "demirror n=" + std::to_string(n));
  }
  require_checks(o, "gray", {{"max_len", 16}}, {"bijection_with_zf_words", "length_increasing_lower_bound"});
  return o;
}

Outcome graph() {
  Outcome o;
  for (int n = 0; n <= 7; ++n) {
    for (Style st : {Style::kOriginal, Style::kVariant}) {
      o.require(is_strongly_connected(build_graph(n, RuleSet::fibonacci(st))).strongly_connected,
                "not strongly connected at n=" + std::to_string(n));
    }
  }
  o.require(k33_minor_f2(RuleSet::fibonacci()), "K3,3 on F_2");
  o.require(k33_minor_f2(RuleSet::fibonacci(Style::kVariant)), "K3,3 on variant F_2");
  o.require(!k33_minor_f2(RuleSet::classical()), "K3,3 on classical H_2");
  require_checks(o, "graph", {{"max_n", 1}, {"pseudo_max_n", 8}}, {"pseudo_edges_realise_variant_moves"});
  return o;
}

Outcome identity() {
  Outcome o;
  const auto f = fibs(40);
  for (int n = 0; n <= 30; ++n) {
    BigInt rhs = f[n + 2];
    for (int k = 0; k <= n - 2; ++k) rhs += (BigInt(1) << k) * f[n - 1 - k];
    o.require(rhs == (BigInt(1) << n), "formula at n=" + std::to_string(n));
    const PowerIdentity id = check_power_identity(n);
    o.require(id.holds && id.combinatorial == (BigInt(1) << n), "library identity at n=" + std::to_string(n));
  }
  const PowerIdentity five = check_power_identity(5);
  o.require(five.power == 32 && f[7] == 13 && five.fibonacci_side - f[7] == 19, "32 = 13 + 19");
  return o;
}

Outcome pq() {
  Outcome o;
  const std::vector<std::pair<int, int>> pairs{{1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
  for (const auto& [p, q] : pairs) {
    const RuleSet rules = RuleSet::pq(p, q);
    const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    std::vector<std::uint64_t> m;
    for (int n = 0; n <= 9; ++n) m.push_back(solve_recursive(n, rules).moves.size());
    auto at = [&](int j) { return j <= 0 ? std::uint64_t{0} : m[j]; };
    for (int n = 1; n <= 9; ++n) o.require(m[n] == at(n - p) + at(n - p - q) + 1, tag + " recurrence n=" + std::to_string(n));
    for (int n = 0; n <= 7; ++n) {
      const auto r = oracle_min_moves(n, rules);
      o.require(r.distance && *r.distance == m[n] && r.path_count == 1, tag + " BFS n=" + std::to_string(n));
    }
    if (p == 1 && q == 0) {
      for (int n = 0; n <= 9; ++n) o.require(m[n] == (std::uint64_t{1} << n) - 1, "(1,0) not 2^n-1");
    }
    if (p == 2 && q == 2) {
      for (int n = 1; 2 * n <= 9; ++n) o.require(m[2 * n - 1] == m[2 * n], "(2,2) m_{2n-1} != m_{2n}");
    }
  }
  return o;
}

Outcome tribonacci() {
  Outcome o;
  const RuleSet linear = RuleSet::fibonacci().restricted(PegDigraph::linear());
  const std::vector<std::uint64_t> want{0, 2, 5, 10, 20, 38};
  for (int n = 0; n <= 5; ++n) {
    const std::uint64_t len = solve_recursive(n, linear).moves.size();
    o.require(len == want[n], "length at n=" + std::to_string(n) + " is " + std::to_string(len));
    if (n >= 3) o.require(want[n] == want[n - 1] + want[n - 2] + want[n - 3] + 3, "recurrence");
  }
  for (int n = 0; n <= 6; ++n) {
    const auto r = oracle_min_moves(n, linear);
    o.require(r.distance && BigInt(*r.distance) == min_moves(n, linear), "BFS n=" + std::to_string(n));
  }
  return o;
}

Outcome classical() {
  Outcome o;
  for (int n = 0; n <= 12; ++n) {
    const Solution sol = solve_recursive(n, RuleSet::classical());
    o.require(sol.moves.size() == (std::size_t{1} << n) - 1, "length n=" + std::to_string(n));
    std::vector<std::uint64_t> count(n + 1, 0);
    for (const Move& m : sol.moves) ++count[m.disk];
    for (int k = 1; k <= n; ++k) o.require(count[k] == std::uint64_t{1} << (n - k), "d_k count n=" + std::to_string(n));
  }
  for (int n = 1; n <= 12; ++n) {
    const auto g = classical_gray(n);
    for (std::size_t i = 1; i < g.size(); ++i) o.require(hamming(g[i - 1], g[i]) == 1, "gray adjacency");
  }
  for (int n = 1; n <= 10; ++n) {
    const Solution sol = solve_recursive(n, RuleSet::classical());
    for (std::size_t i = 0; i < sol.moves.size(); ++i) {
      // Leftmost digit that changes between the binary forms of i and i+1.
      const std::uint64_t diff = i ^ (i + 1);
      int k = 0;
      while ((diff >> k) > 1) ++k;
      o.require(sol.moves[i].disk == k + 1, "moved disk at step " + std::to_string(i + 1));
    }
  }
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  const std::vector<Criterion> criteria{
      {1, "five-disk trace via CLI", 1, trace},
      {2, "optimal counts and BFS uniqueness", 30, optimal_counts},
      {3, "iterative equals recursive", 5, iterative},
      {4, "per-disk move counts", 0, per_disk},
      {5, "mu words", 0, mu},
      {6, "Gray code", 10, gray},
      {7, "graph structure", 60, graph},
      {8, "power identity", 0, identity},
      {9, "(p,q) family", 0, pq},
      {10, "linear Tribonacci variant", 0, tribonacci},
      {11, "classical baselines", 0, classical},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.why = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s";
    }
    all = all && o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << timing << ")";
    if (!o.ok) std::cout << " -- " << o.why;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
