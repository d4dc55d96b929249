// hanoifib command-line frontend. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hanoifib/hanoifib.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

struct Deleter {
  void operator()(hf_rules* p) const { hf_rules_destroy(p); }
  void operator()(hf_solution* p) const { hf_solution_destroy(p); }
  void operator()(hf_graph* p) const { hf_graph_destroy(p); }
  void operator()(hf_report* p) const { hf_report_destroy(p); }
  void operator()(hf_text* p) const { hf_text_destroy(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Deleter>;

// Thrown to unwind with an exit code after the message has been printed.
struct Stop {
  int code;
};

void check(hf_status st) {
  if (st == HF_OK) return;
  std::cerr << "error: " << hf_last_error() << "\n";
  throw Stop{st == HF_ERR_RESOURCE ? kResource : st == HF_ERR_INTERNAL ? kVerifyFailed : kUsage};
}

void print(hf_text* raw) {
  Owned<hf_text> text(raw);
  std::fwrite(hf_text_data(text.get()), 1, hf_text_size(text.get()), stdout);
}

struct RuleFlags {
  std::string family = "fibonacci";
  std::string style = "original";
  std::vector<int> pq;
  std::string restrict_to = "none";

  void add_to(CLI::App* cmd, bool with_restrict) {
    cmd->add_option("--family", family, "classical, fibonacci or pq")
        ->check(CLI::IsMember({"classical", "fibonacci", "pq"}));
    cmd->add_option("--style", style, "original or variant (Fibonacci moves)")
        ->check(CLI::IsMember({"original", "variant"}));
    cmd->add_option("--pq", pq, "p and q for --family pq")->expected(2);
    if (with_restrict) {
      cmd->add_option("--restrict", restrict_to, "peg restriction")
          ->check(CLI::IsMember({"none", "linear", "clockwise"}));
    }
  }

  Owned<hf_rules> make() const {
    hf_rules* raw = nullptr;
    if (!pq.empty() && family != "pq") {
      std::cerr << "error: --pq needs --family pq\n";
      throw Stop{kUsage};
    }
    if (family == "classical") {
      check(hf_rules_classical(&raw));
    } else if (family == "fibonacci") {
      check(hf_rules_fibonacci(style == "variant" ? HF_STYLE_VARIANT : HF_STYLE_ORIGINAL, &raw));
    } else {
      if (pq.size() != 2) {
        std::cerr << "error: --family pq needs --pq P Q\n";
        throw Stop{kUsage};
      }
      check(hf_rules_pq(pq[0], pq[1], &raw));
    }
    Owned<hf_rules> rules(raw);
    if (restrict_to == "linear") check(hf_rules_restrict(rules.get(), HF_PEGS_LINEAR));
    if (restrict_to == "clockwise") check(hf_rules_restrict(rules.get(), HF_PEGS_CLOCKWISE));
    return rules;
  }
};

const std::map<std::string, hf_format> kFormats{
    {"text", HF_FORMAT_TEXT}, {"json", HF_FORMAT_JSON}, {"csv", HF_FORMAT_CSV}};

int run(int argc, char** argv) {
  CLI::App app{"Tower of Hanoi with Fibonacci moves: solvers, Zeckendorf numeration, Gray codes, state graphs"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "optimal move list and state trace");
  int solve_n = 0;
  RuleFlags solve_rules;
  std::string algorithm = "recursive";
  std::string solve_format = "text";
  solve->add_option("-n,--n", solve_n, "number of disks")->required()->check(CLI::NonNegativeNumber);
  solve_rules.add_to(solve, true);
  solve->add_option("--algorithm", algorithm)->check(CLI::IsMember({"recursive", "iterative"}));
  solve->add_option("--format", solve_format)->check(CLI::IsMember({"text", "json", "csv"}));

  // gray
  auto* gray = app.add_subcommand("gray", "Gray-like listing of ZF-words up to length n");
  int gray_n = 0;
  std::string method = "mirror";
  std::string gray_format = "text";
  gray->add_option("-n,--n", gray_n, "maximal word length")->required()->check(CLI::PositiveNumber);
  gray->add_option("--method", method)->check(CLI::IsMember({"mirror", "demirror"}));
  gray->add_option("--format", gray_format)->check(CLI::IsMember({"text", "csv"}));

  // zeckendorf
  auto* zeck = app.add_subcommand("zeckendorf", "Zeckendorf expansion of k, or the value of a word");
  std::optional<std::uint64_t> zeck_k;
  std::string inverse;
  auto* k_opt = zeck->add_option("k", zeck_k, "nonnegative integer");
  auto* inv_opt = zeck->add_option("--inverse", inverse, "ZF-word to evaluate");
  k_opt->excludes(inv_opt);

  // graph
  auto* graph = app.add_subcommand("graph", "state graph in DOT format");
  int graph_n = 0;
  RuleFlags graph_rules;
  std::string graph_format = "dot";
  bool coords = false;
  std::uint64_t cap = 0;
  graph->add_option("-n,--n", graph_n, "number of disks")->required()->check(CLI::NonNegativeNumber);
  graph_rules.add_to(graph, true);
  graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot"}));
  graph->add_flag("--coords", coords, "add embedding positions");
  graph->add_option("--cap", cap, "vertex cap (default 3^10)");

  // verify
  auto* verify = app.add_subcommand("verify", "run brute-force verification suites");
  std::string suite = "all";
  int max_n = -1;
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "optimality", "gray", "graph", "identity", "numeration"}));
  verify->add_option("--max-n", max_n, "main size bound of the suites")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (*solve) {
    if (algorithm == "iterative" && (solve_rules.family != "fibonacci" || solve_rules.restrict_to != "none")) {
      std::cerr << "error: --algorithm iterative needs --family fibonacci without --restrict\n";
      return kUsage;
    }
    auto rules = solve_rules.make();
    hf_solution* raw = nullptr;
    check(hf_solve(solve_n, rules.get(), algorithm == "iterative" ? HF_ALGO_ITERATIVE : HF_ALGO_RECURSIVE, &raw));
    Owned<hf_solution> sol(raw);
    hf_text* text = nullptr;
    check(hf_solution_format(sol.get(), kFormats.at(solve_format), &text));
    print(text);
  } else if (*gray) {
    hf_text* text = nullptr;
    check(hf_gray_format(gray_n, method == "demirror" ? HF_GRAY_DEMIRROR : HF_GRAY_MIRROR,
                         kFormats.at(gray_format), &text));
    print(text);
  } else if (*zeck) {
    if (!inv_opt->empty()) {
      std::uint64_t value = 0;
      check(hf_zeckendorf_value(inverse.c_str(), &value));
      std::cout << value << "\n";
    } else if (zeck_k) {
      hf_text* text = nullptr;
      check(hf_zeckendorf(*zeck_k, &text));
      print(text);
      std::cout << "\n";
    } else {
      std::cerr << "error: give k or --inverse WORD\n";
      return kUsage;
    }
  } else if (*graph) {
    auto rules = graph_rules.make();
    hf_graph* raw = nullptr;
    check(hf_graph_build(graph_n, rules.get(), cap, &raw));
    Owned<hf_graph> g(raw);
    hf_text* text = nullptr;
    check(hf_graph_dot(g.get(), coords ? 1 : 0, &text));
    print(text);
  } else if (*verify) {
    hf_report* raw = nullptr;
    check(hf_verify_run(suite.c_str(), max_n, &raw));
    Owned<hf_report> report(raw);
    for (std::size_t i = 0; i < hf_report_count(report.get()); ++i) {
      hf_text* line = nullptr;
      check(hf_report_line(report.get(), i, &line));
      print(line);
      std::cout << "\n";
    }
    return hf_report_all_passed(report.get()) ? kOk : kVerifyFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const int rc = run(argc, argv);
    std::cout.flush();
    return rc;
  } catch (const Stop& s) {
    std::cout.flush();
    return s.code;
  }
}
