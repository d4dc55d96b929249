#include "hanoifib/hanoifib.h"

#include <new>
#include <string>

#include "hanoifib/error.hpp"
#include "hanoifib/format.hpp"
#include "hanoifib/graycode.hpp"
#include "hanoifib/solver.hpp"
#include "hanoifib/state_graph.hpp"
#include "hanoifib/verify.hpp"

struct hf_rules {
  hanoifib::RuleSet rules;
};
struct hf_solution {
  hanoifib::Solution solution;
};
struct hf_graph {
  hanoifib::StateGraph graph;
};
struct hf_report {
  std::vector<hanoifib::CheckReport> reports;
};
struct hf_text {
  std::string data;
};

namespace {

thread_local std::string last_error;

hf_status set_error(hf_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
hf_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return HF_OK;
  } catch (const hanoifib::Error& e) {
    return set_error(static_cast<hf_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(HF_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(HF_ERR_INTERNAL, e.what());
  }
}

hf_status null_argument(const char* name) {
  return set_error(HF_ERR_ARGUMENT, std::string("null argument: ") + name);
}

hf_status make_text(std::string s, hf_text** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new hf_text{std::move(s)}; });
}

hf_status to_format(hf_format f, hanoifib::Format& out) {
  switch (f) {
    case HF_FORMAT_TEXT: out = hanoifib::Format::kText; return HF_OK;
    case HF_FORMAT_JSON: out = hanoifib::Format::kJson; return HF_OK;
    case HF_FORMAT_CSV: out = hanoifib::Format::kCsv; return HF_OK;
  }
  return set_error(HF_ERR_ARGUMENT, "unknown format");
}

}  // namespace

static_assert(static_cast<int>(hanoifib::Errc::kInvalidState) == HF_ERR_INVALID_STATE);
static_assert(static_cast<int>(hanoifib::Errc::kInternal) == HF_ERR_INTERNAL);

extern "C" {

const char* hf_last_error(void) { return last_error.c_str(); }

const char* hf_status_name(hf_status status) {
  switch (status) {
    case HF_OK: return "ok";
    case HF_ERR_INVALID_STATE: return "invalid state";
    case HF_ERR_ILLEGAL_MOVE: return "illegal move";
    case HF_ERR_DOMAIN: return "domain error";
    case HF_ERR_UNSUPPORTED: return "unsupported";
    case HF_ERR_RESOURCE: return "resource cap exceeded";
    case HF_ERR_INVALID_WORD: return "invalid word";
    case HF_ERR_UNKNOWN_SUITE: return "unknown suite";
    case HF_ERR_INTERNAL: return "internal error";
    case HF_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* hf_text_data(const hf_text* text) { return text ? text->data.c_str() : ""; }
size_t hf_text_size(const hf_text* text) { return text ? text->data.size() : 0; }
void hf_text_destroy(hf_text* text) { delete text; }

hf_status hf_rules_classical(hf_rules** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new hf_rules{hanoifib::RuleSet::classical()}; });
}

hf_status hf_rules_fibonacci(hf_style style, hf_rules** out) {
  if (!out) return null_argument("out");
  if (style != HF_STYLE_ORIGINAL && style != HF_STYLE_VARIANT) return set_error(HF_ERR_ARGUMENT, "unknown style");
  const auto s = style == HF_STYLE_ORIGINAL ? hanoifib::Style::kOriginal : hanoifib::Style::kVariant;
  return guarded([&] { *out = new hf_rules{hanoifib::RuleSet::fibonacci(s)}; });
}

hf_status hf_rules_pq(int p, int q, hf_rules** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new hf_rules{hanoifib::RuleSet::pq(p, q)}; });
}

hf_status hf_rules_restrict(hf_rules* rules, hf_pegs pegs) {
  if (!rules) return null_argument("rules");
  switch (pegs) {
    case HF_PEGS_COMPLETE: rules->rules.pegs = hanoifib::PegDigraph::complete(); return HF_OK;
    case HF_PEGS_LINEAR: rules->rules.pegs = hanoifib::PegDigraph::linear(); return HF_OK;
    case HF_PEGS_CLOCKWISE: rules->rules.pegs = hanoifib::PegDigraph::clockwise(); return HF_OK;
  }
  return set_error(HF_ERR_ARGUMENT, "unknown peg restriction");
}

hf_status hf_rules_describe(const hf_rules* rules, hf_text** out) {
  if (!rules) return null_argument("rules");
  return make_text(hanoifib::describe(rules->rules), out);
}

void hf_rules_destroy(hf_rules* rules) { delete rules; }

hf_status hf_min_moves(int n, const hf_rules* rules, hf_text** out) {
  if (!rules) return null_argument("rules");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new hf_text{hanoifib::min_moves(n, rules->rules).str()}; });
}

hf_status hf_solve(int n, const hf_rules* rules, hf_algorithm algorithm, hf_solution** out) {
  if (!rules) return null_argument("rules");
  if (!out) return null_argument("out");
  if (algorithm != HF_ALGO_RECURSIVE && algorithm != HF_ALGO_ITERATIVE) {
    return set_error(HF_ERR_ARGUMENT, "unknown algorithm");
  }
  return guarded([&] {
    auto sol = algorithm == HF_ALGO_RECURSIVE ? hanoifib::solve_recursive(n, rules->rules)
                                              : hanoifib::solve_iterative(n, rules->rules);
    *out = new hf_solution{std::move(sol)};
  });
}

size_t hf_solution_move_count(const hf_solution* solution) {
  return solution ? solution->solution.moves.size() : 0;
}

hf_status hf_solution_move(const hf_solution* solution, size_t index, hf_move* out) {
  if (!solution) return null_argument("solution");
  if (!out) return null_argument("out");
  if (index >= solution->solution.moves.size()) return set_error(HF_ERR_ARGUMENT, "move index out of range");
  const hanoifib::Move& m = solution->solution.moves[index];
  *out = hf_move{hanoifib::kind_name(m.kind), m.disk, hanoifib::peg_name(m.from),
                 m.via ? hanoifib::peg_name(*m.via) : '\0', hanoifib::peg_name(m.to)};
  return HF_OK;
}

hf_status hf_solution_state(const hf_solution* solution, size_t index, hf_text** out) {
  if (!solution) return null_argument("solution");
  if (index >= solution->solution.states.size()) return set_error(HF_ERR_ARGUMENT, "state index out of range");
  return make_text(hanoifib::to_string(solution->solution.states[index]), out);
}

hf_status hf_solution_format(const hf_solution* solution, hf_format format, hf_text** out) {
  if (!solution) return null_argument("solution");
  if (!out) return null_argument("out");
  hanoifib::Format f;
  if (hf_status st = to_format(format, f); st != HF_OK) return st;
  return guarded([&] { *out = new hf_text{hanoifib::format_solution(solution->solution, f)}; });
}

void hf_solution_destroy(hf_solution* solution) { delete solution; }

hf_status hf_gray_format(int n, hf_gray_method method, hf_format format, hf_text** out) {
  if (!out) return null_argument("out");
  if (method != HF_GRAY_MIRROR && method != HF_GRAY_DEMIRROR) return set_error(HF_ERR_ARGUMENT, "unknown method");
  hanoifib::Format f;
  if (hf_status st = to_format(format, f); st != HF_OK) return st;
  return guarded([&] {
    std::vector<hanoifib::Word> words;
    if (method == HF_GRAY_MIRROR) {
      words = hanoifib::gray_list(n);
    } else {
      // Same padding as gray_list, blocks built forward.
      if (n < 1) hanoifib::fail(hanoifib::Errc::kDomain, "gray listing needs n >= 1");
      for (int len = 1; len <= n; ++len) {
        for (auto& w : len == 1 ? hanoifib::gray_block_mirror(1) : hanoifib::gray_block_demirror(len)) {
          words.push_back(std::string(n - len, '0') + w);
        }
      }
    }
    *out = new hf_text{hanoifib::format_words(words, f)};
  });
}

hf_status hf_zeckendorf(uint64_t k, hf_text** out) { return make_text(hanoifib::zeckendorf(k).str(), out); }

hf_status hf_zeckendorf_value(const char* word, uint64_t* out) {
  if (!word) return null_argument("word");
  if (!out) return null_argument("out");
  return guarded([&] { *out = hanoifib::zf_value(hanoifib::ZFWord::parse(word)); });
}

hf_status hf_graph_build(int n, const hf_rules* rules, uint64_t cap, hf_graph** out) {
  if (!rules) return null_argument("rules");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new hf_graph{hanoifib::build_graph(n, rules->rules, cap == 0 ? hanoifib::kDefaultVertexCap : cap)};
  });
}

size_t hf_graph_vertex_count(const hf_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }
size_t hf_graph_edge_count(const hf_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

hf_status hf_graph_strongly_connected(const hf_graph* graph, int* out) {
  if (!graph) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] { *out = hanoifib::is_strongly_connected(graph->graph).strongly_connected ? 1 : 0; });
}

hf_status hf_graph_dot(const hf_graph* graph, int with_coords, hf_text** out) {
  if (!graph) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new hf_text{hanoifib::export_dot(graph->graph, with_coords != 0)}; });
}

void hf_graph_destroy(hf_graph* graph) { delete graph; }

hf_status hf_verify_run(const char* suite, int max_n, hf_report** out) {
  if (!suite) return null_argument("suite");
  if (!out) return null_argument("out");
  return guarded([&] {
    hanoifib::Bounds bounds;
    if (max_n >= 0) bounds["max_n"] = max_n;
    *out = new hf_report{hanoifib::run_suite(suite, bounds)};
  });
}

size_t hf_report_count(const hf_report* report) { return report ? report->reports.size() : 0; }

int hf_report_all_passed(const hf_report* report) {
  return report && hanoifib::all_passed(report->reports) ? 1 : 0;
}

hf_status hf_report_line(const hf_report* report, size_t index, hf_text** out) {
  if (!report) return null_argument("report");
  if (index >= report->reports.size()) return set_error(HF_ERR_ARGUMENT, "report index out of range");
  return make_text(hanoifib::format_report_line(report->reports[index]), out);
}

void hf_report_destroy(hf_report* report) { delete report; }

}  // extern "C"
