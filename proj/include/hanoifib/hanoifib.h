#ifndef HANOIFIB_H
#define HANOIFIB_H

/* C interface to the hanoifib library. Every function returning hf_status
 * leaves a message for hf_last_error() on failure (per thread). Objects
 * returned through out-parameters are owned by the caller and released with
 * the matching *_destroy function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HF_API __declspec(dllexport)
#else
#define HF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hf_status {
  HF_OK = 0,
  HF_ERR_INVALID_STATE = 1,
  HF_ERR_ILLEGAL_MOVE = 2,
  HF_ERR_DOMAIN = 3,
  HF_ERR_UNSUPPORTED = 4,
  HF_ERR_RESOURCE = 5,
  HF_ERR_INVALID_WORD = 6,
  HF_ERR_UNKNOWN_SUITE = 7,
  HF_ERR_INTERNAL = 8,
  HF_ERR_ARGUMENT = 9
} hf_status;

typedef enum hf_style { HF_STYLE_ORIGINAL = 0, HF_STYLE_VARIANT = 1 } hf_style;
typedef enum hf_pegs { HF_PEGS_COMPLETE = 0, HF_PEGS_LINEAR = 1, HF_PEGS_CLOCKWISE = 2 } hf_pegs;
typedef enum hf_algorithm { HF_ALGO_RECURSIVE = 0, HF_ALGO_ITERATIVE = 1 } hf_algorithm;
typedef enum hf_format { HF_FORMAT_TEXT = 0, HF_FORMAT_JSON = 1, HF_FORMAT_CSV = 2 } hf_format;
typedef enum hf_gray_method { HF_GRAY_MIRROR = 0, HF_GRAY_DEMIRROR = 1 } hf_gray_method;

typedef struct hf_rules hf_rules;
typedef struct hf_solution hf_solution;
typedef struct hf_graph hf_graph;
typedef struct hf_report hf_report;
typedef struct hf_text hf_text;

/* Move as seen through the C API. Pegs are 'A', 'B', 'C'; via is 0 for
 * single-disk moves. kind is "single", "fib" or "pq". */
typedef struct hf_move {
  const char* kind;
  int disk;
  char from;
  char via;
  char to;
} hf_move;

HF_API const char* hf_last_error(void);
HF_API const char* hf_status_name(hf_status status);

HF_API const char* hf_text_data(const hf_text* text);
HF_API size_t hf_text_size(const hf_text* text);
HF_API void hf_text_destroy(hf_text* text);

HF_API hf_status hf_rules_classical(hf_rules** out);
HF_API hf_status hf_rules_fibonacci(hf_style style, hf_rules** out);
HF_API hf_status hf_rules_pq(int p, int q, hf_rules** out);
HF_API hf_status hf_rules_restrict(hf_rules* rules, hf_pegs pegs);
HF_API hf_status hf_rules_describe(const hf_rules* rules, hf_text** out);
HF_API void hf_rules_destroy(hf_rules* rules);

/* Decimal text; the count can exceed 64 bits. */
HF_API hf_status hf_min_moves(int n, const hf_rules* rules, hf_text** out);

HF_API hf_status hf_solve(int n, const hf_rules* rules, hf_algorithm algorithm, hf_solution** out);
HF_API size_t hf_solution_move_count(const hf_solution* solution);
HF_API hf_status hf_solution_move(const hf_solution* solution, size_t index, hf_move* out);
/* State after `index` moves, in the "(2345,-,1)" form. */
HF_API hf_status hf_solution_state(const hf_solution* solution, size_t index, hf_text** out);
HF_API hf_status hf_solution_format(const hf_solution* solution, hf_format format, hf_text** out);
HF_API void hf_solution_destroy(hf_solution* solution);

/* Gray listing of all ZF-words of length 1..n (text or csv). */
HF_API hf_status hf_gray_format(int n, hf_gray_method method, hf_format format, hf_text** out);

HF_API hf_status hf_zeckendorf(uint64_t k, hf_text** out);
HF_API hf_status hf_zeckendorf_value(const char* word, uint64_t* out);

/* cap == 0 selects the default vertex cap (3^10). */
HF_API hf_status hf_graph_build(int n, const hf_rules* rules, uint64_t cap, hf_graph** out);
HF_API size_t hf_graph_vertex_count(const hf_graph* graph);
HF_API size_t hf_graph_edge_count(const hf_graph* graph);
HF_API hf_status hf_graph_strongly_connected(const hf_graph* graph, int* out);
HF_API hf_status hf_graph_dot(const hf_graph* graph, int with_coords, hf_text** out);
HF_API void hf_graph_destroy(hf_graph* graph);

/* max_n < 0 keeps the suite defaults. */
HF_API hf_status hf_verify_run(const char* suite, int max_n, hf_report** out);
HF_API size_t hf_report_count(const hf_report* report);
HF_API int hf_report_all_passed(const hf_report* report);
/* One JSON object, without a trailing newline. */
HF_API hf_status hf_report_line(const hf_report* report, size_t index, hf_text** out);
HF_API void hf_report_destroy(hf_report* report);

#ifdef __cplusplus
}
#endif

#endif /* HANOIFIB_H */
