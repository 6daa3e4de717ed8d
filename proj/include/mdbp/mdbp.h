/* SPDX-License-Identifier: Apache-2.0 */
/* Copyright 2026 The mdbp Authors */

/* C interface to the mdbp solver. Objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible call
 * returns an mdbp_status; on failure mdbp_last_error() describes the problem
 * (per thread, valid until the next failing call on that thread). */

#ifndef MDBP_MDBP_H_
#define MDBP_MDBP_H_

#include <stdint.h>

#if defined(_WIN32)
#define MDBP_API __declspec(dllexport)
#elif defined(__GNUC__)
#define MDBP_API __attribute__((visibility("default")))
#else
#define MDBP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mdbp_status {
  MDBP_OK = 0,
  MDBP_TOO_FEW_VERTICES,
  MDBP_VERTEX_OUT_OF_RANGE,
  MDBP_SELF_LOOP,
  MDBP_DUPLICATE_EDGE,
  MDBP_EMPTY_COMMUNITY,
  MDBP_INVALID_PARTITION,
  MDBP_NO_EDGES,
  MDBP_GRAPH_TOO_LARGE,
  MDBP_UNKNOWN_ROW,
  MDBP_UNKNOWN_VARIABLE,
  MDBP_INVALID_MODEL,
  MDBP_NUMERICAL_BREAKDOWN,
  MDBP_ALL_VERTICES_EXCLUDED,
  MDBP_INVALID_BRANCH_SET,
  MDBP_NO_FRACTIONAL_PAIR,
  MDBP_PARSE_ERROR,
  MDBP_INVALID_ARGUMENT,
  MDBP_IO_ERROR,
  MDBP_INTERNAL_ERROR
} mdbp_status;

typedef enum mdbp_solve_status {
  MDBP_SOLVE_OPTIMAL = 0,
  MDBP_SOLVE_TIMED_OUT_WITH_LOWER_BOUND = 1
} mdbp_solve_status;

typedef struct mdbp_graph mdbp_graph;
typedef struct mdbp_result mdbp_result;

typedef struct mdbp_config {
  int spr;                   /* set-packing relaxation, nonzero = on */
  int mcp;                   /* several disjoint columns per pricing round */
  double time_limit;         /* seconds */
  int prove_optimal_pricing; /* solve every pricing problem to optimality */
} mdbp_config;

/* Progress record passed to the optional callback after each master solve. */
typedef struct mdbp_event {
  int node;
  int iteration;
  double master_objective;
  int artificial_active;
  int subproblems;
  long pricing_nodes;
  int columns_added;
  int promoted;
  int equality_size;
} mdbp_event;

typedef void (*mdbp_event_fn)(const mdbp_event* event, void* user);

MDBP_API const char* mdbp_version(void);
MDBP_API const char* mdbp_status_name(mdbp_status status);
MDBP_API const char* mdbp_last_error(void);

/* Defaults: both accelerations on, one hour, first-positive pricing. */
MDBP_API void mdbp_config_init(mdbp_config* config);

/* `edges` holds 2*edge_count endpoint ids in 0..n-1. Labels are "0".."n-1". */
MDBP_API mdbp_status mdbp_graph_from_edges(int n, const int32_t* edges, int edge_count,
                                           mdbp_graph** out);
/* format is "edgelist" or "gml". */
MDBP_API mdbp_status mdbp_graph_parse(const char* text, const char* format, mdbp_graph** out);
MDBP_API mdbp_status mdbp_graph_load(const char* path, const char* format, mdbp_graph** out);
MDBP_API void mdbp_graph_free(mdbp_graph* graph);
MDBP_API int mdbp_graph_vertex_count(const mdbp_graph* graph);
MDBP_API int mdbp_graph_edge_count(const mdbp_graph* graph);
/* NULL when v is out of range. */
MDBP_API const char* mdbp_graph_label(const mdbp_graph* graph, int v);

/* Modularity density of the partition given by one block label per vertex. */
MDBP_API mdbp_status mdbp_score(const mdbp_graph* graph, const int* labels, double* out);
/* Exhaustive optimum, n <= 12. `labels` (may be NULL) receives n block ids. */
MDBP_API mdbp_status mdbp_brute_force(const mdbp_graph* graph, double* value, int* labels);

/* `config` may be NULL for defaults, `callback` may be NULL. */
MDBP_API mdbp_status mdbp_solve(const mdbp_graph* graph, const mdbp_config* config,
                                const char* instance_name, mdbp_event_fn callback,
                                void* user, mdbp_result** out);
MDBP_API void mdbp_result_free(mdbp_result* result);

MDBP_API mdbp_solve_status mdbp_result_status(const mdbp_result* result);
/* -infinity when no partition was found. */
MDBP_API double mdbp_result_objective(const mdbp_result* result);
MDBP_API int mdbp_result_community_count(const mdbp_result* result);
MDBP_API int mdbp_result_community_size(const mdbp_result* result, int k);
/* Sorted internal ids of community k, NULL when k is out of range. */
MDBP_API const int32_t* mdbp_result_community(const mdbp_result* result, int k);
MDBP_API int mdbp_result_nodes(const mdbp_result* result);
MDBP_API long mdbp_result_iterations(const mdbp_result* result);
MDBP_API long mdbp_result_columns(const mdbp_result* result);
MDBP_API int mdbp_result_equality_size(const mdbp_result* result);
MDBP_API double mdbp_result_wall_seconds(const mdbp_result* result);
MDBP_API int mdbp_result_log_length(const mdbp_result* result);
/* Root node bounds; -infinity when the root was not finished. */
MDBP_API double mdbp_result_root_upper_bound(const mdbp_result* result);
MDBP_API double mdbp_result_root_lower_bound(const mdbp_result* result);

/* Records an exhaustive optimum alongside the run for the report. */
MDBP_API void mdbp_result_set_brute_force(mdbp_result* result, double value);

/* JSON report; the string is released with mdbp_string_free. */
MDBP_API mdbp_status mdbp_result_json(const mdbp_result* result, char** out);
MDBP_API mdbp_status mdbp_result_write_json(const mdbp_result* result, const char* path);
/* One CSV row per master solve. */
MDBP_API mdbp_status mdbp_result_write_log(const mdbp_result* result, const char* path);
MDBP_API void mdbp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MDBP_MDBP_H_ */
