// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include "mdbp/mdbp.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "mdbp/bnp.hpp"
#include "mdbp/error.hpp"
#include "mdbp/graph.hpp"
#include "mdbp/instance_io.hpp"
#include "mdbp/report.hpp"

struct mdbp_graph {
  mdbp::LabeledGraph data;
};

struct mdbp_result {
  mdbp::RunRecord record;
  std::vector<std::vector<std::int32_t>> communities;
  double root_upper = -std::numeric_limits<double>::infinity();
  double root_lower = -std::numeric_limits<double>::infinity();
};

namespace {

thread_local std::string last_error;

mdbp_status status_of(mdbp::ErrorCode code) {
  switch (code) {
    case mdbp::ErrorCode::kTooFewVertices: return MDBP_TOO_FEW_VERTICES;
    case mdbp::ErrorCode::kVertexOutOfRange: return MDBP_VERTEX_OUT_OF_RANGE;
    case mdbp::ErrorCode::kSelfLoop: return MDBP_SELF_LOOP;
    case mdbp::ErrorCode::kDuplicateEdge: return MDBP_DUPLICATE_EDGE;
    case mdbp::ErrorCode::kEmptyCommunity: return MDBP_EMPTY_COMMUNITY;
    case mdbp::ErrorCode::kInvalidPartition: return MDBP_INVALID_PARTITION;
    case mdbp::ErrorCode::kNoEdges: return MDBP_NO_EDGES;
    case mdbp::ErrorCode::kGraphTooLarge: return MDBP_GRAPH_TOO_LARGE;
    case mdbp::ErrorCode::kUnknownRow: return MDBP_UNKNOWN_ROW;
    case mdbp::ErrorCode::kUnknownVariable: return MDBP_UNKNOWN_VARIABLE;
    case mdbp::ErrorCode::kInvalidModel: return MDBP_INVALID_MODEL;
    case mdbp::ErrorCode::kNumericalBreakdown: return MDBP_NUMERICAL_BREAKDOWN;
    case mdbp::ErrorCode::kAllVerticesExcluded: return MDBP_ALL_VERTICES_EXCLUDED;
    case mdbp::ErrorCode::kInvalidBranchSet: return MDBP_INVALID_BRANCH_SET;
    case mdbp::ErrorCode::kNoFractionalPair: return MDBP_NO_FRACTIONAL_PAIR;
    case mdbp::ErrorCode::kParseError: return MDBP_PARSE_ERROR;
    case mdbp::ErrorCode::kInvalidArgument: return MDBP_INVALID_ARGUMENT;
    case mdbp::ErrorCode::kIoError: return MDBP_IO_ERROR;
  }
  return MDBP_INTERNAL_ERROR;
}

mdbp_status fail(mdbp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
mdbp_status guarded(Fn&& fn) {
  try {
    fn();
    return MDBP_OK;
  } catch (const mdbp::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MDBP_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(MDBP_INTERNAL_ERROR, e.what());
  }
}

mdbp_status parse_format(const char* name, mdbp::InstanceFormat& out) {
  if (name == nullptr) return fail(MDBP_INVALID_ARGUMENT, "format is null");
  const auto f = mdbp::parse_format_name(name);
  if (!f) return fail(MDBP_INVALID_ARGUMENT, std::string("unknown format ") + name);
  out = *f;
  return MDBP_OK;
}

mdbp_status write_file(const char* path, const std::string& text) {
  if (path == nullptr) return fail(MDBP_INVALID_ARGUMENT, "path is null");
  std::ofstream out(path, std::ios::binary);
  if (!out) return fail(MDBP_IO_ERROR, std::string("cannot write ") + path);
  out << text;
  out.close();
  if (!out) return fail(MDBP_IO_ERROR, std::string("write failed for ") + path);
  return MDBP_OK;
}

}  // namespace

extern "C" {

const char* mdbp_version(void) { return "1.0.0"; }

const char* mdbp_status_name(mdbp_status status) {
  switch (status) {
    case MDBP_OK: return "Ok";
    case MDBP_IO_ERROR: return "IoError";
    case MDBP_INTERNAL_ERROR: return "InternalError";
    default: break;
  }
  if (status > MDBP_OK && status < MDBP_IO_ERROR) {
    return mdbp::error_code_name(static_cast<mdbp::ErrorCode>(status - 1));
  }
  return "Unknown";
}

const char* mdbp_last_error(void) { return last_error.c_str(); }

void mdbp_config_init(mdbp_config* config) {
  if (config == nullptr) return;
  const mdbp::SolverConfig defaults;
  config->spr = defaults.spr ? 1 : 0;
  config->mcp = defaults.mcp ? 1 : 0;
  config->time_limit = defaults.time_limit;
  config->prove_optimal_pricing = defaults.prove_optimal_pricing ? 1 : 0;
}

mdbp_status mdbp_graph_from_edges(int n, const int32_t* edges, int edge_count,
                                  mdbp_graph** out) {
  if (out == nullptr) return fail(MDBP_INVALID_ARGUMENT, "out is null");
  *out = nullptr;
  if (edge_count < 0 || (edge_count > 0 && edges == nullptr)) {
    return fail(MDBP_INVALID_ARGUMENT, "bad edge array");
  }
  return guarded([&] {
    std::vector<mdbp::Edge> list(edge_count);
    for (int e = 0; e < edge_count; ++e) list[e] = {edges[2 * e], edges[2 * e + 1]};
    auto g = std::make_unique<mdbp_graph>(
        mdbp_graph{{mdbp::Graph::from_edges(n, list), {}}});
    for (int v = 0; v < n; ++v) g->data.labels.push_back(std::to_string(v));
    *out = g.release();
  });
}

mdbp_status mdbp_graph_parse(const char* text, const char* format, mdbp_graph** out) {
  if (out == nullptr || text == nullptr) return fail(MDBP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  mdbp::InstanceFormat f;
  if (const mdbp_status s = parse_format(format, f); s != MDBP_OK) return s;
  return guarded([&] {
    *out = new mdbp_graph{f == mdbp::InstanceFormat::kGml ? mdbp::parse_gml(text)
                                                          : mdbp::parse_edgelist(text)};
  });
}

mdbp_status mdbp_graph_load(const char* path, const char* format, mdbp_graph** out) {
  if (out == nullptr || path == nullptr) return fail(MDBP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  mdbp::InstanceFormat f;
  if (const mdbp_status s = parse_format(format, f); s != MDBP_OK) return s;
  return guarded([&] { *out = new mdbp_graph{mdbp::load_graph(path, f)}; });
}

void mdbp_graph_free(mdbp_graph* graph) { delete graph; }

int mdbp_graph_vertex_count(const mdbp_graph* graph) {
  return graph ? graph->data.graph.vertex_count() : 0;
}

int mdbp_graph_edge_count(const mdbp_graph* graph) {
  return graph ? graph->data.graph.edge_count() : 0;
}

const char* mdbp_graph_label(const mdbp_graph* graph, int v) {
  if (graph == nullptr || v < 0 || v >= static_cast<int>(graph->data.labels.size())) {
    return nullptr;
  }
  return graph->data.labels[v].c_str();
}

mdbp_status mdbp_score(const mdbp_graph* graph, const int* labels, double* out) {
  if (graph == nullptr || labels == nullptr || out == nullptr) {
    return fail(MDBP_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const mdbp::Graph& g = graph->data.graph;
    const std::vector<int> l(labels, labels + g.vertex_count());
    *out = mdbp::modularity_density(g, mdbp::partition_from_labels(g, l));
  });
}

mdbp_status mdbp_brute_force(const mdbp_graph* graph, double* value, int* labels) {
  if (graph == nullptr || value == nullptr) return fail(MDBP_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto best = mdbp::brute_force_optimum(graph->data.graph);
    *value = best.value;
    if (labels != nullptr) {
      const auto a = best.partition.assignment(graph->data.graph.vertex_count());
      std::copy(a.begin(), a.end(), labels);
    }
  });
}

mdbp_status mdbp_solve(const mdbp_graph* graph, const mdbp_config* config,
                       const char* instance_name, mdbp_event_fn callback, void* user,
                       mdbp_result** out) {
  if (graph == nullptr || out == nullptr) return fail(MDBP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  mdbp::SolverConfig cfg;
  if (config != nullptr) {
    if (!(config->time_limit > 0.0)) {
      return fail(MDBP_INVALID_ARGUMENT, "time limit must be positive");
    }
    cfg.spr = config->spr != 0;
    cfg.mcp = config->mcp != 0;
    cfg.time_limit = config->time_limit;
    cfg.prove_optimal_pricing = config->prove_optimal_pricing != 0;
  }
  mdbp::EventCallback on_event;
  if (callback != nullptr) {
    on_event = [callback, user](const mdbp::IterationEvent& e) {
      const mdbp_event ev{e.node,          e.iteration,     e.master_objective,
                          e.artificial_active ? 1 : 0,      e.subproblems,
                          e.pricing_nodes, e.columns_added, e.promoted,
                          e.equality_size};
      callback(&ev, user);
    };
  }
  return guarded([&] {
    const mdbp::SolveReport report = mdbp::solve(graph->data.graph, cfg, on_event);
    auto r = std::make_unique<mdbp_result>();
    r->record = mdbp::make_run_record(instance_name ? instance_name : "", graph->data, cfg,
                                      report);
    if (report.partition) {
      for (const mdbp::Community& c : report.partition->communities()) {
        r->communities.emplace_back(c.members().begin(), c.members().end());
      }
    }
    if (!report.nodes.empty()) {
      r->root_upper = report.nodes.front().upper_bound;
      r->root_lower = report.nodes.front().lower_bound;
    }
    *out = r.release();
  });
}

void mdbp_result_free(mdbp_result* result) { delete result; }

mdbp_solve_status mdbp_result_status(const mdbp_result* result) {
  return result && result->record.status == mdbp::SolveStatus::kTimedOutWithLowerBound
             ? MDBP_SOLVE_TIMED_OUT_WITH_LOWER_BOUND
             : MDBP_SOLVE_OPTIMAL;
}

double mdbp_result_objective(const mdbp_result* result) {
  return result ? result->record.objective : -std::numeric_limits<double>::infinity();
}

int mdbp_result_community_count(const mdbp_result* result) {
  return result ? static_cast<int>(result->communities.size()) : 0;
}

int mdbp_result_community_size(const mdbp_result* result, int k) {
  if (result == nullptr || k < 0 || k >= mdbp_result_community_count(result)) return 0;
  return static_cast<int>(result->communities[k].size());
}

const int32_t* mdbp_result_community(const mdbp_result* result, int k) {
  if (result == nullptr || k < 0 || k >= mdbp_result_community_count(result)) return nullptr;
  return result->communities[k].data();
}

int mdbp_result_nodes(const mdbp_result* result) {
  return result ? result->record.nodes_processed : 0;
}

long mdbp_result_iterations(const mdbp_result* result) {
  return result ? result->record.iterations : 0;
}

long mdbp_result_columns(const mdbp_result* result) {
  return result ? result->record.columns_generated : 0;
}

int mdbp_result_equality_size(const mdbp_result* result) {
  return result ? result->record.equality_size : 0;
}

double mdbp_result_wall_seconds(const mdbp_result* result) {
  return result ? result->record.wall_seconds : 0.0;
}

int mdbp_result_log_length(const mdbp_result* result) {
  return result ? static_cast<int>(result->record.log.size()) : 0;
}

double mdbp_result_root_upper_bound(const mdbp_result* result) {
  return result ? result->root_upper : -std::numeric_limits<double>::infinity();
}

double mdbp_result_root_lower_bound(const mdbp_result* result) {
  return result ? result->root_lower : -std::numeric_limits<double>::infinity();
}

void mdbp_result_set_brute_force(mdbp_result* result, double value) {
  if (result) result->record.brute_force_objective = value;
}

mdbp_status mdbp_result_json(const mdbp_result* result, char** out) {
  if (result == nullptr || out == nullptr) return fail(MDBP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const std::string text = mdbp::to_json(result->record);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

mdbp_status mdbp_result_write_json(const mdbp_result* result, const char* path) {
  if (result == nullptr) return fail(MDBP_INVALID_ARGUMENT, "null argument");
  std::string text;
  const mdbp_status s = guarded([&] { text = mdbp::to_json(result->record); });
  return s != MDBP_OK ? s : write_file(path, text);
}

mdbp_status mdbp_result_write_log(const mdbp_result* result, const char* path) {
  if (result == nullptr) return fail(MDBP_INVALID_ARGUMENT, "null argument");
  std::ostringstream csv;
  const mdbp_status s = guarded([&] { mdbp::write_iteration_csv(csv, result->record.log); });
  return s != MDBP_OK ? s : write_file(path, csv.str());
}

void mdbp_string_free(char* s) { delete[] s; }

}  // extern "C"
