// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

// Command-line front end. Talks to the solver only through the C API.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "mdbp/mdbp.h"

namespace {

constexpr int kExitOptimal = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;

struct Graph {
  mdbp_graph* p = nullptr;
  ~Graph() { mdbp_graph_free(p); }
};

struct Result {
  mdbp_result* p = nullptr;
  ~Result() { mdbp_result_free(p); }
};

int report_error(const char* what, mdbp_status s) {
  std::fprintf(stderr, "mdbp: %s: %s (%s)\n", what, mdbp_last_error(), mdbp_status_name(s));
  return kExitError;
}

void print_event(const mdbp_event* e, void*) {
  std::fprintf(stderr, "node %d iter %d obj %.6f subproblems %d bb-nodes %ld new %d promoted %d |V=| %d%s\n",
               e->node, e->iteration, e->master_objective, e->subproblems, e->pricing_nodes,
               e->columns_added, e->promoted, e->equality_size,
               e->artificial_active ? " (artificial)" : "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum modularity density partitioning by branch and price"};
  std::string input;
  std::string format;
  bool spr = true;
  bool mcp = true;
  double time_limit = 3600.0;
  std::string output;
  std::string log_path;
  bool brute_force_check = false;
  bool prove_optimal = false;
  bool progress = false;

  app.add_option("--input", input, "Instance file")->required();
  app.add_option("--format", format, "edgelist or gml (default: from the file extension)")
      ->check(CLI::IsMember({"edgelist", "gml"}));
  app.add_option("--spr", spr, "Set-packing relaxation on|off")
      ->transform(CLI::CheckedTransformer(std::map<std::string, bool>{{"on", true}, {"off", false}}))
      ->default_str("on");
  app.add_option("--mcp", mcp, "Several disjoint columns per pricing round on|off")
      ->transform(CLI::CheckedTransformer(std::map<std::string, bool>{{"on", true}, {"off", false}}))
      ->default_str("on");
  app.add_option("--time-limit", time_limit, "Seconds before falling back to a lower bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--output", output, "Write the JSON report here");
  app.add_option("--log", log_path, "Write one CSV row per master solve here");
  app.add_flag("--brute-force-check", brute_force_check,
               "Compare with exhaustive enumeration (at most 12 vertices)");
  app.add_flag("--prove-optimal-pricing", prove_optimal,
               "Solve every pricing problem to optimality");
  app.add_flag("--progress", progress, "Print one line per master solve on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (format.empty()) {
    format = std::filesystem::path(input).extension() == ".gml" ? "gml" : "edgelist";
  }

  Graph graph;
  if (const mdbp_status s = mdbp_graph_load(input.c_str(), format.c_str(), &graph.p);
      s != MDBP_OK) {
    return report_error("cannot load instance", s);
  }
  const int n = mdbp_graph_vertex_count(graph.p);
  if (brute_force_check && n > 12) {
    std::fprintf(stderr, "mdbp: --brute-force-check needs at most 12 vertices, got %d\n", n);
    return kExitError;
  }

  mdbp_config config;
  mdbp_config_init(&config);
  config.spr = spr;
  config.mcp = mcp;
  config.time_limit = time_limit;
  config.prove_optimal_pricing = prove_optimal;

  const std::string name = std::filesystem::path(input).stem().string();
  Result result;
  if (const mdbp_status s = mdbp_solve(graph.p, &config, name.c_str(),
                                       progress ? print_event : nullptr, nullptr, &result.p);
      s != MDBP_OK) {
    return report_error("solve failed", s);
  }

  const bool timed_out = mdbp_result_status(result.p) == MDBP_SOLVE_TIMED_OUT_WITH_LOWER_BOUND;
  const double d = mdbp_result_objective(result.p);
  std::printf("instance      %s (n=%d, m=%d)\n", name.c_str(), n, mdbp_graph_edge_count(graph.p));
  std::printf("status        %s\n", timed_out ? "TimedOutWithLowerBound" : "Optimal");
  std::printf("D             %.5f\n", d);
  std::printf("communities   %d\n", mdbp_result_community_count(result.p));
  std::printf("tree nodes    %d\n", mdbp_result_nodes(result.p));
  std::printf("iterations    %ld\n", mdbp_result_iterations(result.p));
  std::printf("columns       %ld\n", mdbp_result_columns(result.p));
  std::printf("|V=|          %d\n", mdbp_result_equality_size(result.p));
  std::printf("seconds       %.2f\n", mdbp_result_wall_seconds(result.p));
  for (int k = 0; k < mdbp_result_community_count(result.p); ++k) {
    std::printf("  C%d:", k + 1);
    const int32_t* members = mdbp_result_community(result.p, k);
    for (int i = 0; i < mdbp_result_community_size(result.p, k); ++i) {
      std::printf(" %s", mdbp_graph_label(graph.p, members[i]));
    }
    std::printf("\n");
  }

  int exit_code = timed_out ? kExitTimeout : kExitOptimal;
  if (brute_force_check) {
    double best = 0.0;
    if (const mdbp_status s = mdbp_brute_force(graph.p, &best, nullptr); s != MDBP_OK) {
      return report_error("brute force failed", s);
    }
    mdbp_result_set_brute_force(result.p, best);
    const bool agree = std::abs(best - d) <= 1e-7;
    std::printf("brute force   %.5f (%s)\n", best, agree ? "agrees" : "DISAGREES");
    if (!agree && !timed_out) exit_code = kExitError;
  }

  if (!output.empty()) {
    if (const mdbp_status s = mdbp_result_write_json(result.p, output.c_str()); s != MDBP_OK) {
      return report_error("cannot write report", s);
    }
  }
  if (!log_path.empty()) {
    if (const mdbp_status s = mdbp_result_write_log(result.p, log_path.c_str()); s != MDBP_OK) {
      return report_error("cannot write log", s);
    }
  }
  return exit_code;
}
