// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "mdbp/mdbp.h"

namespace {

const int32_t kBridged[] = {0, 1, 1, 2, 0, 2, 3, 4, 4, 5, 3, 5, 2, 3};

void on_event(const mdbp_event*, void* user) { ++*static_cast<int*>(user); }

}  // namespace

TEST_CASE("graph construction reports status codes") {
  mdbp_graph* g = nullptr;
  REQUIRE(mdbp_graph_from_edges(6, kBridged, 7, &g) == MDBP_OK);
  CHECK(mdbp_graph_vertex_count(g) == 6);
  CHECK(mdbp_graph_edge_count(g) == 7);
  CHECK(std::string(mdbp_graph_label(g, 5)) == "5");
  CHECK(mdbp_graph_label(g, 6) == nullptr);
  mdbp_graph_free(g);

  const int32_t loop[] = {1, 1};
  mdbp_graph* bad = nullptr;
  CHECK(mdbp_graph_from_edges(3, loop, 1, &bad) == MDBP_SELF_LOOP);
  CHECK(bad == nullptr);
  CHECK(std::strlen(mdbp_last_error()) > 0);
  CHECK(std::string(mdbp_status_name(MDBP_SELF_LOOP)) == "SelfLoop");
  CHECK(std::string(mdbp_status_name(MDBP_IO_ERROR)) == "IoError");

  CHECK(mdbp_graph_parse("a b\nb c\n", "edgelist", &g) == MDBP_OK);
  CHECK(mdbp_graph_edge_count(g) == 2);
  CHECK(std::string(mdbp_graph_label(g, 2)) == "c");
  mdbp_graph_free(g);
  CHECK(mdbp_graph_parse("a b\n", "pajek", &g) == MDBP_INVALID_ARGUMENT);
  CHECK(mdbp_graph_parse("graph [ edge [ source 1 ] ]", "gml", &g) == MDBP_PARSE_ERROR);
  CHECK(mdbp_graph_load("/nonexistent/graph.txt", "edgelist", &g) == MDBP_IO_ERROR);
}

TEST_CASE("solve, inspect and score through the C API") {
  mdbp_graph* g = nullptr;
  REQUIRE(mdbp_graph_from_edges(6, kBridged, 7, &g) == MDBP_OK);
  mdbp_config cfg;
  mdbp_config_init(&cfg);
  CHECK(cfg.spr == 1);
  CHECK(cfg.mcp == 1);
  CHECK(cfg.time_limit == 3600.0);

  int events = 0;
  mdbp_result* r = nullptr;
  REQUIRE(mdbp_solve(g, &cfg, "bridged", on_event, &events, &r) == MDBP_OK);
  CHECK(mdbp_result_status(r) == MDBP_SOLVE_OPTIMAL);
  CHECK(mdbp_result_objective(r) == doctest::Approx(10.0 / 3.0));
  CHECK(mdbp_result_community_count(r) == 2);
  CHECK(events == mdbp_result_log_length(r));
  CHECK(mdbp_result_iterations(r) == mdbp_result_log_length(r));
  CHECK(mdbp_result_nodes(r) == 1);
  CHECK(mdbp_result_community(r, 2) == nullptr);

  std::vector<int> labels(6, -1);
  for (int k = 0; k < mdbp_result_community_count(r); ++k) {
    const int32_t* members = mdbp_result_community(r, k);
    for (int i = 0; i < mdbp_result_community_size(r, k); ++i) labels[members[i]] = k;
  }
  double rescored = 0.0;
  REQUIRE(mdbp_score(g, labels.data(), &rescored) == MDBP_OK);
  CHECK(rescored == mdbp_result_objective(r));

  double best = 0.0;
  std::vector<int> best_labels(6);
  REQUIRE(mdbp_brute_force(g, &best, best_labels.data()) == MDBP_OK);
  CHECK(best == doctest::Approx(mdbp_result_objective(r)));
  mdbp_result_set_brute_force(r, best);

  char* json = nullptr;
  REQUIRE(mdbp_result_json(r, &json) == MDBP_OK);
  CHECK(std::string(json).find("\"brute_force_objective\"") != std::string::npos);
  CHECK(std::string(json).find("\"instance\": \"bridged\"") != std::string::npos);
  mdbp_string_free(json);

  CHECK(mdbp_result_write_json(r, "/nonexistent/dir/out.json") == MDBP_IO_ERROR);
  mdbp_result_free(r);

  cfg.time_limit = 0.0;
  CHECK(mdbp_solve(g, &cfg, "x", nullptr, nullptr, &r) == MDBP_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  mdbp_graph_free(g);
}

TEST_CASE("brute force refuses large graphs") {
  std::vector<int32_t> path;
  for (int v = 0; v + 1 < 13; ++v) {
    path.push_back(v);
    path.push_back(v + 1);
  }
  mdbp_graph* g = nullptr;
  REQUIRE(mdbp_graph_from_edges(13, path.data(), 12, &g) == MDBP_OK);
  double best = 0.0;
  CHECK(mdbp_brute_force(g, &best, nullptr) == MDBP_GRAPH_TOO_LARGE);
  mdbp_graph_free(g);
}
