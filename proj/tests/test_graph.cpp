// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include <doctest.h>

#include <random>
#include <vector>

#include "mdbp/error.hpp"
#include "mdbp/graph.hpp"
#include "support/fixtures.hpp"

using namespace mdbp;
using mdbp::testing::random_graph;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mdbp::Error");
  return ErrorCode::kInvalidArgument;
}

// (2|E(C)| - cut(C)) / |C| from explicit edge classification.
double contribution_via_cut(const Graph& g, const std::vector<VertexId>& members) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : members) in[v] = 1;
  int inside = 0, cut = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) ++inside;
    else if (in[e.u] || in[e.v]) ++cut;
  }
  return static_cast<double>(2 * inside - cut) / members.size();
}

}  // namespace

TEST_CASE("graph_from_edges builds degree tables and rejects bad input") {
  const std::vector<Edge> one = {{0, 1}};
  const Graph g = Graph::from_edges(2, one);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);

  const Graph karate = mdbp::testing::karate_graph();
  CHECK(karate.vertex_count() == 34);
  CHECK(karate.edge_count() == 78);
  int degree_sum = 0;
  for (int d : karate.degrees()) degree_sum += d;
  CHECK(degree_sum == 2 * 78);

  const std::vector<Edge> dup = {{0, 1}, {0, 1}};
  CHECK(code_of([&] { Graph::from_edges(3, dup); }) == ErrorCode::kDuplicateEdge);
  const std::vector<Edge> reversed = {{0, 1}, {1, 0}};
  CHECK(code_of([&] { Graph::from_edges(3, reversed); }) == ErrorCode::kDuplicateEdge);
  const std::vector<Edge> loop = {{1, 1}};
  CHECK(code_of([&] { Graph::from_edges(3, loop); }) == ErrorCode::kSelfLoop);
  const std::vector<Edge> far = {{0, 3}};
  CHECK(code_of([&] { Graph::from_edges(3, far); }) == ErrorCode::kVertexOutOfRange);
  CHECK(code_of([&] { Graph::from_edges(1, {}); }) == ErrorCode::kTooFewVertices);
}

TEST_CASE("contribution examples") {
  const std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}};
  const Graph g = Graph::from_edges(4, star);
  const std::vector<VertexId> center = {0};
  CHECK(contribution(g, center) == -3.0);

  const Graph tri = mdbp::testing::triangle_graph();
  const std::vector<VertexId> all3 = {0, 1, 2};
  CHECK(contribution(tri, all3) == 2.0);

  const Graph karate = mdbp::testing::karate_graph();
  std::vector<VertexId> everyone(34);
  for (int v = 0; v < 34; ++v) everyone[v] = v;
  CHECK(contribution(karate, everyone) == doctest::Approx(156.0 / 34.0).epsilon(1e-15));

  CHECK(code_of([&] { contribution(tri, {}); }) == ErrorCode::kEmptyCommunity);
}

TEST_CASE("modularity density examples") {
  const Graph g = mdbp::testing::bridged_triangles();
  const std::vector<int> one_block(6, 0);
  CHECK(modularity_density(g, partition_from_labels(g, one_block)) ==
        doctest::Approx(2.0 * 7 / 6));
  const std::vector<int> singletons = {0, 1, 2, 3, 4, 5};
  CHECK(modularity_density(g, partition_from_labels(g, singletons)) == -14.0);
  const std::vector<int> halves = {0, 0, 0, 1, 1, 1};
  CHECK(modularity_density(g, partition_from_labels(g, halves)) ==
        doctest::Approx(10.0 / 3.0));

  // Overlap and missing coverage are rejected.
  CHECK(code_of([&] {
          std::vector<Community> cs;
          cs.emplace_back(g, std::vector<VertexId>{0, 1, 2});
          cs.emplace_back(g, std::vector<VertexId>{2, 3, 4, 5});
          Partition p(g, std::move(cs));
        }) == ErrorCode::kInvalidPartition);
  CHECK(code_of([&] {
          std::vector<Community> cs;
          cs.emplace_back(g, std::vector<VertexId>{0, 1, 2});
          Partition p(g, std::move(cs));
        }) == ErrorCode::kInvalidPartition);
}

TEST_CASE("modularity examples") {
  const Graph g = mdbp::testing::bridged_triangles();
  const std::vector<int> one_block(6, 0);
  CHECK(modularity(g, partition_from_labels(g, one_block)) == doctest::Approx(0.0));

  const std::vector<Edge> single = {{0, 1}};
  const Graph edge = Graph::from_edges(2, single);
  const std::vector<int> apart = {0, 1};
  CHECK(modularity(edge, partition_from_labels(edge, apart)) == doctest::Approx(-0.5));

  const Graph empty = Graph::from_edges(3, {});
  const std::vector<int> labels = {0, 0, 1};
  CHECK(code_of([&] { modularity(empty, partition_from_labels(empty, labels)); }) ==
        ErrorCode::kNoEdges);
}

TEST_CASE("brute force optimum on tiny graphs") {
  const std::vector<Edge> single = {{0, 1}};
  const Graph edge = Graph::from_edges(2, single);
  const auto best_edge = brute_force_optimum(edge);
  CHECK(best_edge.value == doctest::Approx(1.0));
  CHECK(best_edge.partition.size() == 1);

  const auto best_tri = brute_force_optimum(mdbp::testing::triangle_graph());
  CHECK(best_tri.value == doctest::Approx(2.0));
  CHECK(best_tri.partition.size() == 1);

  // Both partitions of the edgeless pair score 0; the lexicographically first
  // restricted-growth string (one block) wins the tie.
  const Graph empty = Graph::from_edges(2, {});
  const auto best_empty = brute_force_optimum(empty);
  CHECK(best_empty.value == 0.0);
  CHECK(best_empty.partition.size() == 1);

  CHECK(code_of([&] { brute_force_optimum(Graph::from_edges(13, {})); }) ==
        ErrorCode::kGraphTooLarge);
}

TEST_CASE("property: contribution identities on random subsets") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 30)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    const Graph g = random_graph(rng, n, p);
    std::vector<VertexId> members;
    std::bernoulli_distribution take(0.4);
    for (int v = 0; v < n; ++v) {
      if (take(rng)) members.push_back(v);
    }
    if (members.empty()) members.push_back(0);
    const double f = contribution(g, members);
    CHECK(f == contribution_via_cut(g, members));
    CHECK(f <= static_cast<double>(members.size()) - 1.0);
  }
}

TEST_CASE("property: D is the sum of contributions and brute force dominates") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const Graph g = random_graph(rng, n, 0.4);
    const auto best = brute_force_optimum(g);
    CHECK(modularity_density(g, best.partition) == doctest::Approx(best.value).epsilon(1e-12));
    for (int k = 0; k < 20; ++k) {
      std::vector<int> labels(n);
      std::uniform_int_distribution<int> block(0, n - 1);
      for (int& l : labels) l = block(rng);
      const Partition p = partition_from_labels(g, labels);
      double sum = 0.0;
      for (const Community& c : p.communities()) sum += contribution_via_cut(g, {c.members().begin(), c.members().end()});
      CHECK(std::abs(modularity_density(g, p) - sum) <= 1e-12);
      CHECK(best.value >= modularity_density(g, p) - 1e-12);
    }
  }
}
