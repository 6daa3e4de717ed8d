// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <random>
#include <vector>

#include "mdbp/graph.hpp"

namespace mdbp::testing {

// Zachary's karate club, 0-based.
inline Graph karate_graph() {
  static const std::vector<Edge> edges = {
      {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},
      {0, 8},   {0, 10},  {0, 11},  {0, 12},  {0, 13},  {0, 17},  {0, 19},
      {0, 21},  {0, 31},  {1, 2},   {1, 3},   {1, 7},   {1, 13},  {1, 17},
      {1, 19},  {1, 21},  {1, 30},  {2, 3},   {2, 7},   {2, 8},   {2, 9},
      {2, 13},  {2, 27},  {2, 28},  {2, 32},  {3, 7},   {3, 12},  {3, 13},
      {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},  {6, 16},  {8, 30},
      {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33}, {15, 32},
      {15, 33}, {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32},
      {22, 33}, {23, 25}, {23, 27}, {23, 29}, {23, 32}, {23, 33}, {24, 25},
      {24, 27}, {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31},
      {28, 33}, {29, 32}, {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33},
      {32, 33}};
  return Graph::from_edges(34, edges);
}

inline Graph triangle_graph() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};
  return Graph::from_edges(3, edges);
}

// Two triangles {0,1,2} and {3,4,5} joined by the bridge {2,3}.
inline Graph bridged_triangles() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4},
                                   {4, 5}, {3, 5}, {2, 3}};
  return Graph::from_edges(6, edges);
}

inline Graph disjoint_triangles() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2},
                                   {3, 4}, {4, 5}, {3, 5}};
  return Graph::from_edges(6, edges);
}

// A 6-cycle with pendant paths whose set-partitioning relaxation has a
// fractional optimum (root UB 73/30 against D* = 12/5), so the tree branches.
inline Graph fractional_root_graph() {
  const std::vector<Edge> edges = {{0, 1}, {0, 6}, {1, 9}, {2, 8}, {2, 9},
                                   {3, 9}, {4, 7}, {5, 6}, {6, 8}, {7, 8}};
  return Graph::from_edges(10, edges);
}

// G(n, p) sample; when `connected` is set a random spanning tree is added
// first so the result is connected.
inline Graph random_graph(std::mt19937_64& rng, int n, double p,
                          bool connected = false) {
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  if (connected) {
    for (int v = 1; v < n; ++v) {
      std::uniform_int_distribution<int> pick(0, v - 1);
      const int u = pick(rng);
      has[u][v] = has[v][u] = 1;
      edges.push_back({u, v});
    }
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!has[u][v] && coin(rng)) {
        has[u][v] = has[v][u] = 1;
        edges.push_back({u, v});
      }
    }
  }
  return Graph::from_edges(n, edges);
}

// G(n, p) conditioned on connectivity by rejection.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached == n) return g;
  }
}

}  // namespace mdbp::testing
