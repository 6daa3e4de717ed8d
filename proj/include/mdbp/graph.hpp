// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mdbp {

using VertexId = std::int32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  /// Validates and normalizes the edge list (endpoints stored with u < v,
  /// input order preserved). Throws Error on self-loops, duplicates,
  /// out-of-range endpoints or n < 2.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const int> degrees() const noexcept { return degrees_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  bool adjacent(VertexId u, VertexId v) const;

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<VertexId>> adjacency_;  // sorted
};

/// Number of edges with both endpoints in `members` (which must be sorted
/// and duplicate free).
int internal_edge_count(const Graph& g, std::span<const VertexId> members);

/// Contribution of a vertex subset to the modularity density:
/// (4 |E(C)| - sum of degrees) / |C|.
double contribution(const Graph& g, std::span<const VertexId> members);

/// A non-empty vertex subset together with its contribution.
class Community {
 public:
  /// Sorts the members, rejects empty, duplicate or out-of-range ids, and
  /// computes the contribution from the graph.
  Community(const Graph& g, std::vector<VertexId> members);

  std::span<const VertexId> members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  double contribution() const noexcept { return contribution_; }
  bool contains(VertexId v) const;

  friend bool operator==(const Community& a, const Community& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<VertexId> members_;
  double contribution_ = 0.0;
};

/// A set of pairwise disjoint communities covering every vertex.
class Partition {
 public:
  /// Throws Error(kInvalidPartition) on overlap or an uncovered vertex.
  Partition(const Graph& g, std::vector<Community> communities);

  std::span<const Community> communities() const noexcept { return communities_; }
  int size() const noexcept { return static_cast<int>(communities_.size()); }

  /// Community index of every vertex.
  std::vector<int> assignment(int vertex_count) const;

 private:
  std::vector<Community> communities_;
};

/// Builds a partition from a per-vertex block label vector.
Partition partition_from_labels(const Graph& g, std::span<const int> labels);

double modularity_density(const Graph& g, const Partition& p);

/// Newman modularity; requires at least one edge.
double modularity(const Graph& g, const Partition& p);

struct BruteForceResult {
  Partition partition;
  double value;
};

inline constexpr int kDefaultBruteForceLimit = 12;

/// Enumerates every set partition of V through restricted-growth strings and
/// returns the first maximizer of D in lexicographic order.
BruteForceResult brute_force_optimum(const Graph& g,
                                     int max_n = kDefaultBruteForceLimit);

}  // namespace mdbp
