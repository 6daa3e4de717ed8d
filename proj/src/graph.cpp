// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include "mdbp/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mdbp/error.hpp"

namespace mdbp {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kTooFewVertices: return "TooFewVertices";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kEmptyCommunity: return "EmptyCommunity";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kNoEdges: return "NoEdges";
    case ErrorCode::kGraphTooLarge: return "GraphTooLarge";
    case ErrorCode::kUnknownRow: return "UnknownRow";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kNumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::kAllVerticesExcluded: return "AllVerticesExcluded";
    case ErrorCode::kInvalidBranchSet: return "InvalidBranchSet";
    case ErrorCode::kNoFractionalPair: return "NoFractionalPair";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 2) {
    throw Error(ErrorCode::kTooFewVertices,
                "graph needs at least 2 vertices, got " + std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop on vertex " + std::to_string(e.u));
    }
    const Edge normalized{std::min(e.u, e.v), std::max(e.u, e.v)};
    g.edges_.push_back(normalized);
    g.adjacency_[normalized.u].push_back(normalized.v);
    g.adjacency_[normalized.v].push_back(normalized.u);
  }
  g.degrees_.resize(n);
  for (int v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (auto dup = std::adjacent_find(adj.begin(), adj.end()); dup != adj.end()) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge {" + std::to_string(std::min(v, *dup)) + "," +
                      std::to_string(std::max(v, *dup)) + "}");
    }
    g.degrees_[v] = static_cast<int>(adj.size());
  }
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

int internal_edge_count(const Graph& g, std::span<const VertexId> members) {
  int twice = 0;
  for (VertexId v : members) {
    for (VertexId w : g.neighbors(v)) {
      if (std::binary_search(members.begin(), members.end(), w)) ++twice;
    }
  }
  return twice / 2;
}

double contribution(const Graph& g, std::span<const VertexId> members) {
  if (members.empty()) {
    throw Error(ErrorCode::kEmptyCommunity, "community has no members");
  }
  long long degree_sum = 0;
  for (VertexId v : members) degree_sum += g.degree(v);
  const long long numerator = 4LL * internal_edge_count(g, members) - degree_sum;
  return static_cast<double>(numerator) / static_cast<double>(members.size());
}

Community::Community(const Graph& g, std::vector<VertexId> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::kEmptyCommunity, "community has no members");
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorCode::kInvalidPartition, "community lists a vertex twice");
  }
  if (members_.front() < 0 || members_.back() >= g.vertex_count()) {
    throw Error(ErrorCode::kVertexOutOfRange, "community member out of range");
  }
  contribution_ = mdbp::contribution(g, members_);
}

bool Community::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Partition::Partition(const Graph& g, std::vector<Community> communities)
    : communities_(std::move(communities)) {
  std::vector<char> seen(g.vertex_count(), 0);
  for (const Community& c : communities_) {
    for (VertexId v : c.members()) {
      if (seen[v]) {
        throw Error(ErrorCode::kInvalidPartition,
                    "vertex " + std::to_string(v) + " is in two communities");
      }
      seen[v] = 1;
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) {
      throw Error(ErrorCode::kInvalidPartition,
                  "vertex " + std::to_string(v) + " is not covered");
    }
  }
}

std::vector<int> Partition::assignment(int vertex_count) const {
  std::vector<int> label(vertex_count, -1);
  for (int k = 0; k < size(); ++k) {
    for (VertexId v : communities_[k].members()) label[v] = k;
  }
  return label;
}

Partition partition_from_labels(const Graph& g, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != g.vertex_count()) {
    throw Error(ErrorCode::kInvalidPartition, "label vector length mismatch");
  }
  std::vector<std::vector<VertexId>> blocks;
  std::vector<int> block_of_label;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int label = labels[v];
    if (label < 0) {
      throw Error(ErrorCode::kInvalidPartition, "negative block label");
    }
    if (label >= static_cast<int>(block_of_label.size())) {
      block_of_label.resize(label + 1, -1);
    }
    if (block_of_label[label] < 0) {
      block_of_label[label] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of_label[label]].push_back(v);
  }
  std::vector<Community> communities;
  communities.reserve(blocks.size());
  for (auto& b : blocks) communities.emplace_back(g, std::move(b));
  return Partition(g, std::move(communities));
}

double modularity_density(const Graph& g, const Partition& p) {
  double total = 0.0;
  for (const Community& c : p.communities()) total += contribution(g, c.members());
  return total;
}

double modularity(const Graph& g, const Partition& p) {
  const int m = g.edge_count();
  if (m == 0) {
    throw Error(ErrorCode::kNoEdges, "modularity is undefined without edges");
  }
  double q = 0.0;
  for (const Community& c : p.communities()) {
    long long degree_sum = 0;
    for (VertexId v : c.members()) degree_sum += g.degree(v);
    const double share = static_cast<double>(degree_sum) / (2.0 * m);
    q += static_cast<double>(internal_edge_count(g, c.members())) / m -
         share * share;
  }
  return q;
}

BruteForceResult brute_force_optimum(const Graph& g, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n) {
    throw Error(ErrorCode::kGraphTooLarge,
                "brute force limited to " + std::to_string(max_n) +
                    " vertices, graph has " + std::to_string(n));
  }
  // rgs[i] is the block of vertex i; prefix_max[i] = max(rgs[0..i]).
  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);
  std::vector<int> best_rgs = rgs;
  std::vector<long long> internal(n), degree_sum(n), size(n);
  double best = -std::numeric_limits<double>::infinity();

  const auto evaluate = [&]() {
    const int blocks = prefix_max[n - 1] + 1;
    std::fill_n(internal.begin(), blocks, 0);
    std::fill_n(degree_sum.begin(), blocks, 0);
    std::fill_n(size.begin(), blocks, 0);
    for (int v = 0; v < n; ++v) {
      degree_sum[rgs[v]] += g.degree(v);
      ++size[rgs[v]];
    }
    for (const Edge& e : g.edges()) {
      if (rgs[e.u] == rgs[e.v]) ++internal[rgs[e.u]];
    }
    double value = 0.0;
    for (int k = 0; k < blocks; ++k) {
      value += static_cast<double>(4 * internal[k] - degree_sum[k]) /
               static_cast<double>(size[k]);
    }
    return value;
  };

  while (true) {
    const double value = evaluate();
    if (value > best + 1e-9) {
      best = value;
      best_rgs = rgs;
    }
    // Advance to the next restricted-growth string in lexicographic order.
    int i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return {partition_from_labels(g, best_rgs), best};
}

}  // namespace mdbp
