// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mdbp/graph.hpp"
#include "mdbp/milp.hpp"

namespace mdbp {

using VertexPair = std::pair<VertexId, VertexId>;

/// Pairs forced into one community and pairs forced apart at a tree node.
struct BranchSet {
  std::vector<VertexPair> same;
  std::vector<VertexPair> differ;

  /// Throws Error(kInvalidBranchSet) for out-of-range or repeated vertices in
  /// a pair, or a pair that is both same and differ.
  void validate(int vertex_count) const;
  /// True if the member set respects every pair.
  bool admits(const Community& c) const;
};

inline constexpr double kPricingEpsilon = 1e-6;

/// Variable layout of the pricing model: x_i at i, y_i at n + i, w_e at
/// 2n + e (edge order of the graph) and s at 2n + m.
struct PricingLayout {
  int n;
  int m;
  int x(int i) const { return i; }
  int y(int i) const { return n + i; }
  int w(int e) const { return 2 * n + e; }
  int s() const { return 2 * n + m; }
};

/// The linearized pricing problem: maximize 4 sum w - sum d_i y_i -
/// sum lambda_i x_i where x selects the community, y_i = x_i / |C| and w_e is
/// the smaller y of the edge's endpoints. Excluded vertices have x fixed at 0.
MixedIntegerProgram build_pricing_milp(const Graph& g, std::span<const double> lambda,
                                       const BranchSet& branches,
                                       std::span<const VertexId> excluded);

struct PricingOptions {
  bool prove_optimal = false;
  double epsilon = kPricingEpsilon;
  MilpLimits limits;
};

struct ColumnSearch {
  std::optional<Community> column;
  bool timed_out = false;
  long nodes = 0;
};

/// Searches for a community with reduced cost f_C - sum lambda above epsilon.
/// The returned column's contribution is recomputed from the graph.
ColumnSearch find_column(const Graph& g, std::span<const double> lambda,
                         const BranchSet& branches, std::span<const VertexId> excluded,
                         const PricingOptions& options = {});

struct PricingResult {
  std::vector<Community> columns;  // pairwise disjoint
  bool exhausted = false;          // the last subproblem proved no column exists
  bool timed_out = false;
  int subproblems = 0;
  long nodes = 0;
};

/// Repeated pricing, excluding the vertices of every column found so far.
/// With `mcp` off the loop stops after the first column.
PricingResult multiple_cutting_planes(const Graph& g, std::span<const double> lambda,
                                      const BranchSet& branches, bool mcp,
                                      const PricingOptions& options = {});

double reduced_cost(const Community& c, std::span<const double> lambda);

}  // namespace mdbp
