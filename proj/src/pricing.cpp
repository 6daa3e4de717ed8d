// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include "mdbp/pricing.hpp"

#include <algorithm>
#include <string>

#include "mdbp/error.hpp"

namespace mdbp {

void BranchSet::validate(int vertex_count) const {
  const auto check = [&](const VertexPair& p) {
    if (p.first < 0 || p.second < 0 || p.first >= vertex_count ||
        p.second >= vertex_count || p.first == p.second) {
      throw Error(ErrorCode::kInvalidBranchSet,
                  "bad branch pair {" + std::to_string(p.first) + "," +
                      std::to_string(p.second) + "}");
    }
  };
  const auto normal = [](VertexPair p) {
    if (p.first > p.second) std::swap(p.first, p.second);
    return p;
  };
  for (const VertexPair& p : same) check(p);
  for (const VertexPair& p : differ) {
    check(p);
    for (const VertexPair& q : same) {
      if (normal(p) == normal(q)) {
        throw Error(ErrorCode::kInvalidBranchSet, "pair is both same and differ");
      }
    }
  }
}

bool BranchSet::admits(const Community& c) const {
  for (const auto& [a, b] : same) {
    if (c.contains(a) != c.contains(b)) return false;
  }
  for (const auto& [a, b] : differ) {
    if (c.contains(a) && c.contains(b)) return false;
  }
  return true;
}

double reduced_cost(const Community& c, std::span<const double> lambda) {
  double rc = c.contribution();
  for (VertexId v : c.members()) rc -= lambda[v];
  return rc;
}

MixedIntegerProgram build_pricing_milp(const Graph& g, std::span<const double> lambda,
                                       const BranchSet& branches,
                                       std::span<const VertexId> excluded) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (static_cast<int>(lambda.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "one dual price per vertex expected");
  }
  branches.validate(n);
  std::vector<char> out(n, 0);
  for (VertexId v : excluded) {
    if (v < 0 || v >= n) throw Error(ErrorCode::kVertexOutOfRange, "excluded vertex out of range");
    out[v] = 1;
  }
  if (std::count(out.begin(), out.end(), 1) == n) {
    throw Error(ErrorCode::kAllVerticesExcluded, "every vertex is excluded");
  }

  const PricingLayout at{n, m};
  MixedIntegerProgram mip;
  LinearProgram& lp = mip.lp;
  for (int i = 0; i < n; ++i) {
    mip.mark_binary(lp.add_variable(-lambda[i], 0.0, out[i] ? 0.0 : 1.0, "x" + std::to_string(i)));
  }
  for (int i = 0; i < n; ++i) {
    lp.add_variable(-g.degree(i), 0.0, kInfinity, "y" + std::to_string(i));
  }
  for (int e = 0; e < m; ++e) {
    lp.add_variable(4.0, -kInfinity, kInfinity, "w" + std::to_string(e));
  }
  lp.add_variable(0.0, -kInfinity, kInfinity, "s");

  std::vector<Coefficient> sum_y;
  for (int i = 0; i < n; ++i) sum_y.push_back({at.y(i), 1.0});
  lp.add_row(RowSense::kEqual, 1.0, sum_y, "sum_y");
  for (int i = 0; i < n; ++i) {
    const Coefficient lo[] = {{at.s(), 1.0}, {at.y(i), -1.0}};
    lp.add_row(RowSense::kGreaterEqual, 0.0, lo);
    const Coefficient hi[] = {{at.s(), 1.0}, {at.y(i), -1.0}, {at.x(i), 1.0}};
    lp.add_row(RowSense::kLessEqual, 1.0, hi);
    const Coefficient link[] = {{at.y(i), 1.0}, {at.x(i), -1.0}};
    lp.add_row(RowSense::kLessEqual, 0.0, link);
  }
  const auto edges = g.edges();
  for (int e = 0; e < m; ++e) {
    const Coefficient wu[] = {{at.w(e), 1.0}, {at.y(edges[e].u), -1.0}};
    lp.add_row(RowSense::kLessEqual, 0.0, wu);
    const Coefficient wv[] = {{at.w(e), 1.0}, {at.y(edges[e].v), -1.0}};
    lp.add_row(RowSense::kLessEqual, 0.0, wv);
  }
  for (const auto& [a, b] : branches.same) {
    const Coefficient row[] = {{at.x(a), 1.0}, {at.x(b), -1.0}};
    lp.add_row(RowSense::kEqual, 0.0, row, "same");
  }
  for (const auto& [a, b] : branches.differ) {
    const Coefficient row[] = {{at.x(a), 1.0}, {at.x(b), 1.0}};
    lp.add_row(RowSense::kLessEqual, 1.0, row, "differ");
  }
  return mip;
}

namespace {

std::optional<Community> column_from(const Graph& g, const MilpSolution& sol) {
  std::vector<VertexId> members;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (sol.values[i] > 0.5) members.push_back(i);
  }
  if (members.empty()) return std::nullopt;
  return Community(g, std::move(members));
}

}  // namespace

ColumnSearch find_column(const Graph& g, std::span<const double> lambda,
                         const BranchSet& branches, std::span<const VertexId> excluded,
                         const PricingOptions& options) {
  const MixedIntegerProgram mip = build_pricing_milp(g, lambda, branches, excluded);
  ColumnSearch out;
  const auto accept = [&](const MilpSolution& sol) {
    out.nodes += sol.nodes;
    if (sol.status == MilpStatus::kTimedOut) {
      out.timed_out = true;
      return true;
    }
    if (sol.values.empty()) return true;
    auto c = column_from(g, sol);
    if (c && reduced_cost(*c, lambda) > options.epsilon) {
      out.column = std::move(c);
      return true;
    }
    return false;
  };

  if (options.prove_optimal) {
    accept(milp_solve(mip, SearchMode::prove_optimal(), options.limits));
    return out;
  }
  const MilpSolution first =
      milp_solve(mip, SearchMode::first_incumbent_above(options.epsilon), options.limits);
  if (accept(first)) return out;
  // The incumbent's exact reduced cost fell to the threshold through rounding
  // in the relaxation; settle it with an exact search.
  const MilpSolution best = milp_solve(mip, SearchMode::prove_optimal(), options.limits);
  accept(best);
  return out;
}

PricingResult multiple_cutting_planes(const Graph& g, std::span<const double> lambda,
                                      const BranchSet& branches, bool mcp,
                                      const PricingOptions& options) {
  const int n = g.vertex_count();
  PricingResult result;
  std::vector<VertexId> excluded;
  while (static_cast<int>(excluded.size()) < n) {
    const ColumnSearch found = find_column(g, lambda, branches, excluded, options);
    ++result.subproblems;
    result.nodes += found.nodes;
    if (found.timed_out) {
      result.timed_out = true;
      return result;
    }
    if (!found.column) {
      result.exhausted = true;
      return result;
    }
    for (VertexId v : found.column->members()) excluded.push_back(v);
    result.columns.push_back(*found.column);
    if (!mcp) return result;
  }
  return result;
}

}  // namespace mdbp
