// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include "mdbp/milp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mdbp/error.hpp"

namespace mdbp {

const char* to_string(MilpStatus status) noexcept {
  switch (status) {
    case MilpStatus::kOptimal: return "Optimal";
    case MilpStatus::kIncumbentFound: return "IncumbentFound";
    case MilpStatus::kInfeasible: return "Infeasible";
    case MilpStatus::kNoSolutionAbove: return "NoSolutionAbove";
    case MilpStatus::kTimedOut: return "TimedOut";
  }
  return "?";
}

namespace {

struct Node {
  // Fixings along the path from the root, as (binary slot, value).
  std::vector<std::pair<int, signed char>> fixings;
  double parent_bound;
};

}  // namespace

MilpSolution milp_solve(const MixedIntegerProgram& mip, SearchMode mode,
                        const MilpLimits& limits) {
  const LinearProgram& lp = mip.lp;
  const int nb = static_cast<int>(mip.binaries.size());
  std::vector<double> root_lower(nb), root_upper(nb);
  for (int k = 0; k < nb; ++k) {
    const int v = mip.binaries[k];
    if (v < 0 || v >= lp.variable_count()) {
      throw Error(ErrorCode::kUnknownVariable, "binary id " + std::to_string(v));
    }
    root_lower[k] = std::ceil(lp.lower(v) - kIntegralityTolerance);
    root_upper[k] = std::floor(lp.upper(v) + kIntegralityTolerance);
    if (root_lower[k] < 0.0 || root_upper[k] > 1.0) {
      throw Error(ErrorCode::kInvalidModel,
                  "binary variable " + lp.variable_name(v) + " has bounds outside [0,1]");
    }
  }
  const bool early = mode.kind == SearchMode::Kind::kFirstIncumbentAbove;
  if (early && !std::isfinite(mode.threshold)) {
    throw Error(ErrorCode::kInvalidArgument, "threshold must be finite");
  }

  SimplexSolver solver(lp);
  std::vector<signed char> applied(nb, -1);
  for (int k = 0; k < nb; ++k) solver.set_bounds(mip.binaries[k], root_lower[k], root_upper[k]);

  MilpSolution result;
  double incumbent = -kInfinity;
  double pruned_bound = -kInfinity;  // max relaxation value of pruned subtrees
  std::vector<Node> stack;
  stack.push_back({{}, kInfinity});
  std::vector<signed char> want(nb);

  const auto open_bound = [&] {
    double b = std::max(incumbent, pruned_bound);
    for (const Node& node : stack) b = std::max(b, node.parent_bound);
    return b;
  };
  const auto finish = [&](MilpStatus status, double bound) {
    result.status = status;
    result.bound = bound;
    result.lp_iterations = solver.total_iterations();
    return result;
  };

  while (!stack.empty()) {
    if ((limits.node_limit > 0 && result.nodes >= limits.node_limit) ||
        (limits.deadline && std::chrono::steady_clock::now() >= *limits.deadline)) {
      return finish(MilpStatus::kTimedOut, open_bound());
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    ++result.nodes;

    std::fill(want.begin(), want.end(), -1);
    for (const auto& [slot, value] : node.fixings) want[slot] = value;
    for (int k = 0; k < nb; ++k) {
      if (want[k] == applied[k]) continue;
      const int v = mip.binaries[k];
      if (want[k] < 0) solver.set_bounds(v, root_lower[k], root_upper[k]);
      else solver.set_bounds(v, want[k], want[k]);
      applied[k] = want[k];
    }

    const LpSolution relax = solver.solve(false);
    if (relax.status == LpStatus::kInfeasible) continue;
    if (relax.status == LpStatus::kUnbounded) {
      throw Error(ErrorCode::kInvalidModel, "unbounded relaxation");
    }
    const double z = relax.objective;
    const double cutoff = early ? mode.threshold + kIntegralityTolerance : incumbent + kPruneTolerance;
    if (z <= cutoff) {
      pruned_bound = std::max(pruned_bound, z);
      continue;
    }

    int branch = -1;
    double best_frac = kIntegralityTolerance;
    for (int k = 0; k < nb; ++k) {
      const double x = relax.values[mip.binaries[k]];
      const double frac = std::min(x - std::floor(x), std::ceil(x) - x);
      if (frac > best_frac) {
        best_frac = frac;
        branch = k;
      }
    }

    if (branch < 0) {
      incumbent = z;
      result.objective = z;
      result.values = relax.values;
      for (int v : mip.binaries) result.values[v] = std::round(result.values[v]);
      if (early) return finish(MilpStatus::kIncumbentFound, std::max(z, open_bound()));
      continue;
    }

    Node up{node.fixings, z};
    up.fixings.emplace_back(branch, 1);
    node.fixings.emplace_back(branch, 0);
    node.parent_bound = z;
    stack.push_back(std::move(up));
    stack.push_back(std::move(node));
  }

  if (early) {
    return finish(MilpStatus::kNoSolutionAbove, pruned_bound);
  }
  if (incumbent == -kInfinity) return finish(MilpStatus::kInfeasible, -kInfinity);
  return finish(MilpStatus::kOptimal, incumbent);
}

}  // namespace mdbp
