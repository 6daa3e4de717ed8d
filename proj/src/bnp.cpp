// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include "mdbp/bnp.hpp"

#include <cmath>

#include "mdbp/error.hpp"

namespace mdbp {

const char* to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kTimedOutWithLowerBound: return "TimedOutWithLowerBound";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

bool expired(const std::optional<Clock::time_point>& deadline) {
  return deadline && Clock::now() >= *deadline;
}

bool fractional(double u) {
  return u > kIntegralityTolerance && u < 1.0 - kIntegralityTolerance;
}

Partition partition_from_master(const Graph& g, const MasterSolution& master,
                                const ColumnPool& pool) {
  std::vector<Community> chosen;
  for (int c = 0; c < pool.size(); ++c) {
    if (master.values[c] > 0.5) chosen.push_back(pool[c]);
  }
  return Partition(g, std::move(chosen));
}

struct TreeNode {
  int id;
  BranchSet branches;
  ColumnPool pool;
};

}  // namespace

NodeBounds column_generation_loop(int node_id, ColumnPool& pool, const BranchSet& branches,
                                  EqualitySet& eq, const CgContext& ctx) {
  const Graph& g = ctx.graph;
  const int n = g.vertex_count();
  if (pool.size() == 0) throw Error(ErrorCode::kInvalidArgument, "empty column pool");
  if (!ctx.config.spr) {
    for (VertexId v = 0; v < n; ++v) eq.insert(v);
  }
  PricingOptions pricing;
  pricing.prove_optimal = ctx.config.prove_optimal_pricing;
  pricing.limits.deadline = ctx.deadline;

  NodeBounds out;
  while (true) {
    if (expired(ctx.deadline)) {
      out.timed_out = true;
      return out;
    }
    out.master = solve_master(g, pool, eq, ctx.config.spr);
    ++out.iterations;
    IterationEvent ev;
    ev.node = node_id;
    ev.iteration = out.iterations;
    ev.master_objective = out.master.objective;
    ev.artificial_active = out.master.artificial_active;

    const PricingResult priced =
        multiple_cutting_planes(g, out.master.duals, branches, ctx.config.mcp, pricing);
    ev.subproblems = priced.subproblems;
    ev.pricing_nodes = priced.nodes;
    for (const Community& c : priced.columns) {
      if (pool.add(c)) {
        ++ev.columns_added;
        if (ctx.all_columns) ctx.all_columns->add(c);
      } else {
        ++ev.duplicate_columns;
      }
    }
    if (priced.timed_out && ev.columns_added == 0) {
      ev.equality_size = eq.size();
      if (ctx.report) {
        ctx.report->log.push_back(ev);
        ++ctx.report->iterations;
      }
      if (ctx.on_event) ctx.on_event(ev);
      out.timed_out = true;
      return out;
    }

    // Duplicate-only pricing output counts as "no column" to guarantee
    // termination under dual noise.
    bool converged = false;
    if (ev.columns_added == 0) {
      const std::vector<VertexId> uncovered =
          ctx.config.spr ? uncovered_vertices(out.master, pool, eq) : std::vector<VertexId>{};
      for (VertexId v : uncovered) eq.insert(v);
      ev.promoted = static_cast<int>(uncovered.size());
      converged = uncovered.empty();
    }
    ev.equality_size = eq.size();
    if (ctx.report) {
      ctx.report->log.push_back(ev);
      ++ctx.report->iterations;
      ctx.report->columns_generated += ev.columns_added;
    }
    if (ctx.on_event) ctx.on_event(ev);
    if (converged) break;
  }

  if (out.master.artificial_active) {
    // No cover exists with the columns this node may use.
    return out;
  }
  out.upper_bound = out.master.objective;
  if (out.master.integral) {
    out.lower_partition = partition_from_master(g, out.master, pool);
    out.lower_bound = modularity_density(g, *out.lower_partition);
    return out;
  }
  MilpLimits limits;
  limits.deadline = ctx.deadline;
  RestrictedIlpResult ilp = solve_restricted_ilp(g, pool, limits);
  if (ilp.timed_out) {
    out.timed_out = true;
    return out;
  }
  out.lower_bound = ilp.value;
  out.lower_partition = std::move(ilp.partition);
  return out;
}

VertexPair select_branch_pair(const MasterSolution& master, const ColumnPool& pool) {
  std::vector<int> frac;
  for (int c = 0; c < pool.size(); ++c) {
    if (fractional(master.values[c])) frac.push_back(c);
  }
  for (int a : frac) {
    for (int b : frac) {
      if (a == b) continue;
      const Community& first = pool[a];
      const Community& second = pool[b];
      for (VertexId i : second.members()) {
        if (!first.contains(i)) continue;
        for (VertexId j : second.members()) {
          if (!first.contains(j)) return {i, j};
        }
        break;  // i' depends only on the column pair
      }
    }
  }
  throw Error(ErrorCode::kNoFractionalPair, "no branching pair in the master solution");
}

SolveReport solve(const Graph& g, const SolverConfig& config, const EventCallback& on_event) {
  if (!(config.time_limit > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "time limit must be positive");
  }
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(config.time_limit));

  SolveReport report;
  ColumnPool all_columns = initial_pool(g);
  EqualitySet eq(g.vertex_count());
  const CgContext ctx{g, config, deadline, &all_columns, &report, on_event};

  std::vector<TreeNode> stack;
  stack.push_back({0, {}, initial_pool(g)});
  double incumbent = -kInfinity;
  bool timed_out = false;

  while (!stack.empty()) {
    if (expired(deadline)) {
      timed_out = true;
      break;
    }
    TreeNode node = std::move(stack.back());
    stack.pop_back();
    ++report.nodes_processed;

    NodeBounds bounds = column_generation_loop(node.id, node.pool, node.branches, eq, ctx);
    if (bounds.timed_out) {
      timed_out = true;
      break;
    }
    NodeRecord rec;
    rec.id = node.id;
    rec.upper_bound = bounds.upper_bound;
    rec.lower_bound = bounds.lower_bound;
    rec.iterations = bounds.iterations;

    if (bounds.upper_bound < incumbent - config.bound_tolerance ||
        bounds.upper_bound == -kInfinity) {
      rec.pruned = true;
      report.nodes.push_back(rec);
      continue;
    }
    if (bounds.lower_bound > incumbent && bounds.lower_partition) {
      incumbent = bounds.lower_bound;
      report.partition = std::move(bounds.lower_partition);
      report.objective = incumbent;
    }
    if (bounds.upper_bound > bounds.lower_bound + config.bound_tolerance) {
      const VertexPair pair = select_branch_pair(bounds.master, node.pool);
      rec.branch = pair;
      TreeNode right{2 * node.id + 2, node.branches,
                     filter_pool_for_branch(node.pool, pair.first, pair.second,
                                            BranchSide::kDiffer)};
      right.branches.differ.push_back(pair);
      TreeNode left{2 * node.id + 1, node.branches,
                    filter_pool_for_branch(node.pool, pair.first, pair.second,
                                           BranchSide::kSame)};
      left.branches.same.push_back(pair);
      stack.push_back(std::move(right));
      stack.push_back(std::move(left));
    }
    report.nodes.push_back(rec);
  }

  if (timed_out) {
    // Best partition over every column generated so far.
    RestrictedIlpResult ilp = solve_restricted_ilp(g, all_columns);
    if (!ilp.partition) {
      throw Error(ErrorCode::kNumericalBreakdown, "restricted problem over all columns failed");
    }
    if (ilp.value > incumbent || !report.partition) {
      report.partition = std::move(ilp.partition);
      report.objective = ilp.value;
    }
    report.status = SolveStatus::kTimedOutWithLowerBound;
  }
  report.equality_size = config.spr ? eq.size() : 0;
  report.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace mdbp
