// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include "mdbp/master.hpp"

#include <cmath>
#include <string>

#include "mdbp/error.hpp"

namespace mdbp {

std::size_t ColumnPool::Hash::operator()(const std::vector<VertexId>& v) const noexcept {
  // FNV-1a over the member ids.
  std::size_t h = 1469598103934665603ULL;
  for (VertexId x : v) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ULL;
  }
  return h;
}

bool ColumnPool::add(Community column) {
  std::vector<VertexId> key(column.members().begin(), column.members().end());
  if (!index_.insert(std::move(key)).second) return false;
  columns_.push_back(std::move(column));
  return true;
}

bool ColumnPool::contains(std::span<const VertexId> members) const {
  return index_.contains(std::vector<VertexId>(members.begin(), members.end()));
}

void EqualitySet::insert(VertexId v) {
  char& f = flags_.at(v);
  if (!f) {
    f = 1;
    ++count_;
  }
}

std::vector<VertexId> EqualitySet::members() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < flags_.size(); ++v) {
    if (flags_[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

MasterLp build_master_lp(const Graph& g, const ColumnPool& pool,
                         const EqualitySet& eq, bool spr) {
  const int n = g.vertex_count();
  MasterLp out;
  out.big_m = 4.0 * g.edge_count() + n;
  out.artificial.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    const bool equality = !spr || eq.contains(i);
    out.lp.add_row(equality ? RowSense::kEqual : RowSense::kLessEqual, 1.0, {},
                   "v" + std::to_string(i));
  }
  std::vector<Coefficient> entries;
  for (const Community& c : pool.columns()) {
    entries.clear();
    for (VertexId v : c.members()) entries.push_back({v, 1.0});
    out.lp.add_column(c.contribution(), entries);
  }
  out.column_count = pool.size();
  for (int i = 0; i < n; ++i) {
    if (out.lp.sense(i) != RowSense::kEqual) continue;
    const Coefficient e{i, 1.0};
    out.artificial[i] = out.lp.add_column(-out.big_m, {&e, 1}, 0.0, kInfinity,
                                          "art" + std::to_string(i));
  }
  return out;
}

MasterSolution solve_master(const Graph& g, const ColumnPool& pool,
                            const EqualitySet& eq, bool spr) {
  const MasterLp master = build_master_lp(g, pool, eq, spr);
  const LpSolution lp = lp_solve(master.lp);
  if (lp.status != LpStatus::kOptimal) {
    // The artificials make every master feasible and the rows bound it.
    throw Error(ErrorCode::kNumericalBreakdown,
                std::string("master LP returned ") + to_string(lp.status));
  }
  MasterSolution sol;
  sol.iterations = lp.iterations;
  sol.values.assign(lp.values.begin(), lp.values.begin() + master.column_count);
  sol.duals = lp.duals;
  sol.objective = lp.objective;
  for (int a : master.artificial) {
    if (a >= 0 && lp.values[a] > 1e-9) sol.artificial_active = true;
  }
  sol.integral = !sol.artificial_active;
  for (double u : sol.values) {
    if (std::abs(u - std::round(u)) > kIntegralityTolerance) sol.integral = false;
  }
  return sol;
}

std::vector<VertexId> uncovered_vertices(const MasterSolution& sol,
                                         const ColumnPool& pool,
                                         const EqualitySet& eq) {
  std::vector<double> coverage(sol.duals.size(), 0.0);
  for (int c = 0; c < pool.size(); ++c) {
    if (sol.values[c] == 0.0) continue;
    for (VertexId v : pool[c].members()) coverage[v] += sol.values[c];
  }
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < coverage.size(); ++v) {
    const auto id = static_cast<VertexId>(v);
    if (!eq.contains(id) && coverage[v] < 1.0 - kCoverageTolerance) out.push_back(id);
  }
  return out;
}

RestrictedIlpResult solve_restricted_ilp(const Graph& g, const ColumnPool& pool,
                                         const MilpLimits& limits) {
  const int n = g.vertex_count();
  RestrictedIlpResult result;
  // A vertex that no column covers makes the model infeasible outright.
  std::vector<char> covered(n, 0);
  for (const Community& c : pool.columns()) {
    for (VertexId v : c.members()) covered[v] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (!covered[v]) return result;
  }

  MixedIntegerProgram mip;
  for (int i = 0; i < n; ++i) mip.lp.add_row(RowSense::kEqual, 1.0, {});
  std::vector<Coefficient> entries;
  for (const Community& c : pool.columns()) {
    entries.clear();
    for (VertexId v : c.members()) entries.push_back({v, 1.0});
    mip.mark_binary(mip.lp.add_column(c.contribution(), entries, 0.0, 1.0));
  }
  const MilpSolution sol = milp_solve(mip, SearchMode::prove_optimal(), limits);
  result.nodes = sol.nodes;
  if (sol.status == MilpStatus::kTimedOut) {
    result.timed_out = true;
    return result;
  }
  if (sol.status != MilpStatus::kOptimal) return result;

  std::vector<Community> chosen;
  double value = 0.0;
  for (int c = 0; c < pool.size(); ++c) {
    if (sol.values[c] > 0.5) {
      chosen.push_back(pool[c]);
      value += pool[c].contribution();
    }
  }
  result.partition.emplace(g, std::move(chosen));
  result.value = value;
  return result;
}

ColumnPool filter_pool_for_branch(const ColumnPool& pool, VertexId i1, VertexId i2,
                                  BranchSide side) {
  if (i1 == i2) throw Error(ErrorCode::kInvalidBranchSet, "branch pair must be distinct");
  ColumnPool out;
  for (const Community& c : pool.columns()) {
    const bool a = c.contains(i1);
    const bool b = c.contains(i2);
    const bool keep = side == BranchSide::kSame ? a == b : !(a && b);
    if (keep) out.add(c);
  }
  return out;
}

ColumnPool initial_pool(const Graph& g) {
  ColumnPool pool;
  for (VertexId v = 0; v < g.vertex_count(); ++v) pool.add(Community(g, {v}));
  return pool;
}

}  // namespace mdbp
