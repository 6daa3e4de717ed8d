// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "mdbp/graph.hpp"
#include "mdbp/lp.hpp"
#include "mdbp/milp.hpp"

namespace mdbp {

/// Candidate communities in insertion order, deduplicated by member set.
class ColumnPool {
 public:
  /// Returns false and leaves the pool unchanged if the member set exists.
  bool add(Community column);
  bool contains(std::span<const VertexId> members) const;

  std::span<const Community> columns() const noexcept { return columns_; }
  int size() const noexcept { return static_cast<int>(columns_.size()); }
  const Community& operator[](int i) const { return columns_.at(i); }

 private:
  struct Hash {
    std::size_t operator()(const std::vector<VertexId>& v) const noexcept;
  };
  std::vector<Community> columns_;
  std::unordered_set<std::vector<VertexId>, Hash> index_;
};

/// Vertices whose master row is an equality; the rest are packing rows.
class EqualitySet {
 public:
  explicit EqualitySet(int vertex_count) : flags_(vertex_count, 0) {}

  void insert(VertexId v);
  bool contains(VertexId v) const { return flags_.at(v) != 0; }
  int size() const noexcept { return count_; }
  std::vector<VertexId> members() const;

 private:
  std::vector<char> flags_;
  int count_ = 0;
};

struct MasterLp {
  LinearProgram lp;
  int column_count = 0;
  /// Artificial variable id per vertex row, -1 for packing rows.
  std::vector<int> artificial;
  double big_m = 0.0;
};

/// max sum f_C u_C subject to one row per vertex, '=' for vertices in `eq`
/// (or all rows when `spr` is false) and '<=' otherwise. Each '=' row gets an
/// artificial column with objective -M, M = 4m + n.
MasterLp build_master_lp(const Graph& g, const ColumnPool& pool,
                         const EqualitySet& eq, bool spr);

struct MasterSolution {
  std::vector<double> values;  // per pool column
  std::vector<double> duals;   // per vertex
  double objective = 0.0;
  bool integral = false;
  /// Some artificial is positive: the restricted master has no cover and
  /// `objective` includes the penalty.
  bool artificial_active = false;
  long iterations = 0;
};

MasterSolution solve_master(const Graph& g, const ColumnPool& pool,
                            const EqualitySet& eq, bool spr);

inline constexpr double kCoverageTolerance = 1e-6;

/// Vertices outside `eq` whose coverage in `sol` is below 1 - 1e-6.
std::vector<VertexId> uncovered_vertices(const MasterSolution& sol,
                                         const ColumnPool& pool,
                                         const EqualitySet& eq);

struct RestrictedIlpResult {
  std::optional<Partition> partition;  // empty when infeasible or timed out
  double value = -kInfinity;
  bool timed_out = false;
  long nodes = 0;
};

/// Binary set partitioning over the pool, solved to optimality.
RestrictedIlpResult solve_restricted_ilp(const Graph& g, const ColumnPool& pool,
                                         const MilpLimits& limits = {});

enum class BranchSide { kSame, kDiffer };

/// Keeps columns with both or neither of the pair (kSame) or drops columns
/// containing both (kDiffer). Order is preserved.
ColumnPool filter_pool_for_branch(const ColumnPool& pool, VertexId i1, VertexId i2,
                                  BranchSide side);

/// One singleton column per vertex, in vertex order.
ColumnPool initial_pool(const Graph& g);

}  // namespace mdbp
