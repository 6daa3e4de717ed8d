// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include "mdbp/graph.hpp"
#include "mdbp/master.hpp"
#include "mdbp/pricing.hpp"

namespace mdbp {

struct SolverConfig {
  bool spr = true;
  bool mcp = true;
  double time_limit = 3600.0;  // seconds
  bool prove_optimal_pricing = false;
  double bound_tolerance = 1e-6;
};

/// One master solve inside the column-generation loop of a tree node.
struct IterationEvent {
  int node = 0;
  int iteration = 0;  // 1-based within the node
  double master_objective = 0.0;
  bool artificial_active = false;
  int subproblems = 0;      // pricing MILPs solved after this master
  long pricing_nodes = 0;   // branch-and-bound nodes over those MILPs
  int columns_added = 0;    // new columns entering the node pool
  int duplicate_columns = 0;
  int promoted = 0;         // vertices moved into the equality set
  int equality_size = 0;    // size after promotion
};

struct NodeRecord {
  int id = 0;
  double upper_bound = -kInfinity;
  double lower_bound = -kInfinity;
  int iterations = 0;
  bool pruned = false;
  std::optional<VertexPair> branch;
};

enum class SolveStatus { kOptimal, kTimedOutWithLowerBound };

const char* to_string(SolveStatus status) noexcept;

struct SolveReport {
  SolveStatus status = SolveStatus::kOptimal;
  std::optional<Partition> partition;
  double objective = -kInfinity;
  int nodes_processed = 0;
  long iterations = 0;          // master solves over all nodes
  long columns_generated = 0;   // new columns over all nodes
  int equality_size = 0;
  std::vector<IterationEvent> log;
  std::vector<NodeRecord> nodes;
  double wall_seconds = 0.0;
};

using EventCallback = std::function<void(const IterationEvent&)>;

/// Result of the column-generation loop at one node.
struct NodeBounds {
  MasterSolution master;  // last master solution
  double upper_bound = -kInfinity;
  double lower_bound = -kInfinity;
  std::optional<Partition> lower_partition;
  int iterations = 0;
  bool timed_out = false;
};

struct CgContext {
  const Graph& graph;
  const SolverConfig& config;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  ColumnPool* all_columns = nullptr;  // union over the run, may be null
  SolveReport* report = nullptr;      // receives events and counters, may be null
  EventCallback on_event;
};

/// Alternates master solves and pricing until no column with positive
/// reduced cost exists and every packing row is covered. `pool` and `eq` are
/// updated in place.
NodeBounds column_generation_loop(int node_id, ColumnPool& pool, const BranchSet& branches,
                                  EqualitySet& eq, const CgContext& ctx);

/// First pair (i, i') over ordered pairs of fractional columns (C, C') in
/// pool order with i in both and i' in C' only.
VertexPair select_branch_pair(const MasterSolution& master, const ColumnPool& pool);

/// Exact branch and price for the maximum modularity density partition.
SolveReport solve(const Graph& g, const SolverConfig& config = {},
                  const EventCallback& on_event = {});

}  // namespace mdbp
