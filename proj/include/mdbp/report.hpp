// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdbp/bnp.hpp"
#include "mdbp/instance_io.hpp"

namespace mdbp {

/// Everything one solver run produces, in a serializable form: communities
/// are listed with the instance's own vertex labels.
struct RunRecord {
  std::string instance;
  int vertex_count = 0;
  int edge_count = 0;
  SolverConfig config;
  SolveStatus status = SolveStatus::kOptimal;
  double objective = 0.0;
  std::vector<std::vector<std::string>> communities;
  int nodes_processed = 0;
  long iterations = 0;
  long columns_generated = 0;
  int equality_size = 0;
  double wall_seconds = 0.0;
  std::vector<NodeRecord> nodes;
  std::vector<IterationEvent> log;
  std::optional<double> brute_force_objective;

  friend bool operator==(const RunRecord&, const RunRecord&);
};

RunRecord make_run_record(std::string instance, const LabeledGraph& input,
                          const SolverConfig& config, const SolveReport& report);

/// Objective with five decimals, as printed in summaries.
std::string format_objective(double value);

std::string to_json(const RunRecord& record);
/// Throws Error(kParseError) on malformed documents.
RunRecord run_record_from_json(std::string_view text);

/// One CSV row per master solve.
void write_iteration_csv(std::ostream& out, const std::vector<IterationEvent>& log);

bool operator==(const IterationEvent&, const IterationEvent&);
bool operator==(const NodeRecord&, const NodeRecord&);

}  // namespace mdbp
