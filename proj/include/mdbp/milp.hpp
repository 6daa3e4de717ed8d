// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "mdbp/lp.hpp"

namespace mdbp {

/// A linear program in which some variables are restricted to {0, 1}.
struct MixedIntegerProgram {
  LinearProgram lp;
  std::vector<int> binaries;

  void mark_binary(int var) { binaries.push_back(var); }
};

struct SearchMode {
  enum class Kind { kProveOptimal, kFirstIncumbentAbove };
  Kind kind = Kind::kProveOptimal;
  double threshold = 0.0;

  static SearchMode prove_optimal() { return {}; }
  static SearchMode first_incumbent_above(double t) {
    return {Kind::kFirstIncumbentAbove, t};
  }
};

enum class MilpStatus { kOptimal, kIncumbentFound, kInfeasible, kNoSolutionAbove, kTimedOut };

const char* to_string(MilpStatus status) noexcept;

struct MilpSolution {
  MilpStatus status = MilpStatus::kInfeasible;
  double objective = -kInfinity;
  std::vector<double> values;  // empty when no incumbent exists
  double bound = -kInfinity;   // valid upper bound on the optimum
  long nodes = 0;
  long lp_iterations = 0;
};

struct MilpLimits {
  long node_limit = 0;  // 0 means unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

inline constexpr double kIntegralityTolerance = 1e-6;
inline constexpr double kPruneTolerance = 1e-9;

/// Depth-first LP-based branch and bound. Branches on the most fractional
/// binary (lowest id on ties) and explores the down branch first. One simplex
/// object is reused for the whole tree so every node after the root starts
/// from the previous basis.
MilpSolution milp_solve(const MixedIntegerProgram& mip, SearchMode mode = {},
                        const MilpLimits& limits = {});

}  // namespace mdbp
