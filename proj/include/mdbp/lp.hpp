// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace mdbp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

/// One entry of a sparse row or column; `index` is a variable id in row
/// context and a row id in column context.
struct Coefficient {
  int index;
  double value;
};

/// Sparse maximization model: variables with bounds and objective
/// coefficients, rows with a sense and right-hand side. Stored column-wise.
class LinearProgram {
 public:
  int add_variable(double objective, double lower = 0.0,
                   double upper = kInfinity, std::string name = {});
  /// Adds a variable together with its coefficients in existing rows.
  int add_column(double objective, std::span<const Coefficient> rows,
                 double lower = 0.0, double upper = kInfinity,
                 std::string name = {});
  /// Adds a row over existing variables.
  int add_row(RowSense sense, double rhs, std::span<const Coefficient> vars,
              std::string name = {});

  void set_bounds(int var, double lower, double upper);
  void set_objective(int var, double coefficient);

  int variable_count() const noexcept { return static_cast<int>(objective_.size()); }
  int row_count() const noexcept { return static_cast<int>(sense_.size()); }

  double objective(int var) const { return objective_.at(var); }
  double lower(int var) const { return lower_.at(var); }
  double upper(int var) const { return upper_.at(var); }
  RowSense sense(int row) const { return sense_.at(row); }
  double rhs(int row) const { return rhs_.at(row); }
  std::span<const Coefficient> column(int var) const { return columns_.at(var); }
  std::vector<Coefficient> row(int r) const;
  std::string variable_name(int var) const;
  std::string row_name(int row) const;

  /// Debug dump in the CPLEX LP text format.
  void write_lp(std::ostream& out) const;

 private:
  void check_variable(int var) const;
  void check_row(int row) const;

  std::vector<double> objective_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::vector<Coefficient>> columns_;
  std::vector<std::string> variable_names_;
  std::vector<RowSense> sense_;
  std::vector<double> rhs_;
  std::vector<std::string> row_names_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status) noexcept;

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> values;          // per variable
  std::vector<double> duals;           // per row
  std::vector<double> reduced_costs;   // per variable
  std::vector<double> row_activities;  // per row
  long iterations = 0;
};

struct SimplexOptions {
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-7;
  double pivot_tolerance = 1e-9;
  int refactor_interval = 50;
  /// Degenerate pivots in a row before switching to Bland's rule.
  int stall_limit = 50;
  long max_iterations = 0;  // 0 picks a size-based default
};

/// Bounded-variable revised simplex with a product-form basis inverse.
///
/// Every row r is written as a_r x - z_r = 0 with a row-activity variable
/// z_r whose bounds encode the sense and right-hand side, so the all-z basis
/// is always available as a starting point. The object keeps its basis
/// between calls: after bound changes `solve()` continues from the previous
/// basis with the dual simplex when that basis is still dual feasible, and
/// falls back to the primal simplex otherwise.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp, SimplexOptions options = {});

  /// Duals and reduced costs are filled only when `with_duals` is set.
  LpSolution solve(bool with_duals = true);

  void set_bounds(int var, double lower, double upper);
  void set_objective(int var, double coefficient);
  double lower(int var) const { return lower_.at(var); }
  double upper(int var) const { return upper_.at(var); }

  int variable_count() const noexcept { return structural_count_; }
  int row_count() const noexcept { return row_count_; }
  long total_iterations() const noexcept { return total_iterations_; }

 private:
  enum class State : unsigned char { kBasic, kAtLower, kAtUpper, kAtZero };

  int total_variable_count() const { return structural_count_ + row_count_; }
  bool is_fixed(int j) const { return lower_[j] == upper_[j]; }
  double infeasibility(int j) const;

  void place_nonbasic(int j);
  void refactor();
  bool invert_basis();
  void compute_primal();
  void compute_duals(std::span<const double> cost);
  void ftran(int j, std::vector<double>& out) const;
  void binv_row(int r, std::vector<double>& out) const;
  double column_dot(int j, std::span<const double> v) const;
  /// rho^T A over every variable into alpha_row_, row by row.
  void pivot_row(std::span<const double> rho);
  void update_inverse(int r, std::span<const double> alpha);
  void push_eta(int row, double pivot, std::span<const double> column, bool with_entries);
  void apply_ftran(std::vector<double>& v) const;
  void apply_btran(std::vector<double>& v) const;
  void replace_basic(int r, int entering, State leaving_state);

  bool dual_feasible_after_flips();
  LpStatus run_primal();
  LpStatus run_dual();
  void check_iteration_limit();
  LpSolution extract(LpStatus status, bool with_duals);

  SimplexOptions options_;
  int structural_count_ = 0;
  int row_count_ = 0;
  std::vector<std::vector<Coefficient>> columns_;
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<State> state_;
  std::vector<double> x_;
  std::vector<double> d_;
  std::vector<int> head_;      // basis position -> variable
  std::vector<int> position_;  // variable -> basis position or -1
  std::vector<std::vector<Coefficient>> rows_;  // index = structural column
  // Eta file: pivot row, pivot value and off-pivot entries per eta.
  std::vector<int> eta_rows_;
  std::vector<double> eta_pivots_;
  std::vector<int> eta_starts_;
  std::vector<int> eta_index_;
  std::vector<double> eta_value_;
  int pivots_since_refactor_ = 0;
  long iterations_ = 0;
  long total_iterations_ = 0;
  long iteration_limit_ = 0;
  bool solved_once_ = false;
  bool reduced_costs_current_ = false;  // d_ matches the basis and cost_

  std::vector<double> alpha_;
  std::vector<double> rho_;
  std::vector<double> alpha_row_;
  std::vector<double> work_;
};

/// Cold-start solve of a program.
LpSolution lp_solve(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace mdbp
