// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include <algorithm>
#include <cmath>
#include <string>

#include "mdbp/error.hpp"
#include "mdbp/lp.hpp"

namespace mdbp {

namespace {

constexpr double kSingularTolerance = 1e-11;

}  // namespace

SimplexSolver::SimplexSolver(const LinearProgram& lp, SimplexOptions options)
    : options_(options),
      structural_count_(lp.variable_count()),
      row_count_(lp.row_count()) {
  const int n = structural_count_;
  const int m = row_count_;
  columns_.resize(n);
  cost_.assign(n + m, 0.0);
  lower_.resize(n + m);
  upper_.resize(n + m);
  rows_.resize(m);
  for (int j = 0; j < n; ++j) {
    const auto col = lp.column(j);
    columns_[j].assign(col.begin(), col.end());
    for (const Coefficient& c : col) rows_[c.index].push_back({j, c.value});
    cost_[j] = lp.objective(j);
    lower_[j] = lp.lower(j);
    upper_[j] = lp.upper(j);
  }
  for (int r = 0; r < m; ++r) {
    const double b = lp.rhs(r);
    switch (lp.sense(r)) {
      case RowSense::kLessEqual: lower_[n + r] = -kInfinity; upper_[n + r] = b; break;
      case RowSense::kEqual: lower_[n + r] = b; upper_[n + r] = b; break;
      case RowSense::kGreaterEqual: lower_[n + r] = b; upper_[n + r] = kInfinity; break;
    }
  }
  state_.assign(n + m, State::kAtLower);
  x_.assign(n + m, 0.0);
  d_.assign(n + m, 0.0);
  position_.assign(n + m, -1);
  head_.resize(m);
  for (int j = 0; j < n; ++j) place_nonbasic(j);
  for (int r = 0; r < m; ++r) {
    head_[r] = n + r;
    position_[n + r] = r;
    state_[n + r] = State::kBasic;
  }
  alpha_.resize(m);
  rho_.resize(m);
  work_.resize(m);
  alpha_row_.resize(n + m);
  iteration_limit_ = options_.max_iterations > 0
                         ? options_.max_iterations
                         : 20L * (n + m) + 20000L;
}

void SimplexSolver::place_nonbasic(int j) {
  const double lo = lower_[j];
  const double hi = upper_[j];
  if (state_[j] == State::kAtUpper && hi != kInfinity) {
    x_[j] = hi;
  } else if (lo != -kInfinity) {
    state_[j] = State::kAtLower;
    x_[j] = lo;
  } else if (hi != kInfinity) {
    state_[j] = State::kAtUpper;
    x_[j] = hi;
  } else {
    state_[j] = State::kAtZero;
    x_[j] = 0.0;
  }
}

void SimplexSolver::set_bounds(int var, double lower, double upper) {
  if (var < 0 || var >= structural_count_) {
    throw Error(ErrorCode::kUnknownVariable, "unknown variable " + std::to_string(var));
  }
  if (std::isnan(lower) || std::isnan(upper) || lower > upper) {
    throw Error(ErrorCode::kInvalidModel, "invalid bounds");
  }
  lower_[var] = lower;
  upper_[var] = upper;
  if (state_[var] != State::kBasic) place_nonbasic(var);
}

void SimplexSolver::set_objective(int var, double coefficient) {
  if (var < 0 || var >= structural_count_) {
    throw Error(ErrorCode::kUnknownVariable, "unknown variable " + std::to_string(var));
  }
  cost_[var] = coefficient;
  reduced_costs_current_ = false;
}

double SimplexSolver::infeasibility(int j) const {
  if (x_[j] < lower_[j]) return lower_[j] - x_[j];
  if (x_[j] > upper_[j]) return x_[j] - upper_[j];
  return 0.0;
}

// The basis inverse is kept in product form, B^{-1} = E_t^{-1} ... E_1^{-1},
// where each eta E differs from the identity in one column. Reinversion
// rebuilds the file from scratch: slack columns first, then row singletons
// of the remaining structural block (no fill), then the bump, then column
// singletons in reverse discovery order. Basis position i is the row that
// variable head_[i] was pivoted on.
bool SimplexSolver::invert_basis() {
  const int n = structural_count_;
  const int m = row_count_;
  eta_rows_.clear();
  eta_pivots_.clear();
  eta_starts_.assign(1, 0);
  eta_index_.clear();
  eta_value_.clear();

  std::vector<int> new_head(m, -1);
  std::vector<char> removed(m, 0);  // row claimed during ordering
  std::vector<char> active(n, 0);   // basic structural still to be ordered
  std::vector<int> structurals;
  for (int i = 0; i < m; ++i) {
    const int j = head_[i];
    if (j >= n) {
      const int r = j - n;
      push_eta(r, -1.0, work_, false);
      removed[r] = 1;
      new_head[r] = j;
    } else {
      structurals.push_back(j);
      active[j] = 1;
    }
  }

  // Ordering by singleton elimination on the structural block.
  std::vector<int> row_count(m, 0);
  std::vector<int> col_count(n, 0);
  for (int j : structurals) {
    for (const Coefficient& c : columns_[j]) {
      if (!removed[c.index]) {
        ++row_count[c.index];
        ++col_count[j];
      }
    }
  }
  struct Slot {
    int column;
    int row;  // preferred pivot row, -1 for free choice
  };
  std::vector<Slot> lower, bump, upper;
  std::vector<int> queue;
  for (int r = 0; r < m; ++r) {
    if (!removed[r] && row_count[r] == 1) queue.push_back(r);
  }
  while (!queue.empty()) {
    const int r = queue.back();
    queue.pop_back();
    if (removed[r] || row_count[r] != 1) continue;
    int j = -1;
    for (const Coefficient& c : rows_[r]) {
      if (active[c.index]) {
        j = c.index;
        break;
      }
    }
    lower.push_back({j, r});
    active[j] = 0;
    removed[r] = 1;
    for (const Coefficient& c : columns_[j]) {
      if (!removed[c.index] && --row_count[c.index] == 1) queue.push_back(c.index);
    }
  }
  // col_count still counts rows removed by row singletons; refresh it.
  for (int j : structurals) {
    if (!active[j]) continue;
    col_count[j] = 0;
    for (const Coefficient& c : columns_[j]) col_count[j] += !removed[c.index];
  }
  queue.clear();
  for (int j : structurals) {
    if (active[j] && col_count[j] == 1) queue.push_back(j);
  }
  while (!queue.empty()) {
    const int j = queue.back();
    queue.pop_back();
    if (!active[j] || col_count[j] != 1) continue;
    int r = -1;
    for (const Coefficient& c : columns_[j]) {
      if (!removed[c.index]) {
        r = c.index;
        break;
      }
    }
    upper.push_back({j, r});
    active[j] = 0;
    removed[r] = 1;
    for (const Coefficient& c : rows_[r]) {
      if (active[c.index] && --col_count[c.index] == 1) queue.push_back(c.index);
    }
  }
  for (int j : structurals) {
    if (active[j]) bump.push_back({j, -1});
  }
  std::reverse(upper.begin(), upper.end());

  std::vector<char> pivoted(m, 0);
  for (int r = 0; r < m; ++r) pivoted[r] = new_head[r] >= 0;
  std::vector<int> dependent;
  std::vector<double>& v = alpha_;
  for (const std::vector<Slot>* part : {&lower, &bump, &upper}) {
    for (const Slot& slot : *part) {
      std::fill(v.begin(), v.end(), 0.0);
      for (const Coefficient& c : columns_[slot.column]) v[c.index] = c.value;
      apply_ftran(v);
      int best = -1;
      double best_abs = 0.0;
      for (int r = 0; r < m; ++r) {
        if (!pivoted[r] && std::abs(v[r]) > best_abs) {
          best_abs = std::abs(v[r]);
          best = r;
        }
      }
      if (best_abs <= kSingularTolerance) {
        dependent.push_back(slot.column);
        continue;
      }
      int p = best;
      if (slot.row >= 0 && !pivoted[slot.row] && std::abs(v[slot.row]) >= 0.01 * best_abs) {
        p = slot.row;
      }
      push_eta(p, v[p], v, true);
      pivoted[p] = 1;
      new_head[p] = slot.column;
    }
  }

  if (!dependent.empty()) {
    // Swap each dependent structural for the activity variable of a row that
    // received no pivot.
    int next = 0;
    for (int j : dependent) {
      while (pivoted[next]) ++next;
      pivoted[next] = 1;
      const int pos = position_[j];
      position_[j] = -1;
      state_[j] = State::kAtLower;
      place_nonbasic(j);
      head_[pos] = n + next;
      position_[n + next] = pos;
      state_[n + next] = State::kBasic;
    }
    return false;
  }

  head_ = std::move(new_head);
  for (int r = 0; r < m; ++r) position_[head_[r]] = r;
  return true;
}

void SimplexSolver::push_eta(int row, double pivot, std::span<const double> column,
                             bool with_entries) {
  eta_rows_.push_back(row);
  eta_pivots_.push_back(pivot);
  if (with_entries) {
    for (int i = 0; i < row_count_; ++i) {
      if (i != row && column[i] != 0.0) {
        eta_index_.push_back(i);
        eta_value_.push_back(column[i]);
      }
    }
  }
  eta_starts_.push_back(static_cast<int>(eta_index_.size()));
}

void SimplexSolver::apply_ftran(std::vector<double>& v) const {
  const int count = static_cast<int>(eta_rows_.size());
  for (int e = 0; e < count; ++e) {
    const int p = eta_rows_[e];
    if (v[p] == 0.0) continue;
    const double xp = v[p] / eta_pivots_[e];
    v[p] = xp;
    for (int k = eta_starts_[e]; k < eta_starts_[e + 1]; ++k) {
      v[eta_index_[k]] -= eta_value_[k] * xp;
    }
  }
}

void SimplexSolver::apply_btran(std::vector<double>& v) const {
  for (int e = static_cast<int>(eta_rows_.size()) - 1; e >= 0; --e) {
    const int p = eta_rows_[e];
    double sum = v[p];
    for (int k = eta_starts_[e]; k < eta_starts_[e + 1]; ++k) {
      sum -= eta_value_[k] * v[eta_index_[k]];
    }
    v[p] = sum / eta_pivots_[e];
  }
}

void SimplexSolver::refactor() {
  int attempts = 0;
  while (!invert_basis()) {
    if (++attempts > row_count_ + 1) {
      throw Error(ErrorCode::kNumericalBreakdown,
                  "basis stays singular after repair");
    }
  }
  pivots_since_refactor_ = 0;
  reduced_costs_current_ = false;
  compute_primal();
}

void SimplexSolver::compute_primal() {
  const int n = structural_count_;
  const int m = row_count_;
  std::fill(work_.begin(), work_.end(), 0.0);
  for (int j = 0; j < n; ++j) {
    if (state_[j] == State::kBasic || x_[j] == 0.0) continue;
    for (const Coefficient& c : columns_[j]) work_[c.index] -= c.value * x_[j];
  }
  for (int r = 0; r < m; ++r) {
    if (state_[n + r] != State::kBasic) work_[r] += x_[n + r];
  }
  apply_ftran(work_);
  for (int i = 0; i < m; ++i) x_[head_[i]] = work_[i];
}

void SimplexSolver::compute_duals(std::span<const double> cost) {
  const int n = structural_count_;
  const int m = row_count_;
  // work_ holds pi = c_B^T B^{-1}.
  for (int i = 0; i < m; ++i) work_[i] = cost[head_[i]];
  apply_btran(work_);
  for (int j = 0; j < n; ++j) {
    if (state_[j] == State::kBasic) {
      d_[j] = 0.0;
      continue;
    }
    double sum = cost[j];
    for (const Coefficient& c : columns_[j]) sum -= work_[c.index] * c.value;
    d_[j] = sum;
  }
  for (int r = 0; r < m; ++r) {
    d_[n + r] = state_[n + r] == State::kBasic ? 0.0 : cost[n + r] + work_[r];
  }
  reduced_costs_current_ = true;
}

void SimplexSolver::ftran(int j, std::vector<double>& out) const {
  std::fill(out.begin(), out.end(), 0.0);
  if (j >= structural_count_) {
    out[j - structural_count_] = -1.0;
  } else {
    for (const Coefficient& c : columns_[j]) out[c.index] = c.value;
  }
  apply_ftran(out);
}

void SimplexSolver::binv_row(int r, std::vector<double>& out) const {
  std::fill(out.begin(), out.end(), 0.0);
  out[r] = 1.0;
  apply_btran(out);
}

double SimplexSolver::column_dot(int j, std::span<const double> v) const {
  if (j >= structural_count_) return -v[j - structural_count_];
  double sum = 0.0;
  for (const Coefficient& c : columns_[j]) sum += c.value * v[c.index];
  return sum;
}

void SimplexSolver::pivot_row(std::span<const double> rho) {
  const int n = structural_count_;
  const int m = row_count_;
  std::fill(alpha_row_.begin(), alpha_row_.begin() + n, 0.0);
  for (int r = 0; r < m; ++r) {
    const double v = rho[r];
    alpha_row_[n + r] = -v;
    if (v == 0.0) continue;
    for (const Coefficient& c : rows_[r]) alpha_row_[c.index] += v * c.value;
  }
}

void SimplexSolver::update_inverse(int r, std::span<const double> alpha) {
  push_eta(r, alpha[r], alpha, true);
  ++pivots_since_refactor_;
}

void SimplexSolver::replace_basic(int r, int entering, State leaving_state) {
  const int leaving = head_[r];
  state_[leaving] = leaving_state;
  position_[leaving] = -1;
  x_[leaving] = leaving_state == State::kAtLower ? lower_[leaving] : upper_[leaving];
  head_[r] = entering;
  position_[entering] = r;
  state_[entering] = State::kBasic;
}

void SimplexSolver::check_iteration_limit() {
  if (iterations_ >= iteration_limit_) {
    throw Error(ErrorCode::kNumericalBreakdown,
                "simplex iteration limit " + std::to_string(iteration_limit_) +
                    " reached");
  }
}

bool SimplexSolver::dual_feasible_after_flips() {
  // Bound changes leave reduced costs untouched, so a warm start reuses them.
  if (!reduced_costs_current_) compute_duals(cost_);
  const double tol = options_.optimality_tolerance;
  // Check first so that a rejected basis is left untouched for the primal.
  for (int j = 0; j < total_variable_count(); ++j) {
    const State s = state_[j];
    if (s == State::kBasic || is_fixed(j)) continue;
    if ((s == State::kAtLower && d_[j] > tol && upper_[j] == kInfinity) ||
        (s == State::kAtUpper && d_[j] < -tol && lower_[j] == -kInfinity) ||
        (s == State::kAtZero && std::abs(d_[j]) > tol)) {
      return false;
    }
  }
  bool flipped = false;
  for (int j = 0; j < total_variable_count(); ++j) {
    const State s = state_[j];
    if (s == State::kBasic || is_fixed(j)) continue;
    if (s == State::kAtLower && d_[j] > tol) {
      state_[j] = State::kAtUpper;
      x_[j] = upper_[j];
      flipped = true;
    } else if (s == State::kAtUpper && d_[j] < -tol) {
      state_[j] = State::kAtLower;
      x_[j] = lower_[j];
      flipped = true;
    }
  }
  if (flipped) compute_primal();
  return true;
}

LpStatus SimplexSolver::run_primal() {
  const int n_total = total_variable_count();
  const int m = row_count_;
  const double feas_tol = options_.feasibility_tolerance;
  const double opt_tol = options_.optimality_tolerance;
  const double piv_tol = options_.pivot_tolerance;
  std::vector<double> phase_cost(m);
  std::vector<double> d_phase1(n_total);
  bool duals_valid = reduced_costs_current_;
  reduced_costs_current_ = false;
  int degenerate_run = 0;
  bool bland = false;

  while (true) {
    check_iteration_limit();
    if (pivots_since_refactor_ >= options_.refactor_interval) {
      refactor();
      duals_valid = false;
    }

    // Phase selection: any basic variable outside its bounds means phase 1.
    bool phase1 = false;
    for (int i = 0; i < m; ++i) {
      const int j = head_[i];
      if (x_[j] < lower_[j] - feas_tol) {
        phase_cost[i] = 1.0;
        phase1 = true;
      } else if (x_[j] > upper_[j] + feas_tol) {
        phase_cost[i] = -1.0;
        phase1 = true;
      } else {
        phase_cost[i] = 0.0;
      }
    }
    const double* d = nullptr;
    if (phase1) {
      std::fill(work_.begin(), work_.end(), 0.0);
      std::copy(phase_cost.begin(), phase_cost.end(), work_.begin());
      apply_btran(work_);
      for (int j = 0; j < n_total; ++j) {
        d_phase1[j] = state_[j] == State::kBasic ? 0.0 : -column_dot(j, work_);
      }
      d = d_phase1.data();
      duals_valid = false;
    } else {
      if (!duals_valid) {
        compute_duals(cost_);
        duals_valid = true;
      }
      d = d_.data();
    }

    // Pricing: Dantzig, or Bland's rule after a run of degenerate pivots.
    int entering = -1;
    double direction = 0.0;
    double best = 0.0;
    for (int j = 0; j < n_total; ++j) {
      const State s = state_[j];
      if (s == State::kBasic || is_fixed(j)) continue;
      const double dj = d[j];
      double dir = 0.0;
      if (dj > opt_tol && (s == State::kAtLower || s == State::kAtZero)) {
        dir = 1.0;
      } else if (dj < -opt_tol && (s == State::kAtUpper || s == State::kAtZero)) {
        dir = -1.0;
      }
      if (dir == 0.0) continue;
      if (bland) {
        entering = j;
        direction = dir;
        break;
      }
      if (std::abs(dj) > best) {
        best = std::abs(dj);
        entering = j;
        direction = dir;
      }
    }
    if (entering < 0) {
      reduced_costs_current_ = duals_valid;
      return phase1 ? LpStatus::kInfeasible : LpStatus::kOptimal;
    }

    ftran(entering, alpha_);

    // Ratio test. Basic i moves at rate -direction * alpha_i per unit step.
    double step = upper_[entering] - lower_[entering];  // bound flip
    int leave = -1;
    State leave_state = State::kAtLower;
    const auto limit_for = [&](int i, double& t, State& hit) -> bool {
      const double rate = -direction * alpha_[i];
      if (std::abs(alpha_[i]) <= piv_tol) return false;
      const int j = head_[i];
      const double xj = x_[j];
      if (rate < 0.0) {
        double bound;
        if (phase1 && xj > upper_[j] + feas_tol) {
          bound = upper_[j];
          hit = State::kAtUpper;
        } else if (phase1 && xj < lower_[j] - feas_tol) {
          return false;
        } else if (lower_[j] != -kInfinity) {
          bound = lower_[j];
          hit = State::kAtLower;
        } else {
          return false;
        }
        t = std::max(0.0, (xj - bound) / -rate);
        return true;
      }
      double bound;
      if (phase1 && xj < lower_[j] - feas_tol) {
        bound = lower_[j];
        hit = State::kAtLower;
      } else if (phase1 && xj > upper_[j] + feas_tol) {
        return false;
      } else if (upper_[j] != kInfinity) {
        bound = upper_[j];
        hit = State::kAtUpper;
      } else {
        return false;
      }
      t = std::max(0.0, (bound - xj) / rate);
      return true;
    };

    if (bland) {
      for (int i = 0; i < m; ++i) {
        double t;
        State hit;
        if (!limit_for(i, t, hit)) continue;
        if (t < step - 1e-12 ||
            (leave >= 0 && t <= step + 1e-12 && head_[i] < head_[leave])) {
          step = t;
          leave = i;
          leave_state = hit;
        }
      }
    } else {
      // Harris: find the loosest step with tolerance-relaxed bounds, then
      // pick the largest pivot among rows that block within it.
      double relaxed = step;
      for (int i = 0; i < m; ++i) {
        double t;
        State hit;
        if (!limit_for(i, t, hit)) continue;
        const double rate = std::abs(alpha_[i]);
        relaxed = std::min(relaxed, t + feas_tol / rate);
      }
      double best_pivot = 0.0;
      for (int i = 0; i < m; ++i) {
        double t;
        State hit;
        if (!limit_for(i, t, hit)) continue;
        if (t <= relaxed && std::abs(alpha_[i]) > best_pivot) {
          best_pivot = std::abs(alpha_[i]);
          leave = i;
          leave_state = hit;
          step = t;
        }
      }
      const double flip = upper_[entering] - lower_[entering];
      if (leave < 0 || flip <= step) {
        leave = -1;
        step = flip;
      }
    }

    if (leave < 0 && step == kInfinity) {
      if (phase1) {
        throw Error(ErrorCode::kNumericalBreakdown, "unbounded phase-1 ray");
      }
      return LpStatus::kUnbounded;
    }

    if (leave >= 0 && !phase1) {
      // Update reduced costs with the pivot row before the basis changes.
      binv_row(leave, rho_);
      const double theta = d_[entering] / alpha_[leave];
      for (int j = 0; j < n_total; ++j) {
        if (state_[j] == State::kBasic) continue;
        const double a = column_dot(j, rho_);
        if (a != 0.0) d_[j] -= theta * a;
      }
      d_[head_[leave]] = -theta;
      d_[entering] = 0.0;
    }

    x_[entering] += direction * step;
    for (int i = 0; i < m; ++i) {
      if (alpha_[i] != 0.0) x_[head_[i]] -= direction * step * alpha_[i];
    }
    if (leave < 0) {
      state_[entering] = direction > 0 ? State::kAtUpper : State::kAtLower;
      x_[entering] = direction > 0 ? upper_[entering] : lower_[entering];
    } else {
      replace_basic(leave, entering, leave_state);
      update_inverse(leave, alpha_);
    }
    ++iterations_;

    if (step <= 1e-12) {
      if (++degenerate_run > options_.stall_limit) bland = true;
    } else {
      degenerate_run = 0;
      bland = false;
    }
  }
}

LpStatus SimplexSolver::run_dual() {
  const int n_total = total_variable_count();
  const int m = row_count_;
  const double feas_tol = options_.feasibility_tolerance;
  const double piv_tol = options_.pivot_tolerance;
  int degenerate_run = 0;
  bool bland = false;

  while (true) {
    check_iteration_limit();
    if (pivots_since_refactor_ >= options_.refactor_interval) {
      refactor();
      if (!dual_feasible_after_flips()) return run_primal();
    }

    int leave = -1;
    double worst = feas_tol;
    for (int i = 0; i < m; ++i) {
      const double v = infeasibility(head_[i]);
      if (v <= feas_tol) continue;
      if (bland) {
        if (leave < 0 || head_[i] < head_[leave]) leave = i;
      } else if (v > worst) {
        worst = v;
        leave = i;
      }
    }
    if (leave < 0) return LpStatus::kOptimal;

    const int leaving = head_[leave];
    const bool to_lower = x_[leaving] < lower_[leaving];
    const double sigma = to_lower ? 1.0 : -1.0;
    const double target = to_lower ? lower_[leaving] : upper_[leaving];

    binv_row(leave, rho_);
    pivot_row(rho_);
    int entering = -1;
    double best_ratio = kInfinity;
    double best_pivot = 0.0;
    for (int j = 0; j < n_total; ++j) {
      const State s = state_[j];
      if (s == State::kBasic) continue;
      const double a = alpha_row_[j];
      if (is_fixed(j) || std::abs(a) <= piv_tol) continue;
      double ratio;
      if (s == State::kAtZero) {
        ratio = std::abs(d_[j]) / std::abs(a);
      } else if (s == State::kAtLower && sigma * a < 0.0) {
        ratio = std::max(0.0, -d_[j]) / std::abs(a);
      } else if (s == State::kAtUpper && sigma * a > 0.0) {
        ratio = std::max(0.0, d_[j]) / std::abs(a);
      } else {
        continue;
      }
      bool take;
      if (bland) {
        take = ratio < best_ratio - 1e-12;
      } else {
        take = ratio < best_ratio - 1e-12 ||
               (ratio <= best_ratio + 1e-12 && std::abs(a) > best_pivot);
      }
      if (take) {
        best_ratio = ratio;
        best_pivot = std::abs(a);
        entering = j;
      }
    }
    if (entering < 0) return LpStatus::kInfeasible;

    ftran(entering, alpha_);
    const double pivot = alpha_[leave];
    if (std::abs(pivot - alpha_row_[entering]) >
        1e-7 * (1.0 + std::abs(pivot))) {
      if (pivots_since_refactor_ == 0) {
        throw Error(ErrorCode::kNumericalBreakdown,
                    "inconsistent pivot after refactorization");
      }
      refactor();
      if (!dual_feasible_after_flips()) return run_primal();
      continue;
    }
    const double theta = d_[entering] / pivot;
    const double t = (x_[leaving] - target) / pivot;

    x_[entering] += t;
    for (int i = 0; i < m; ++i) {
      if (alpha_[i] != 0.0) x_[head_[i]] -= t * alpha_[i];
    }
    for (int j = 0; j < n_total; ++j) {
      if (state_[j] == State::kBasic || j == entering) continue;
      const double a = alpha_row_[j];
      if (a != 0.0) d_[j] -= theta * a;
    }
    d_[leaving] = -theta;
    d_[entering] = 0.0;
    replace_basic(leave, entering, to_lower ? State::kAtLower : State::kAtUpper);
    update_inverse(leave, alpha_);
    ++iterations_;

    if (std::abs(theta) <= 1e-12) {
      if (++degenerate_run > options_.stall_limit) bland = true;
    } else {
      degenerate_run = 0;
      bland = false;
    }
  }
}

LpSolution SimplexSolver::solve(bool with_duals) {
  iterations_ = 0;
  if (!solved_once_ || pivots_since_refactor_ >= options_.refactor_interval) {
    refactor();
  } else {
    compute_primal();
  }
  LpStatus status;
  if (solved_once_ && dual_feasible_after_flips()) {
    status = run_dual();
  } else {
    status = run_primal();
  }
  solved_once_ = true;
  total_iterations_ += iterations_;
  return extract(status, with_duals);
}

LpSolution SimplexSolver::extract(LpStatus status, bool with_duals) {
  const int n = structural_count_;
  const int m = row_count_;
  LpSolution sol;
  sol.status = status;
  sol.iterations = iterations_;
  sol.values.assign(x_.begin(), x_.begin() + n);
  sol.objective = 0.0;
  for (int j = 0; j < n; ++j) sol.objective += cost_[j] * x_[j];
  sol.row_activities.assign(m, 0.0);
  for (int j = 0; j < n; ++j) {
    for (const Coefficient& c : columns_[j]) sol.row_activities[c.index] += c.value * x_[j];
  }
  if (with_duals && status == LpStatus::kOptimal) {
    compute_duals(cost_);
    sol.duals.assign(work_.begin(), work_.begin() + m);
    sol.reduced_costs.assign(d_.begin(), d_.begin() + n);
  }
  return sol;
}

LpSolution lp_solve(const LinearProgram& lp, const SimplexOptions& options) {
  SimplexSolver solver(lp, options);
  return solver.solve();
}

}  // namespace mdbp
