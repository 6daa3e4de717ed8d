// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "mdbp/error.hpp"
#include "mdbp/lp.hpp"

namespace mdbp {

namespace {

void check_bounds(double lower, double upper) {
  if (std::isnan(lower) || std::isnan(upper) || lower > upper ||
      lower == kInfinity || upper == -kInfinity) {
    throw Error(ErrorCode::kInvalidModel,
                "invalid bounds [" + std::to_string(lower) + ", " +
                    std::to_string(upper) + "]");
  }
}

void check_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidModel, std::string(what) + " must be finite");
  }
}

}  // namespace

const char* to_string(LpStatus status) noexcept {
  switch (status) {
    case LpStatus::kOptimal: return "Optimal";
    case LpStatus::kInfeasible: return "Infeasible";
    case LpStatus::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

void LinearProgram::check_variable(int var) const {
  if (var < 0 || var >= variable_count()) {
    throw Error(ErrorCode::kUnknownVariable,
                "unknown variable " + std::to_string(var));
  }
}

void LinearProgram::check_row(int row) const {
  if (row < 0 || row >= row_count()) {
    throw Error(ErrorCode::kUnknownRow, "unknown row " + std::to_string(row));
  }
}

int LinearProgram::add_variable(double objective, double lower, double upper,
                                std::string name) {
  return add_column(objective, {}, lower, upper, std::move(name));
}

int LinearProgram::add_column(double objective, std::span<const Coefficient> rows,
                              double lower, double upper, std::string name) {
  check_finite(objective, "objective coefficient");
  check_bounds(lower, upper);
  std::vector<Coefficient> column;
  column.reserve(rows.size());
  for (const Coefficient& c : rows) {
    check_row(c.index);
    check_finite(c.value, "coefficient");
    if (c.value != 0.0) column.push_back(c);
  }
  std::sort(column.begin(), column.end(),
            [](const Coefficient& a, const Coefficient& b) { return a.index < b.index; });
  for (std::size_t k = 1; k < column.size(); ++k) {
    if (column[k].index == column[k - 1].index) {
      throw Error(ErrorCode::kInvalidModel,
                  "row " + std::to_string(column[k].index) + " listed twice in a column");
    }
  }
  objective_.push_back(objective);
  lower_.push_back(lower);
  upper_.push_back(upper);
  columns_.push_back(std::move(column));
  variable_names_.push_back(std::move(name));
  return variable_count() - 1;
}

int LinearProgram::add_row(RowSense sense, double rhs,
                           std::span<const Coefficient> vars, std::string name) {
  check_finite(rhs, "right-hand side");
  std::vector<int> seen;
  seen.reserve(vars.size());
  for (const Coefficient& c : vars) {
    check_variable(c.index);
    check_finite(c.value, "coefficient");
    seen.push_back(c.index);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorCode::kInvalidModel, "variable listed twice in a row");
  }
  const int row = row_count();
  sense_.push_back(sense);
  rhs_.push_back(rhs);
  row_names_.push_back(std::move(name));
  for (const Coefficient& c : vars) {
    if (c.value != 0.0) columns_[c.index].push_back({row, c.value});
  }
  return row;
}

void LinearProgram::set_bounds(int var, double lower, double upper) {
  check_variable(var);
  check_bounds(lower, upper);
  lower_[var] = lower;
  upper_[var] = upper;
}

void LinearProgram::set_objective(int var, double coefficient) {
  check_variable(var);
  check_finite(coefficient, "objective coefficient");
  objective_[var] = coefficient;
}

std::vector<Coefficient> LinearProgram::row(int r) const {
  check_row(r);
  std::vector<Coefficient> out;
  for (int j = 0; j < variable_count(); ++j) {
    for (const Coefficient& c : columns_[j]) {
      if (c.index == r) out.push_back({j, c.value});
    }
  }
  return out;
}

std::string LinearProgram::variable_name(int var) const {
  check_variable(var);
  return variable_names_[var].empty() ? "v" + std::to_string(var)
                                      : variable_names_[var];
}

std::string LinearProgram::row_name(int row) const {
  check_row(row);
  return row_names_[row].empty() ? "r" + std::to_string(row) : row_names_[row];
}

void LinearProgram::write_lp(std::ostream& out) const {
  const auto term = [&](double value, int var, bool first) {
    if (value < 0) {
      out << (first ? "-" : " - ");
    } else if (!first) {
      out << " + ";
    }
    out << std::abs(value) << ' ' << variable_name(var);
  };

  out << "Maximize\n obj:";
  bool first = true;
  for (int j = 0; j < variable_count(); ++j) {
    if (objective_[j] == 0.0) continue;
    out << ' ';
    term(objective_[j], j, first);
    first = false;
  }
  if (first) out << " 0 " << (variable_count() > 0 ? variable_name(0) : "x");
  out << "\nSubject To\n";
  std::vector<std::vector<Coefficient>> rows(row_count());
  for (int j = 0; j < variable_count(); ++j) {
    for (const Coefficient& c : columns_[j]) rows[c.index].push_back({j, c.value});
  }
  for (int r = 0; r < row_count(); ++r) {
    out << ' ' << row_name(r) << ':';
    first = true;
    for (const Coefficient& c : rows[r]) {
      out << ' ';
      term(c.value, c.index, first);
      first = false;
    }
    if (first) out << " 0 " << (variable_count() > 0 ? variable_name(0) : "x");
    switch (sense_[r]) {
      case RowSense::kLessEqual: out << " <= "; break;
      case RowSense::kEqual: out << " = "; break;
      case RowSense::kGreaterEqual: out << " >= "; break;
    }
    out << rhs_[r] << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < variable_count(); ++j) {
    const std::string name = variable_name(j);
    if (lower_[j] == -kInfinity && upper_[j] == kInfinity) {
      out << ' ' << name << " free\n";
    } else if (lower_[j] == -kInfinity) {
      out << " -inf <= " << name << " <= " << upper_[j] << '\n';
    } else if (upper_[j] == kInfinity) {
      if (lower_[j] != 0.0) out << ' ' << name << " >= " << lower_[j] << '\n';
    } else {
      out << ' ' << lower_[j] << " <= " << name << " <= " << upper_[j] << '\n';
    }
  }
  out << "End\n";
}

}  // namespace mdbp
