// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include "mdbp/error.hpp"
#include "mdbp/lp.hpp"
#include "support/oracles.hpp"

using namespace mdbp;
using mdbp::testing::DenseLp;
using mdbp::testing::random_lp;
using mdbp::testing::vertex_optimum;

namespace {

void check_strong_duality(const DenseLp& d, const LpSolution& sol) {
  REQUIRE(sol.duals.size() == d.a.size());
  const auto rep = mdbp::testing::duality_report(d, sol);
  CHECK(rep.sign_violation <= 1e-6);
  CHECK(rep.bounded);
  CHECK(rep.reduced_cost_error <= 1e-6);
  CHECK(rep.gap <= 1e-6 * (1.0 + std::abs(sol.objective)));
}

void check_primal_feasible(const DenseLp& d, const LpSolution& sol) {
  for (int j = 0; j < d.n; ++j) {
    CHECK(sol.values[j] >= d.lo[j] - 1e-7);
    CHECK(sol.values[j] <= d.up[j] + 1e-7);
  }
  for (std::size_t r = 0; r < d.a.size(); ++r) {
    double act = 0.0;
    for (int j = 0; j < d.n; ++j) act += d.a[r][j] * sol.values[j];
    if (d.sense[r] != RowSense::kGreaterEqual) CHECK(act <= d.b[r] + 1e-6);
    if (d.sense[r] != RowSense::kLessEqual) CHECK(act >= d.b[r] - 1e-6);
  }
}

}  // namespace

TEST_CASE("lp box example with duals") {
  LinearProgram lp;
  lp.add_variable(1.0, 0.0, kInfinity);
  lp.add_variable(1.0, 0.0, kInfinity);
  const std::vector<Coefficient> r0 = {{0, 1.0}};
  const std::vector<Coefficient> r1 = {{1, 1.0}};
  lp.add_row(RowSense::kLessEqual, 1.0, r0);
  lp.add_row(RowSense::kLessEqual, 1.0, r1);
  const LpSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == doctest::Approx(2.0));
  CHECK(sol.values[0] == doctest::Approx(1.0));
  CHECK(sol.values[1] == doctest::Approx(1.0));
  CHECK(sol.duals[0] == doctest::Approx(1.0));
  CHECK(sol.duals[1] == doctest::Approx(1.0));
}

TEST_CASE("lp infeasible and unbounded") {
  LinearProgram infeasible;
  infeasible.add_variable(1.0);
  const std::vector<Coefficient> x = {{0, 1.0}};
  infeasible.add_row(RowSense::kGreaterEqual, 2.0, x);
  infeasible.add_row(RowSense::kLessEqual, 1.0, x);
  CHECK(lp_solve(infeasible).status == LpStatus::kInfeasible);

  LinearProgram unbounded;
  unbounded.add_variable(1.0);
  unbounded.add_variable(0.0);
  const std::vector<Coefficient> diff = {{0, 1.0}, {1, -1.0}};
  unbounded.add_row(RowSense::kLessEqual, 1.0, diff);
  CHECK(lp_solve(unbounded).status == LpStatus::kUnbounded);
}

TEST_CASE("lp add_column and add_row") {
  LinearProgram lp;
  lp.add_row(RowSense::kLessEqual, 1.0, {});
  const std::vector<Coefficient> in_row = {{0, 1.0}};
  const int col = lp.add_column(5.0, in_row);
  CHECK(col == 0);
  CHECK(lp_solve(lp).objective == doctest::Approx(5.0));
  // An identical column is accepted.
  CHECK(lp.add_column(5.0, in_row) == 1);
  CHECK(lp_solve(lp).objective == doctest::Approx(5.0));

  LinearProgram two;
  two.add_variable(1.0, 0.0, 1.0);
  two.add_variable(1.0, 0.0, 1.0);
  CHECK(lp_solve(two).objective == doctest::Approx(2.0));
  const std::vector<Coefficient> x1 = {{1, 1.0}};
  two.add_row(RowSense::kLessEqual, 0.0, x1);
  CHECK(lp_solve(two).objective == doctest::Approx(1.0));
}

TEST_CASE("lp model validation") {
  LinearProgram lp;
  lp.add_variable(1.0);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  const std::vector<Coefficient> unknown = {{3, 1.0}};
  CHECK(code_of([&] { lp.add_row(RowSense::kLessEqual, 1.0, unknown); }) ==
        ErrorCode::kUnknownVariable);
  CHECK(code_of([&] { lp.add_column(1.0, unknown); }) == ErrorCode::kUnknownRow);
  CHECK(code_of([&] { lp.set_bounds(0, 2.0, 1.0); }) == ErrorCode::kInvalidModel);
  CHECK(code_of([&] { lp.set_bounds(0, std::nan(""), 1.0); }) == ErrorCode::kInvalidModel);
  const std::vector<Coefficient> twice = {{0, 1.0}, {0, 2.0}};
  CHECK(code_of([&] { lp.add_row(RowSense::kLessEqual, 1.0, twice); }) ==
        ErrorCode::kInvalidModel);

  std::ostringstream out;
  lp.write_lp(out);
  CHECK(out.str().find("Maximize") != std::string::npos);
}

TEST_CASE("lp cycling example terminates") {
  // Classic degenerate program on which textbook Dantzig pricing cycles.
  LinearProgram lp;
  lp.add_variable(0.75);
  lp.add_variable(-150.0);
  lp.add_variable(0.02);
  lp.add_variable(-6.0);
  const std::vector<Coefficient> r0 = {{0, 0.25}, {1, -60.0}, {2, -0.04}, {3, 9.0}};
  const std::vector<Coefficient> r1 = {{0, 0.5}, {1, -90.0}, {2, -0.02}, {3, 3.0}};
  const std::vector<Coefficient> r2 = {{2, 1.0}};
  lp.add_row(RowSense::kLessEqual, 0.0, r0);
  lp.add_row(RowSense::kLessEqual, 0.0, r1);
  lp.add_row(RowSense::kLessEqual, 1.0, r2);
  const LpSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == doctest::Approx(0.05));
}

TEST_CASE("property: random lps against vertex enumeration and strong duality") {
  std::mt19937_64 rng(1234);
  int optimal = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const bool boxed = trial % 2 == 0;
    const DenseLp d = random_lp(rng, n, m, boxed);
    const LpSolution sol = lp_solve(d.build());
    if (boxed) {
      const auto oracle = vertex_optimum(d);
      if (!oracle) {
        CHECK(sol.status == LpStatus::kInfeasible);
        continue;
      }
      REQUIRE(sol.status == LpStatus::kOptimal);
      CHECK(sol.objective == doctest::Approx(*oracle).epsilon(1e-7));
    }
    if (sol.status != LpStatus::kOptimal) continue;
    ++optimal;
    check_primal_feasible(d, sol);
    check_strong_duality(d, sol);
  }
  CHECK(optimal > 150);
}

TEST_CASE("property: larger random lps satisfy strong duality") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const DenseLp d = random_lp(rng, 30, 20, false);
    const LpSolution sol = lp_solve(d.build());
    if (sol.status != LpStatus::kOptimal) continue;
    check_primal_feasible(d, sol);
    check_strong_duality(d, sol);
  }
}

TEST_CASE("property: warm start after bound changes agrees with a cold solve") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    DenseLp d = random_lp(rng, 8, 6, true);
    SimplexSolver warm(d.build());
    warm.solve();
    for (int round = 0; round < 5; ++round) {
      const int j = std::uniform_int_distribution<int>(0, d.n - 1)(rng);
      const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
      if (kind == 0) d.up[j] = d.lo[j];
      else if (kind == 1) d.lo[j] = d.up[j];
      else d.lo[j] = 0.0, d.up[j] = 3.0;
      warm.set_bounds(j, d.lo[j], d.up[j]);
      const LpSolution w = warm.solve();
      const LpSolution c = lp_solve(d.build());
      REQUIRE(w.status == c.status);
      if (c.status == LpStatus::kOptimal) {
        CHECK(w.objective == doctest::Approx(c.objective).epsilon(1e-7));
        check_primal_feasible(d, w);
        check_strong_duality(d, w);
      }
    }
  }
}

TEST_CASE("lp solves are deterministic") {
  std::mt19937_64 rng(42);
  const DenseLp d = random_lp(rng, 25, 15, true);
  const LpSolution a = lp_solve(d.build());
  const LpSolution b = lp_solve(d.build());
  CHECK(a.status == b.status);
  CHECK(a.values == b.values);
  CHECK(a.iterations == b.iterations);
}
