// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include <doctest.h>

#include <sstream>
#include <string>

#include "mdbp/error.hpp"
#include "mdbp/report.hpp"
#include "support/fixtures.hpp"

using namespace mdbp;

TEST_CASE("run records survive a JSON round trip") {
  const LabeledGraph input =
      parse_edgelist("a b\nb c\na c\nc d\nd e\ne f\nd f\n");
  SolverConfig cfg;
  cfg.mcp = false;
  const SolveReport report = solve(input.graph, cfg);
  RunRecord rec = make_run_record("bridged", input, cfg, report);
  rec.brute_force_objective = brute_force_optimum(input.graph).value;

  CHECK(rec.communities.size() == 2);
  CHECK(rec.communities[0].size() == 3);
  const std::string text = to_json(rec);
  CHECK(text.find("\"objective_5dp\": \"3.33333\"") != std::string::npos);
  const RunRecord back = run_record_from_json(text);
  CHECK(back == rec);
  CHECK(back.objective == report.objective);
  CHECK(back.log.size() == static_cast<std::size_t>(report.iterations));
}

TEST_CASE("unfinished node bounds travel as null") {
  RunRecord rec;
  rec.instance = "x";
  NodeRecord n;
  n.id = 3;
  n.upper_bound = 1.5;
  n.branch = VertexPair{2, 7};
  rec.nodes.push_back(n);
  const RunRecord back = run_record_from_json(to_json(rec));
  CHECK(back == rec);
  CHECK(back.nodes[0].lower_bound == -kInfinity);
}

TEST_CASE("malformed run records are parse errors") {
  try {
    run_record_from_json("{\"instance\": 3}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParseError);
  }
}

TEST_CASE("iteration CSV has one row per master solve") {
  const Graph g = mdbp::testing::fractional_root_graph();
  const SolveReport report = solve(g);
  std::ostringstream csv;
  write_iteration_csv(csv, report.log);
  const std::string text = csv.str();
  long lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == report.iterations + 1);
  CHECK(text.rfind("node,iteration,", 0) == 0);
  CHECK(format_objective(7.845098) == "7.84510");
}
