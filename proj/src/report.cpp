// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include "mdbp/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "mdbp/error.hpp"

namespace mdbp {

using nlohmann::json;

bool operator==(const IterationEvent& a, const IterationEvent& b) {
  return a.node == b.node && a.iteration == b.iteration &&
         a.master_objective == b.master_objective &&
         a.artificial_active == b.artificial_active && a.subproblems == b.subproblems &&
         a.pricing_nodes == b.pricing_nodes && a.columns_added == b.columns_added &&
         a.duplicate_columns == b.duplicate_columns && a.promoted == b.promoted &&
         a.equality_size == b.equality_size;
}

bool operator==(const NodeRecord& a, const NodeRecord& b) {
  return a.id == b.id && a.upper_bound == b.upper_bound && a.lower_bound == b.lower_bound &&
         a.iterations == b.iterations && a.pruned == b.pruned && a.branch == b.branch;
}

bool operator==(const RunRecord& a, const RunRecord& b) {
  return a.instance == b.instance && a.vertex_count == b.vertex_count &&
         a.edge_count == b.edge_count && a.config.spr == b.config.spr &&
         a.config.mcp == b.config.mcp && a.config.time_limit == b.config.time_limit &&
         a.config.prove_optimal_pricing == b.config.prove_optimal_pricing &&
         a.status == b.status && a.objective == b.objective &&
         a.communities == b.communities && a.nodes_processed == b.nodes_processed &&
         a.iterations == b.iterations && a.columns_generated == b.columns_generated &&
         a.equality_size == b.equality_size && a.wall_seconds == b.wall_seconds &&
         a.nodes == b.nodes && a.log == b.log &&
         a.brute_force_objective == b.brute_force_objective;
}

RunRecord make_run_record(std::string instance, const LabeledGraph& input,
                          const SolverConfig& config, const SolveReport& report) {
  RunRecord r;
  r.instance = std::move(instance);
  r.vertex_count = input.graph.vertex_count();
  r.edge_count = input.graph.edge_count();
  r.config = config;
  r.status = report.status;
  r.objective = report.objective;
  if (report.partition) {
    for (const Community& c : report.partition->communities()) {
      std::vector<std::string> names;
      for (VertexId v : c.members()) names.push_back(input.labels[v]);
      r.communities.push_back(std::move(names));
    }
  }
  r.nodes_processed = report.nodes_processed;
  r.iterations = report.iterations;
  r.columns_generated = report.columns_generated;
  r.equality_size = report.equality_size;
  r.wall_seconds = report.wall_seconds;
  r.nodes = report.nodes;
  r.log = report.log;
  return r;
}

std::string format_objective(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", value);
  return buf;
}

namespace {

// JSON has no infinities; unbounded node bounds travel as null.
json bound_to_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double bound_from_json(const json& j) {
  return j.is_null() ? -std::numeric_limits<double>::infinity() : j.get<double>();
}

SolveStatus status_from_name(const std::string& s) {
  if (s == to_string(SolveStatus::kOptimal)) return SolveStatus::kOptimal;
  if (s == to_string(SolveStatus::kTimedOutWithLowerBound)) {
    return SolveStatus::kTimedOutWithLowerBound;
  }
  throw Error(ErrorCode::kParseError, "unknown status " + s);
}

}  // namespace

std::string to_json(const RunRecord& r) {
  json doc;
  doc["instance"] = r.instance;
  doc["n"] = r.vertex_count;
  doc["m"] = r.edge_count;
  doc["config"] = {{"spr", r.config.spr},
                   {"mcp", r.config.mcp},
                   {"time_limit", r.config.time_limit},
                   {"prove_optimal_pricing", r.config.prove_optimal_pricing}};
  doc["status"] = to_string(r.status);
  doc["objective"] = r.objective;
  doc["objective_5dp"] = format_objective(r.objective);
  doc["community_count"] = r.communities.size();
  doc["communities"] = r.communities;
  doc["nodes_processed"] = r.nodes_processed;
  doc["iterations"] = r.iterations;
  doc["columns_generated"] = r.columns_generated;
  doc["equality_size"] = r.equality_size;
  doc["wall_seconds"] = r.wall_seconds;
  json nodes = json::array();
  for (const NodeRecord& n : r.nodes) {
    json j = {{"id", n.id},
              {"upper_bound", bound_to_json(n.upper_bound)},
              {"lower_bound", bound_to_json(n.lower_bound)},
              {"iterations", n.iterations},
              {"pruned", n.pruned}};
    j["branch"] = n.branch ? json::array({n.branch->first, n.branch->second}) : json(nullptr);
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  json log = json::array();
  for (const IterationEvent& e : r.log) {
    log.push_back({{"node", e.node},
                   {"iteration", e.iteration},
                   {"master_objective", e.master_objective},
                   {"artificial_active", e.artificial_active},
                   {"subproblems", e.subproblems},
                   {"pricing_nodes", e.pricing_nodes},
                   {"columns_added", e.columns_added},
                   {"duplicate_columns", e.duplicate_columns},
                   {"promoted", e.promoted},
                   {"equality_size", e.equality_size}});
  }
  doc["log"] = std::move(log);
  doc["brute_force_objective"] =
      r.brute_force_objective ? json(*r.brute_force_objective) : json(nullptr);
  return doc.dump(2) + "\n";
}

RunRecord run_record_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    RunRecord r;
    r.instance = doc.at("instance").get<std::string>();
    r.vertex_count = doc.at("n").get<int>();
    r.edge_count = doc.at("m").get<int>();
    const json& cfg = doc.at("config");
    r.config.spr = cfg.at("spr").get<bool>();
    r.config.mcp = cfg.at("mcp").get<bool>();
    r.config.time_limit = cfg.at("time_limit").get<double>();
    r.config.prove_optimal_pricing = cfg.at("prove_optimal_pricing").get<bool>();
    r.status = status_from_name(doc.at("status").get<std::string>());
    r.objective = doc.at("objective").get<double>();
    r.communities = doc.at("communities").get<std::vector<std::vector<std::string>>>();
    r.nodes_processed = doc.at("nodes_processed").get<int>();
    r.iterations = doc.at("iterations").get<long>();
    r.columns_generated = doc.at("columns_generated").get<long>();
    r.equality_size = doc.at("equality_size").get<int>();
    r.wall_seconds = doc.at("wall_seconds").get<double>();
    for (const json& j : doc.at("nodes")) {
      NodeRecord n;
      n.id = j.at("id").get<int>();
      n.upper_bound = bound_from_json(j.at("upper_bound"));
      n.lower_bound = bound_from_json(j.at("lower_bound"));
      n.iterations = j.at("iterations").get<int>();
      n.pruned = j.at("pruned").get<bool>();
      if (!j.at("branch").is_null()) {
        n.branch = VertexPair{j.at("branch").at(0).get<VertexId>(),
                              j.at("branch").at(1).get<VertexId>()};
      }
      r.nodes.push_back(n);
    }
    for (const json& j : doc.at("log")) {
      IterationEvent e;
      e.node = j.at("node").get<int>();
      e.iteration = j.at("iteration").get<int>();
      e.master_objective = j.at("master_objective").get<double>();
      e.artificial_active = j.at("artificial_active").get<bool>();
      e.subproblems = j.at("subproblems").get<int>();
      e.pricing_nodes = j.at("pricing_nodes").get<long>();
      e.columns_added = j.at("columns_added").get<int>();
      e.duplicate_columns = j.at("duplicate_columns").get<int>();
      e.promoted = j.at("promoted").get<int>();
      e.equality_size = j.at("equality_size").get<int>();
      r.log.push_back(e);
    }
    if (!doc.at("brute_force_objective").is_null()) {
      r.brute_force_objective = doc.at("brute_force_objective").get<double>();
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("run record: ") + e.what());
  }
}

void write_iteration_csv(std::ostream& out, const std::vector<IterationEvent>& log) {
  out << "node,iteration,master_objective,artificial_active,subproblems,pricing_nodes,"
         "columns_added,duplicate_columns,promoted,equality_size\n";
  char buf[64];
  for (const IterationEvent& e : log) {
    std::snprintf(buf, sizeof buf, "%.17g", e.master_objective);
    out << e.node << ',' << e.iteration << ',' << buf << ',' << (e.artificial_active ? 1 : 0)
        << ',' << e.subproblems << ',' << e.pricing_nodes << ',' << e.columns_added << ','
        << e.duplicate_columns << ',' << e.promoted << ',' << e.equality_size << '\n';
  }
}

}  // namespace mdbp
