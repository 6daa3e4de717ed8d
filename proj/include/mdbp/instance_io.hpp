// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdbp/graph.hpp"

namespace mdbp {

enum class InstanceFormat { kEdgeList, kGml };

std::optional<InstanceFormat> parse_format_name(std::string_view name);

/// A graph plus the external label of every internal vertex id.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

/// Whitespace separated endpoint pairs, one edge per line, `#` starts a
/// comment. Tokens after the second on a line are ignored. Vertices are
/// numbered in order of first appearance.
LabeledGraph parse_edgelist(std::string_view text);

/// Reads the `node [ id .. label .. ]` and `edge [ source .. target .. ]`
/// blocks of a GML document; every other key is skipped. Edges are taken as
/// undirected. Vertices are numbered in node block order and labelled by
/// `label` when present, by `id` otherwise.
LabeledGraph parse_gml(std::string_view text);

LabeledGraph load_graph(const std::string& path, InstanceFormat format);

}  // namespace mdbp
