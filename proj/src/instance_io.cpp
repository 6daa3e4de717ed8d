// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mdbp Authors

#include "mdbp/instance_io.hpp"

#include <cctype>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mdbp/error.hpp"

namespace mdbp {

std::optional<InstanceFormat> parse_format_name(std::string_view name) {
  if (name == "edgelist") return InstanceFormat::kEdgeList;
  if (name == "gml") return InstanceFormat::kGml;
  return std::nullopt;
}

namespace {

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

// Collects labelled edges and rejects self-loops and repeats with the line
// they occur on, before the graph itself is validated.
class EdgeCollector {
 public:
  VertexId vertex(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }

  void add(VertexId u, VertexId v, int line) {
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop, "line " + std::to_string(line) +
                                            ": self-loop on " + labels_[u]);
    }
    if (!seen_.insert({std::min(u, v), std::max(u, v)}).second) {
      throw Error(ErrorCode::kDuplicateEdge, "line " + std::to_string(line) +
                                                 ": duplicate edge " + labels_[u] + " " +
                                                 labels_[v]);
    }
    edges_.push_back({u, v});
  }

  LabeledGraph finish() {
    Graph g = Graph::from_edges(static_cast<int>(labels_.size()), edges_);
    return {std::move(g), std::move(labels_)};
  }

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
  std::set<std::pair<VertexId, VertexId>> seen_;
  std::vector<Edge> edges_;
};

}  // namespace

LabeledGraph parse_edgelist(std::string_view text) {
  EdgeCollector edges;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string a, b;
    if (!(fields >> a)) continue;
    if (!(fields >> b)) parse_error(line, "expected two endpoints");
    const VertexId u = edges.vertex(a);
    const VertexId v = edges.vertex(b);
    edges.add(u, v, line);
  }
  return edges.finish();
}

namespace {

struct Token {
  std::string text;
  bool quoted = false;
  int line = 0;
};

std::vector<Token> tokenize_gml(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '[' || c == ']') {
      out.push_back({std::string(1, c), false, line});
      ++i;
    } else if (c == '"') {
      const int start_line = line;
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') {
        if (text[j] == '\n') ++line;
        ++j;
      }
      if (j >= text.size()) parse_error(start_line, "unterminated string");
      out.push_back({std::string(text.substr(i + 1, j - i - 1)), true, start_line});
      i = j + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != '[' && text[j] != ']') {
        ++j;
      }
      out.push_back({std::string(text.substr(i, j - i)), false, line});
      i = j;
    }
  }
  return out;
}

// Key/value list; a value is a scalar token or a nested list.
struct GmlList {
  struct Entry {
    std::string key;
    Token scalar;
    std::unique_ptr<GmlList> list;
    int line = 0;
  };
  std::vector<Entry> entries;

  const Entry* find(const std::string& key) const {
    for (const Entry& e : entries) {
      if (e.key == key) return &e;
    }
    return nullptr;
  }
};

std::unique_ptr<GmlList> parse_list(const std::vector<Token>& tokens, std::size_t& pos,
                                    bool nested) {
  auto list = std::make_unique<GmlList>();
  while (pos < tokens.size()) {
    const Token& key = tokens[pos];
    if (!key.quoted && key.text == "]") {
      if (!nested) parse_error(key.line, "unbalanced ']'");
      ++pos;
      return list;
    }
    if (key.quoted || key.text == "[") parse_error(key.line, "expected a key");
    if (++pos >= tokens.size()) parse_error(key.line, "missing value for " + key.text);
    GmlList::Entry entry;
    entry.key = key.text;
    entry.line = key.line;
    const Token& value = tokens[pos];
    if (!value.quoted && value.text == "[") {
      ++pos;
      entry.list = parse_list(tokens, pos, true);
    } else if (!value.quoted && value.text == "]") {
      parse_error(value.line, "missing value for " + key.text);
    } else {
      entry.scalar = value;
      ++pos;
    }
    list->entries.push_back(std::move(entry));
  }
  if (nested) parse_error(tokens.empty() ? 1 : tokens.back().line, "unbalanced '['");
  return list;
}

std::string scalar_of(const GmlList& block, const char* key, int line) {
  const GmlList::Entry* e = block.find(key);
  if (!e) parse_error(line, std::string("missing ") + key);
  if (e->list) parse_error(e->line, std::string(key) + " must be a scalar");
  return e->scalar.text;
}

}  // namespace

LabeledGraph parse_gml(std::string_view text) {
  const std::vector<Token> tokens = tokenize_gml(text);
  std::size_t pos = 0;
  const auto top = parse_list(tokens, pos, false);
  const GmlList::Entry* graph = top->find("graph");
  if (!graph || !graph->list) parse_error(1, "no graph block");

  EdgeCollector edges;
  std::unordered_map<std::string, VertexId> by_id;
  std::set<std::string> used_labels;
  for (const GmlList::Entry& e : graph->list->entries) {
    if (e.key != "node" || !e.list) continue;
    const std::string id = scalar_of(*e.list, "id", e.line);
    const GmlList::Entry* label_entry = e.list->find("label");
    const std::string label =
        label_entry && !label_entry->list ? label_entry->scalar.text : id;
    if (by_id.contains(id)) parse_error(e.line, "duplicate node id " + id);
    if (!used_labels.insert(label).second) parse_error(e.line, "duplicate node label " + label);
    by_id[id] = edges.vertex(label);
  }
  for (const GmlList::Entry& e : graph->list->entries) {
    if (e.key != "edge" || !e.list) continue;
    const std::string source = scalar_of(*e.list, "source", e.line);
    const std::string target = scalar_of(*e.list, "target", e.line);
    const auto s = by_id.find(source);
    const auto t = by_id.find(target);
    if (s == by_id.end()) parse_error(e.line, "unknown node " + source);
    if (t == by_id.end()) parse_error(e.line, "unknown node " + target);
    edges.add(s->second, t->second, e.line);
  }
  return edges.finish();
}

LabeledGraph load_graph(const std::string& path, InstanceFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return format == InstanceFormat::kGml ? parse_gml(buf.str()) : parse_edgelist(buf.str());
}

}  // namespace mdbp
