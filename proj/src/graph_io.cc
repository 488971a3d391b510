// Copyright 2026 The graphsamp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphsamp/graph_io.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphsamp/errors.h"

namespace graphsamp {

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
bool ParseNumber(std::string_view token, T& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return in;
}

}  // namespace

LoadedGraph ParseEdgeList(std::istream& in, bool directed) {
  std::unordered_map<std::int64_t, NodeId> dense;
  std::vector<std::int64_t> original;
  std::vector<Edge> edges;
  auto intern = [&](std::int64_t id) {
    auto [it, inserted] = dense.emplace(id, static_cast<NodeId>(original.size()));
    if (inserted) original.push_back(id);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = SplitWhitespace(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("expected 'src dst [weight]', got " +
                           std::to_string(tokens.size()) + " fields",
                       line_no);
    }
    std::int64_t src = 0, dst = 0;
    if (!ParseNumber(tokens[0], src) || !ParseNumber(tokens[1], dst)) {
      throw ParseError("node ids must be integers", line_no);
    }
    double w = 1.0;
    if (tokens.size() == 3 && !ParseNumber(tokens[2], w)) {
      throw ParseError("weight is not a number", line_no);
    }
    if (w < 0.0) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": negative edge weight");
    }
    NodeId s = intern(src);
    NodeId t = intern(dst);
    edges.push_back({s, t, w});
  }
  Graph g = Graph::FromEdges(original.size(), edges, directed);
  return {std::move(g), NodeMapping(std::move(original))};
}

LoadedGraph LoadEdgeList(const std::filesystem::path& path, bool directed) {
  auto in = OpenOrThrow(path);
  return ParseEdgeList(in, directed);
}

void StoreEdgeList(const Graph& g, const NodeMapping* mapping, std::ostream& out) {
  char buf[64];
  for (const Edge& e : g.arcs()) {
    if (!g.directed() && e.source > e.target) continue;
    std::int64_t s = mapping ? mapping->to_full(e.source) : e.source;
    std::int64_t t = mapping ? mapping->to_full(e.target) : e.target;
    std::snprintf(buf, sizeof buf, "%.17g", e.weight);
    out << s << ' ' << t << ' ' << buf << '\n';
  }
}

LabeledPartition ParseLabels(std::istream& in) {
  LabeledPartition labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("expected 'id<TAB>label'", line_no);
    std::int64_t id = 0;
    if (!ParseNumber(std::string_view(line).substr(0, tab), id) || id < 0 ||
        id > static_cast<std::int64_t>(std::numeric_limits<NodeId>::max() - 1)) {
      throw ParseError("node id must be a nonnegative integer", line_no);
    }
    std::string label = line.substr(tab + 1);
    if (label.empty()) throw ParseError("empty label", line_no);
    auto node = static_cast<NodeId>(id);
    if (node < labels.size() && !labels.is_unknown(node) && labels.label(node) != label) {
      throw ValidationError("line " + std::to_string(line_no) + ": node " +
                            std::to_string(id) + " labelled both '" +
                            labels.label(node) + "' and '" + label + "'");
    }
    labels.Assign(node, label);
  }
  return labels;
}

LabeledPartition LoadLabels(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  return ParseLabels(in);
}

}  // namespace graphsamp
