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

#ifndef GRAPHSAMP_GRAPH_IO_H_
#define GRAPHSAMP_GRAPH_IO_H_

#include <filesystem>
#include <iosfwd>

#include "graphsamp/graph.h"
#include "graphsamp/partition.h"

namespace graphsamp {

struct LoadedGraph {
  Graph graph;
  // Dense id -> id as written in the file. Dense ids follow first appearance.
  NodeMapping mapping;
};

// SNAP-style edge list: one "src dst [weight]" per line, whitespace separated,
// '#' starts a comment line. Weight defaults to 1. Repeated edges are merged
// by summing weights. Undirected input materialises both directions.
// Throws ParseError (with line number) and ValidationError (negative weight).
LoadedGraph ParseEdgeList(std::istream& in, bool directed);
LoadedGraph LoadEdgeList(const std::filesystem::path& path, bool directed);

// Writes "src dst weight" lines using original ids when a mapping is given.
// Undirected graphs write each edge once.
void StoreEdgeList(const Graph& g, const NodeMapping* mapping, std::ostream& out);

// "id<TAB>label" per line. The result is indexed by file id; ids that do not
// appear are unknown. Re-stating an id with the same label is allowed, a
// conflicting label is a ValidationError.
LabeledPartition ParseLabels(std::istream& in);
LabeledPartition LoadLabels(const std::filesystem::path& path);

}  // namespace graphsamp

#endif  // GRAPHSAMP_GRAPH_IO_H_
