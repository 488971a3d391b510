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

#ifndef GRAPHSAMP_GRAPH_H_
#define GRAPHSAMP_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graphsamp {

using NodeId = std::uint32_t;

struct Neighbor {
  NodeId node;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
  NodeId source;
  NodeId target;
  double weight = 1.0;
};

// Read-only neighbourhood queries that every sampler runs against. A backend
// must answer consistently for the lifetime of a crawl. Neighbour spans are
// sorted by node id and contain each neighbour at most once.
class GraphAccess {
 public:
  virtual ~GraphAccess() = default;

  virtual std::size_t node_count() const = 0;
  virtual bool directed() const = 0;
  virtual std::span<const Neighbor> out_neighbors(NodeId i) const = 0;
  virtual std::span<const Neighbor> in_neighbors(NodeId i) const = 0;

  std::size_t out_degree(NodeId i) const { return out_neighbors(i).size(); }
  std::size_t in_degree(NodeId i) const { return in_neighbors(i).size(); }

  // Weighted degrees (row / column sums of the adjacency matrix).
  virtual double out_strength(NodeId i) const = 0;
  virtual double in_strength(NodeId i) const = 0;

  // Weight of edge i->j, 0 when absent. O(log deg).
  double edge_weight(NodeId i, NodeId j) const;
};

// Immutable weighted graph in compressed sparse form. Holds both the out- and
// in-adjacency; the two are exact transposes. Undirected graphs store every
// edge in both directions. Self-loops are kept; duplicate edges are merged by
// summing their weights.
class Graph final : public GraphAccess {
 public:
  Graph() = default;

  // Builds from an edge list over nodes 0..n-1. Throws ValidationError on an
  // out-of-range endpoint or a negative/non-finite weight.
  static Graph FromEdges(std::size_t n, std::span<const Edge> edges,
                         bool directed);

  std::size_t node_count() const override { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  bool directed() const override { return directed_; }
  std::span<const Neighbor> out_neighbors(NodeId i) const override;
  std::span<const Neighbor> in_neighbors(NodeId i) const override;
  double out_strength(NodeId i) const override { return out_strength_[i]; }
  double in_strength(NodeId i) const override { return in_strength_[i]; }

  // Number of stored directed arcs (an undirected edge counts twice unless it
  // is a self-loop).
  std::size_t arc_count() const { return out_adj_.size(); }

  // All stored arcs, ordered by (source, target).
  std::vector<Edge> arcs() const;

  // Content hash over the directed flag and the arc list, stable across runs.
  std::uint64_t content_hash() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.out_offsets_ == b.out_offsets_ &&
           a.out_adj_ == b.out_adj_;
  }

 private:
  bool directed_ = true;
  std::vector<std::size_t> out_offsets_;
  std::vector<Neighbor> out_adj_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Neighbor> in_adj_;
  std::vector<double> out_strength_;
  std::vector<double> in_strength_;
};

// Maps dense sub-graph ids to ids of a larger id space and back.
class NodeMapping {
 public:
  NodeMapping() = default;
  explicit NodeMapping(std::vector<std::int64_t> sub_to_full);

  std::size_t size() const { return sub_to_full_.size(); }
  std::int64_t to_full(NodeId sub) const { return sub_to_full_[sub]; }
  std::optional<NodeId> to_sub(std::int64_t full) const;
  const std::vector<std::int64_t>& sub_to_full() const { return sub_to_full_; }

  friend bool operator==(const NodeMapping& a, const NodeMapping& b) {
    return a.sub_to_full_ == b.sub_to_full_;
  }

 private:
  std::vector<std::int64_t> sub_to_full_;
  std::unordered_map<std::int64_t, NodeId> full_to_sub_;
};

// Sub-graph induced by `nodes` (in the given order: nodes[k] becomes id k).
// Keeps exactly the arcs with both endpoints in the set, weights unchanged.
// Throws ValidationError on an empty set, a duplicate or an out-of-range id.
std::pair<Graph, NodeMapping> InducedSubgraph(const Graph& g,
                                              std::span<const NodeId> nodes);

}  // namespace graphsamp

#endif  // GRAPHSAMP_GRAPH_H_
