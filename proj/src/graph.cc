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

#include "graphsamp/graph.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "graphsamp/errors.h"

namespace graphsamp {

namespace {

// Builds a CSR block from (row, col, w) triples sorted by (row, col), merging
// repeated (row, col) pairs by summing weights.
void BuildCsr(std::size_t n, std::vector<Edge>& arcs, bool by_source,
              std::vector<std::size_t>& offsets, std::vector<Neighbor>& adj,
              std::vector<double>& strength) {
  auto row = [by_source](const Edge& e) { return by_source ? e.source : e.target; };
  auto col = [by_source](const Edge& e) { return by_source ? e.target : e.source; };
  std::sort(arcs.begin(), arcs.end(), [&](const Edge& a, const Edge& b) {
    return std::pair(row(a), col(a)) < std::pair(row(b), col(b));
  });

  offsets.assign(n + 1, 0);
  adj.clear();
  adj.reserve(arcs.size());
  strength.assign(n, 0.0);
  std::size_t i = 0;
  for (NodeId r = 0; r < n; ++r) {
    offsets[r] = adj.size();
    while (i < arcs.size() && row(arcs[i]) == r) {
      NodeId c = col(arcs[i]);
      double w = 0.0;
      while (i < arcs.size() && row(arcs[i]) == r && col(arcs[i]) == c) {
        w += arcs[i].weight;
        ++i;
      }
      adj.push_back({c, w});
      strength[r] += w;
    }
  }
  offsets[n] = adj.size();
}

}  // namespace

double GraphAccess::edge_weight(NodeId i, NodeId j) const {
  auto nbrs = out_neighbors(i);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j,
                             [](const Neighbor& a, NodeId v) { return a.node < v; });
  return (it != nbrs.end() && it->node == j) ? it->weight : 0.0;
}

Graph Graph::FromEdges(std::size_t n, std::span<const Edge> edges,
                       bool directed) {
  std::vector<Edge> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const Edge& e : edges) {
    if (e.source >= n || e.target >= n) {
      throw ValidationError("edge endpoint out of range: " +
                            std::to_string(e.source) + "->" +
                            std::to_string(e.target) + " with n=" +
                            std::to_string(n));
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw ValidationError("edge weight must be finite and nonnegative");
    }
    arcs.push_back(e);
    if (!directed && e.source != e.target) {
      arcs.push_back({e.target, e.source, e.weight});
    }
  }

  Graph g;
  g.directed_ = directed;
  BuildCsr(n, arcs, /*by_source=*/true, g.out_offsets_, g.out_adj_,
           g.out_strength_);
  BuildCsr(n, arcs, /*by_source=*/false, g.in_offsets_, g.in_adj_,
           g.in_strength_);
  return g;
}

std::span<const Neighbor> Graph::out_neighbors(NodeId i) const {
  return {out_adj_.data() + out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]};
}

std::span<const Neighbor> Graph::in_neighbors(NodeId i) const {
  return {in_adj_.data() + in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]};
}

std::vector<Edge> Graph::arcs() const {
  std::vector<Edge> out;
  out.reserve(out_adj_.size());
  for (NodeId i = 0; i < node_count(); ++i) {
    for (const Neighbor& nb : out_neighbors(i)) out.push_back({i, nb.node, nb.weight});
  }
  return out;
}

std::uint64_t Graph::content_hash() const {
  // FNV-1a over a fixed little-endian byte layout.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(directed_ ? 1 : 0);
  mix(node_count());
  for (NodeId i = 0; i < node_count(); ++i) {
    for (const Neighbor& nb : out_neighbors(i)) {
      mix(i);
      mix(nb.node);
      mix(std::bit_cast<std::uint64_t>(nb.weight));
    }
  }
  return h;
}

NodeMapping::NodeMapping(std::vector<std::int64_t> sub_to_full)
    : sub_to_full_(std::move(sub_to_full)) {
  full_to_sub_.reserve(sub_to_full_.size());
  for (NodeId k = 0; k < sub_to_full_.size(); ++k) {
    auto [it, inserted] = full_to_sub_.emplace(sub_to_full_[k], k);
    if (!inserted) {
      throw ValidationError("node mapping is not injective: id " +
                            std::to_string(sub_to_full_[k]) + " repeated");
    }
  }
}

std::optional<NodeId> NodeMapping::to_sub(std::int64_t full) const {
  auto it = full_to_sub_.find(full);
  if (it == full_to_sub_.end()) return std::nullopt;
  return it->second;
}

std::pair<Graph, NodeMapping> InducedSubgraph(const Graph& g,
                                              std::span<const NodeId> nodes) {
  if (nodes.empty()) throw ValidationError("induced subgraph of an empty node set");
  constexpr NodeId kAbsent = static_cast<NodeId>(-1);
  std::vector<NodeId> local(g.node_count(), kAbsent);
  std::vector<std::int64_t> sub_to_full;
  sub_to_full.reserve(nodes.size());
  for (NodeId v : nodes) {
    if (v >= g.node_count()) {
      throw ValidationError("node " + std::to_string(v) + " out of range");
    }
    if (local[v] != kAbsent) {
      throw ValidationError("node " + std::to_string(v) + " listed twice");
    }
    local[v] = static_cast<NodeId>(sub_to_full.size());
    sub_to_full.push_back(v);
  }

  // Undirected graphs store both directions; keep one copy of each edge and
  // let FromEdges mirror it.
  std::vector<Edge> arcs;
  for (NodeId v : nodes) {
    for (const Neighbor& nb : g.out_neighbors(v)) {
      NodeId a = local[v], b = local[nb.node];
      if (b == kAbsent || (!g.directed() && a > b)) continue;
      arcs.push_back({a, b, nb.weight});
    }
  }
  return {Graph::FromEdges(nodes.size(), arcs, g.directed()),
          NodeMapping(std::move(sub_to_full))};
}

}  // namespace graphsamp
