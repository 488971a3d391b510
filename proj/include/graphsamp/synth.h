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

#ifndef GRAPHSAMP_SYNTH_H_
#define GRAPHSAMP_SYNTH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "graphsamp/graph.h"
#include "graphsamp/partition.h"

namespace graphsamp {

struct SbmSpec {
  std::vector<std::size_t> block_sizes;
  double p_in = 0.0;
  double p_out = 0.0;
  bool directed = false;
  std::uint64_t rng_seed = 0;

  std::size_t node_count() const;

  friend bool operator==(const SbmSpec&, const SbmSpec&) = default;
};

struct SbmGraph {
  Graph graph;
  // Block of each node; categories are "0", "1", ... in block order.
  LabeledPartition blocks;
};

// Planted-partition graph: nodes are laid out block by block, and every pair
// i != j is linked independently with p_in inside a block and p_out across.
// Undirected specs draw each unordered pair once; directed ones draw i->j and
// j->i independently. Deterministic in rng_seed.
SbmGraph GenerateSbm(const SbmSpec& spec);

// Node attributes correlated with blocks: node in block b keeps labels[b] with
// probability 1 - noise, otherwise takes one of the other labels uniformly.
// Unknown nodes stay unknown. Requires labels.size() >= number of blocks and
// at least two labels when noise > 0.
LabeledPartition PlantAttributes(const LabeledPartition& blocks, double noise,
                                 const std::vector<std::string>& labels,
                                 std::uint64_t rng_seed);

}  // namespace graphsamp

#endif  // GRAPHSAMP_SYNTH_H_
