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

#include "graphsamp/synth.h"

#include <cmath>
#include <numeric>

#include "graphsamp/errors.h"
#include "random_util.h"

namespace graphsamp {

namespace {

using internal::Rng;

// Calls visit(t) for each t in [0, total) kept independently with
// probability p, in increasing order, using geometric gaps.
template <typename Visit>
void ForEachBernoulliIndex(Rng& rng, std::uint64_t total, double p, Visit visit) {
  if (p <= 0.0 || total == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t t = 0; t < total; ++t) visit(t);
    return;
  }
  const double log_q = std::log1p(-p);
  std::uint64_t t = 0;
  while (true) {
    double u = internal::Uniform01(rng);
    double gap = std::floor(std::log1p(-u) / log_q);
    if (gap >= static_cast<double>(total - t)) return;
    t += static_cast<std::uint64_t>(gap);
    visit(t);
    if (++t >= total) return;
  }
}

// Decodes t in [0, s(s-1)/2) into the pair (row, col) with col < row.
std::pair<std::uint64_t, std::uint64_t> TriangularPair(std::uint64_t t) {
  auto row = static_cast<std::uint64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(t))) / 2.0);
  while (row * (row - 1) / 2 > t) --row;
  while ((row + 1) * row / 2 <= t) ++row;
  return {row, t - row * (row - 1) / 2};
}

}  // namespace

std::size_t SbmSpec::node_count() const {
  return std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
}

SbmGraph GenerateSbm(const SbmSpec& spec) {
  const std::size_t n = spec.node_count();
  if (n == 0) throw ValidationError("SBM has no nodes");
  for (std::size_t s : spec.block_sizes) {
    if (s == 0) throw ValidationError("SBM block sizes must be positive");
  }
  for (double p : {spec.p_in, spec.p_out}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("SBM probabilities must lie in [0, 1]");
    }
  }

  const std::size_t k = spec.block_sizes.size();
  std::vector<std::size_t> start(k + 1, 0);
  for (std::size_t b = 0; b < k; ++b) start[b + 1] = start[b] + spec.block_sizes[b];

  Rng rng(spec.rng_seed);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < k; ++a) {
    const std::uint64_t sa = spec.block_sizes[a];
    const auto base_a = static_cast<NodeId>(start[a]);
    if (spec.directed) {
      ForEachBernoulliIndex(rng, sa * (sa - 1), spec.p_in, [&](std::uint64_t t) {
        std::uint64_t row = t / (sa - 1), col = t % (sa - 1);
        if (col >= row) ++col;
        edges.push_back({base_a + static_cast<NodeId>(row), base_a + static_cast<NodeId>(col)});
      });
    } else {
      ForEachBernoulliIndex(rng, sa * (sa - 1) / 2, spec.p_in, [&](std::uint64_t t) {
        auto [row, col] = TriangularPair(t);
        edges.push_back({base_a + static_cast<NodeId>(col), base_a + static_cast<NodeId>(row)});
      });
    }
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a || (!spec.directed && b < a)) continue;
      const std::uint64_t sb = spec.block_sizes[b];
      const auto base_b = static_cast<NodeId>(start[b]);
      ForEachBernoulliIndex(rng, sa * sb, spec.p_out, [&](std::uint64_t t) {
        edges.push_back({base_a + static_cast<NodeId>(t / sb), base_b + static_cast<NodeId>(t % sb)});
      });
    }
  }

  std::vector<std::string> categories;
  std::vector<std::int32_t> codes(n);
  for (std::size_t b = 0; b < k; ++b) {
    categories.push_back(std::to_string(b));
    for (std::size_t i = start[b]; i < start[b + 1]; ++i) codes[i] = static_cast<std::int32_t>(b);
  }
  return {Graph::FromEdges(n, edges, spec.directed),
          LabeledPartition(std::move(categories), std::move(codes))};
}

LabeledPartition PlantAttributes(const LabeledPartition& blocks, double noise,
                                 const std::vector<std::string>& labels,
                                 std::uint64_t rng_seed) {
  if (!(noise >= 0.0 && noise <= 1.0)) throw ValidationError("noise must lie in [0, 1]");
  if (labels.size() < blocks.categories().size()) {
    throw ValidationError("need at least one attribute label per block");
  }
  if (noise > 0.0 && labels.size() < 2) {
    throw ValidationError("noisy attributes need at least two labels");
  }
  Rng rng(rng_seed);
  std::vector<std::int32_t> codes(blocks.size(), -1);
  for (NodeId i = 0; i < blocks.size(); ++i) {
    if (blocks.is_unknown(i)) continue;
    auto own = static_cast<std::int32_t>(blocks.code(i));
    std::int32_t code = own;
    if (internal::Bernoulli(rng, noise)) {
      auto other = static_cast<std::int32_t>(internal::UniformIndex(rng, labels.size() - 1));
      code = other >= own ? other + 1 : other;
    }
    codes[i] = code;
  }
  return LabeledPartition(labels, std::move(codes));
}

}  // namespace graphsamp
