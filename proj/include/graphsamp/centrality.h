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

#ifndef GRAPHSAMP_CENTRALITY_H_
#define GRAPHSAMP_CENTRALITY_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphsamp/graph.h"

namespace graphsamp {

enum class CentralityMeasure { kEigenvector, kPageRank, kInDegree, kBetweenness, kSpringRank };

// eigenvector, pagerank, indegree, betweenness, springrank.
std::string_view MeasureName(CentralityMeasure m);
std::optional<CentralityMeasure> ParseMeasure(std::string_view name);

struct CentralityVector {
  std::vector<double> scores;
  std::string method;
  std::size_t iterations = 0;
  double residual = 0.0;
  // False when an iterative method hit its iteration cap.
  bool converged = true;
};

// Exact betweenness is refused above this many nodes; use pivots instead.
inline constexpr std::size_t kExactBetweennessMaxNodes = 10000;

// Leading left eigenvector of A (mu_j proportional to sum_i A_ij mu_i),
// L1-normalised. Power iteration on A^T + I, which shares the eigenvector and
// removes the oscillation of periodic graphs. Stops once successive iterates
// differ by less than `tol` in L1. Throws ValidationError on an edgeless
// graph.
CentralityVector EigenvectorCentrality(const Graph& g, double tol = 1e-12,
                                       std::size_t max_iter = 100000);

// Stationary vector of damping * M + (1 - damping)/n, where M(row i, col j) =
// A_ji / out_strength(j) and dangling columns are uniform. Sums to 1.
CentralityVector PageRank(const Graph& g, double damping = 0.85, double tol = 1e-13,
                          std::size_t max_iter = 100000);

// Weighted in-degree.
CentralityVector InDegreeCentrality(const Graph& g);

// Brandes accumulation over hop-count shortest paths along out-edges,
// endpoints excluded. With `sources` the sum runs over those pivots only and
// is rescaled by n / |sources|. Undirected graphs count each unordered pair
// once.
CentralityVector Betweenness(const Graph& g,
                             std::optional<std::span<const NodeId>> sources = std::nullopt);

// `count` distinct pivot sources drawn uniformly (all nodes if count >= n).
std::vector<NodeId> PivotSources(std::size_t n, std::size_t count, std::uint64_t seed);

// Regularised SpringRank: solves
//   [reg I + D_out + D_in - (A + A^T)] s = d_out - d_in
// by conjugate gradient. `residual` is the L2 norm of the final residual.
CentralityVector SpringRank(const Graph& g, double reg = 1.0, double tol = 1e-14,
                            std::size_t max_iter = 100000);

// Convenience dispatcher with each measure's defaults. Betweenness is exact
// when pivots == 0 (guarded by kExactBetweennessMaxNodes).
struct CentralityParams {
  double damping = 0.85;
  double spring_reg = 1.0;
  double tol = 0.0;  // 0: the measure's default
  std::size_t max_iter = 100000;
  std::size_t pivots = 0;
  std::uint64_t pivot_seed = 0;

  friend bool operator==(const CentralityParams&, const CentralityParams&) = default;
};
CentralityVector ComputeCentrality(const Graph& g, CentralityMeasure m,
                                   const CentralityParams& params = {});

// CSV "node_id,score" with a header row, full double precision. `ids` maps
// dense ids to the ids printed; nullptr prints dense ids.
void WriteCentralityCsv(const CentralityVector& c, const NodeMapping* ids, std::ostream& out);

}  // namespace graphsamp

#endif  // GRAPHSAMP_CENTRALITY_H_
