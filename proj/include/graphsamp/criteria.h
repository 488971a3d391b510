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

// Goodness criteria that rank a border candidate j against the current
// sample S. A_xy is the weight of edge x->y.

#ifndef GRAPHSAMP_CRITERIA_H_
#define GRAPHSAMP_CRITERIA_H_

#include <optional>

#include "graphsamp/graph.h"
#include "graphsamp/sample_state.h"

namespace graphsamp {

// Pieces of the eigenvector-centrality criterion for candidate j, with
// O = complement of S u {j}:
//   b1_sq  = sum_{s in S} A_js^2                      (edges j -> sample)
//   b3_sq  = sum_{i in O} A_ij^2                      (edges outside -> j)
//   b1u_sq = sum_{i in O} (sum_{s in S} A_js A_is)^2  (paths j -> s <- i)
//   in_sample_indegree = sum_{s in S} A_sj
struct TcecTerms {
  double b1_sq = 0.0;
  double b1u_sq = 0.0;
  double b3_sq = 0.0;
  double in_sample_indegree = 0.0;
};

// Cost O(d_in(j) + sum over out-neighbours s in S of d_in(s)).
TcecTerms ComputeTcecTerms(const GraphAccess& g, const SampleState& state, NodeId j);

// (1 - alpha) * (b1_sq + b1u_sq - b3_sq) + alpha * in_sample_indegree.
// Requires j outside the sample.
double TcecScore(const GraphAccess& g, const SampleState& state, NodeId j,
                 double alpha);

// L1 criterion on the damped PageRank matrix, up to an additive constant that
// does not depend on the candidate. The transition matrix has entry
// (row y, column x) = A_xy / out_strength(x), dangling columns uniform 1/n.
// With gamma the damping, k = |S| and c the candidate:
//   b1  = gamma/d(c) * sum_s A_cs
//   b1u = gamma/d(c) * sum_s A_cs * ((1-gamma)(n-k-2)/n + gamma * r_s)
//   b3  = gamma * sum_{i in O} A_ic / d(i)
// where r_s = delta(s) + (dangling outside S)/n - A_cs/d(c) is the mass
// entering s from outside S u {c}.
struct TcprTerms {
  double b1 = 0.0;
  double b1u = 0.0;
  double b3 = 0.0;

  double score() const { return b1 + b1u - b3; }
};

// nullopt when c is dangling; such candidates are skipped.
std::optional<TcprTerms> ComputeTcprTerms(const GraphAccess& g,
                                          const SampleState& state, NodeId c,
                                          double damping);

std::optional<double> TcprScore(const GraphAccess& g, const SampleState& state,
                                NodeId c, double damping);

}  // namespace graphsamp

#endif  // GRAPHSAMP_CRITERIA_H_
