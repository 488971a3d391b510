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

#include "graphsamp/criteria.h"

#include <string>

#include "graphsamp/errors.h"

namespace graphsamp {

namespace {

void RequireCandidate(const SampleState& state, NodeId j) {
  if (j >= state.graph().node_count() || state.contains(j)) {
    throw ValidationError("candidate " + std::to_string(j) +
                          " is not a non-sampled node");
  }
}

}  // namespace

TcecTerms ComputeTcecTerms(const GraphAccess& g, const SampleState& state, NodeId j) {
  RequireCandidate(state, j);
  TcecTerms t;
  t.in_sample_indegree = state.in_sample_indegree(j);

  for (const Neighbor& nb : g.in_neighbors(j)) {
    if (nb.node != j && !state.contains(nb.node)) t.b3_sq += nb.weight * nb.weight;
  }

  auto& scratch = state.scratch();
  for (const Neighbor& out : g.out_neighbors(j)) {
    const NodeId s = out.node;
    if (!state.contains(s)) continue;
    t.b1_sq += out.weight * out.weight;
    for (const Neighbor& in : g.in_neighbors(s)) {
      const NodeId i = in.node;
      if (i == j || state.contains(i)) continue;
      if (scratch.value[i] == 0.0) scratch.touched.push_back(i);
      scratch.value[i] += out.weight * in.weight;
    }
  }
  for (NodeId i : scratch.touched) {
    t.b1u_sq += scratch.value[i] * scratch.value[i];
    scratch.value[i] = 0.0;
  }
  scratch.touched.clear();
  return t;
}

double TcecScore(const GraphAccess& g, const SampleState& state, NodeId j,
                 double alpha) {
  TcecTerms t = ComputeTcecTerms(g, state, j);
  return (1.0 - alpha) * (t.b1_sq + t.b1u_sq - t.b3_sq) +
         alpha * t.in_sample_indegree;
}

std::optional<TcprTerms> ComputeTcprTerms(const GraphAccess& g,
                                          const SampleState& state, NodeId c,
                                          double damping) {
  RequireCandidate(state, c);
  const double d_c = g.out_strength(c);
  if (d_c == 0.0) return std::nullopt;

  const auto n = static_cast<double>(g.node_count());
  const auto k = static_cast<double>(state.size());
  const double teleport = (1.0 - damping) * (n - k - 2.0) / n;
  const double dangling_mass = static_cast<double>(state.dangling_outside()) / n;

  TcprTerms t;
  double to_sample = 0.0;
  double weighted = 0.0;
  for (const Neighbor& nb : g.out_neighbors(c)) {
    if (!state.contains(nb.node)) continue;
    const double p_sc = nb.weight / d_c;
    const double r = state.delta(nb.node) + dangling_mass - p_sc;
    to_sample += nb.weight;
    weighted += nb.weight * (teleport + damping * r);
  }
  t.b1 = damping * to_sample / d_c;
  t.b1u = damping * weighted / d_c;

  for (const Neighbor& nb : g.in_neighbors(c)) {
    if (nb.node == c || state.contains(nb.node) || nb.weight == 0.0) continue;
    t.b3 += nb.weight / g.out_strength(nb.node);
  }
  t.b3 *= damping;
  return t;
}

std::optional<double> TcprScore(const GraphAccess& g, const SampleState& state,
                                NodeId c, double damping) {
  auto t = ComputeTcprTerms(g, state, c, damping);
  if (!t) return std::nullopt;
  return t->score();
}

}  // namespace graphsamp
