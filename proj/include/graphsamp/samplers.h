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

#ifndef GRAPHSAMP_SAMPLERS_H_
#define GRAPHSAMP_SAMPLERS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphsamp/errors.h"
#include "graphsamp/graph.h"
#include "graphsamp/sample_state.h"

namespace graphsamp {

enum class SamplerKind { kRandomNode, kRandomWalk, kExpansion, kNode2Vec, kTcec, kTcpr };

// Short names used on the command line and in result files:
// rn, rw, xs, node2vec, tcec, tcpr.
std::string_view SamplerName(SamplerKind kind);
std::optional<SamplerKind> ParseSamplerKind(std::string_view name);

// Walkers restart at a uniformly chosen sampled node with this probability
// per step, and always on a node without out-edges.
inline constexpr double kRestartProbability = 0.15;
// A walk gives up after this many steps per requested node.
inline constexpr std::size_t kStepBudgetPerNode = 1000;

struct SamplerConfig {
  std::size_t target_size = 0;
  // Share of target_size collected by the initial random walk (TCEC/TCPR).
  double rw_init_fraction = 0.2;
  std::size_t leaderboard_capacity = 100;
  // Mixing weight of in-sample in-degree. Unset: 0 on undirected graphs,
  // 0.5 on directed ones.
  std::optional<double> alpha;
  // Chance that each border neighbour of an admitted node is scored.
  double exploration_p = 0.1;
  // PageRank damping used by TCPR.
  double damping = 0.85;
  // Start nodes; empty means one node drawn uniformly from rng_seed.
  std::vector<NodeId> seed_nodes;
  std::uint64_t rng_seed = 0;
  // Recompute the popped candidate's score and requeue it if it no longer
  // leads (at most leaderboard_capacity times per admission).
  bool rescore_on_pop = false;
  // TCPR only: blend the score with in-sample in-degree as
  // (1 - alpha) * score + alpha * in-degree.
  bool tcpr_mix_in_degree = false;
  // node2vec return (p) and in-out (q) parameters.
  double node2vec_p = 2.0;
  double node2vec_q = 0.5;

  double ResolvedAlpha(const GraphAccess& g) const {
    return alpha.value_or(g.directed() ? 0.5 : 0.0);
  }

  friend bool operator==(const SamplerConfig&, const SamplerConfig&) = default;
};

// How a node entered the sample. Pure walkers (rw, node2vec) tag every node
// kRwInit; rn and xs tag every node kCriterion.
enum class Provenance { kRwInit, kCriterion, kFallback };
std::string_view ProvenanceName(Provenance p);

struct SampleCounters {
  std::uint64_t scored_candidates = 0;
  std::uint64_t leaderboard_evictions = 0;
  std::uint64_t fallback_events = 0;
  std::uint64_t walk_steps = 0;
  std::uint64_t restarts = 0;
  std::uint64_t rescored_pops = 0;
  std::uint64_t dangling_rejections = 0;

  friend bool operator==(const SampleCounters&, const SampleCounters&) = default;
};

struct SampleResult {
  SamplerKind sampler = SamplerKind::kRandomNode;
  std::vector<NodeId> nodes;
  std::vector<Provenance> provenance;
  SampleCounters counters;
  // Echo of the configuration with defaults resolved (alpha, seed nodes).
  SamplerConfig config;
};

// The graph ran out of reachable nodes before target_size was met.
class PartialResultError : public Error {
 public:
  PartialResultError(const std::string& what, SampleResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const SampleResult& partial() const { return partial_; }

 private:
  SampleResult partial_;
};

// Invoked after every admission of a criterion-driven crawl (and once after
// the initial walk), once the admitted node's neighbours were offered.
using AdmissionObserver = std::function<void(const SampleState&)>;

// target_size distinct nodes uniformly without replacement.
SampleResult SampleRandomNode(const GraphAccess& g, const SamplerConfig& cfg);

// Uniform random walk over out-edges, collecting new nodes until target_size.
SampleResult SampleRandomWalk(const GraphAccess& g, const SamplerConfig& cfg);

// Greedy expansion: repeatedly adds the border node with the most neighbours
// outside S u N(S) (undirected neighbourhoods), smallest id on ties.
SampleResult SampleExpansion(const GraphAccess& g, const SamplerConfig& cfg);

// Second-order walk with return parameter p and in-out parameter q taken
// from cfg.node2vec_p / node2vec_q.
SampleResult SampleNode2VecWalk(const GraphAccess& g, const SamplerConfig& cfg);

// Transition weights of one node2vec step from `current`, having arrived from
// `previous` (nullopt after a start or restart), aligned with
// g.out_neighbors(current). Unnormalised.
std::vector<double> Node2VecWeights(const GraphAccess& g, NodeId current,
                                    std::optional<NodeId> previous, double p,
                                    double q);

SampleResult SampleTcec(const GraphAccess& g, const SamplerConfig& cfg,
                        const AdmissionObserver& observer = {});

SampleResult SampleTcpr(const GraphAccess& g, const SamplerConfig& cfg,
                        const AdmissionObserver& observer = {});

// Sample size for a fraction of n nodes: round(fraction * n) clamped to
// [1, n].
std::size_t TargetSizeForFraction(double fraction, std::size_t n);

// Dispatches on kind.
SampleResult Sample(SamplerKind kind, const GraphAccess& g, const SamplerConfig& cfg);

}  // namespace graphsamp

#endif  // GRAPHSAMP_SAMPLERS_H_
