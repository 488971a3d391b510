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

#include "graphsamp/samplers.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <span>

#include "graphsamp/criteria.h"
#include "random_util.h"

namespace graphsamp {

namespace {

using internal::Rng;

bool HasArc(std::span<const Neighbor> adj, NodeId v) {
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& a, NodeId x) { return a.node < x; });
  return it != adj.end() && it->node == v;
}

// Calls fn(u) once for every u != v with an arc u->v or v->u, ascending.
template <typename Fn>
void ForEachUndirectedNeighbor(const GraphAccess& g, NodeId v, Fn fn) {
  auto out = g.out_neighbors(v);
  auto in = g.in_neighbors(v);
  std::size_t a = 0, b = 0;
  while (a < out.size() || b < in.size()) {
    NodeId next;
    if (b == in.size() || (a < out.size() && out[a].node < in[b].node)) {
      next = out[a++].node;
    } else if (a == out.size() || in[b].node < out[a].node) {
      next = in[b++].node;
    } else {
      next = out[a].node;
      ++a;
      ++b;
    }
    if (next != v) fn(next);
  }
}

void ValidateCommon(const GraphAccess& g, const SamplerConfig& cfg) {
  if (cfg.target_size == 0) throw ValidationError("target sample size must be positive");
  if (cfg.target_size > g.node_count()) {
    throw ValidationError("target sample size " + std::to_string(cfg.target_size) +
                          " exceeds node count " + std::to_string(g.node_count()));
  }
}

void ValidateCrawl(const SamplerConfig& cfg) {
  if (!(cfg.rw_init_fraction > 0.0 && cfg.rw_init_fraction <= 1.0)) {
    throw ValidationError("rw_init_fraction must lie in (0, 1]");
  }
  if (cfg.leaderboard_capacity == 0) throw ValidationError("leaderboard capacity must be positive");
  if (!(cfg.exploration_p >= 0.0 && cfg.exploration_p <= 1.0)) {
    throw ValidationError("exploration_p must lie in [0, 1]");
  }
  if (cfg.alpha && !(*cfg.alpha >= 0.0 && *cfg.alpha <= 1.0)) {
    throw ValidationError("alpha must lie in [0, 1]");
  }
  if (!(cfg.damping >= 0.0 && cfg.damping < 1.0)) {
    throw ValidationError("damping must lie in [0, 1)");
  }
}

// Seeds as given (deduplicated, order kept), or one uniform node.
std::vector<NodeId> ResolveSeeds(const GraphAccess& g, const SamplerConfig& cfg, Rng& rng) {
  std::vector<NodeId> seeds;
  if (cfg.seed_nodes.empty()) {
    seeds.push_back(static_cast<NodeId>(internal::UniformIndex(rng, g.node_count())));
    return seeds;
  }
  std::set<NodeId> seen;
  for (NodeId s : cfg.seed_nodes) {
    if (s >= g.node_count()) throw ValidationError("seed node " + std::to_string(s) + " out of range");
    if (seen.insert(s).second) seeds.push_back(s);
  }
  return seeds;
}

// Walker shared by rw, node2vec and the crawl fallbacks.
class Walker {
 public:
  Walker(const GraphAccess& g, Rng& rng, NodeId start, bool second_order,
         double p, double q)
      : g_(g), rng_(rng), current_(start), second_order_(second_order), p_(p), q_(q) {}

  void Reset(NodeId at) {
    current_ = at;
    previous_.reset();
  }

  // One step; restarts land on a uniformly chosen member.
  NodeId Step(std::span<const NodeId> members, SampleCounters& counters) {
    ++counters.walk_steps;
    auto out = g_.out_neighbors(current_);
    if (out.empty() || internal::Bernoulli(rng_, kRestartProbability)) {
      ++counters.restarts;
      Reset(members[internal::UniformIndex(rng_, members.size())]);
      return current_;
    }
    NodeId next;
    if (!second_order_) {
      next = out[internal::UniformIndex(rng_, out.size())].node;
    } else {
      std::vector<double> w = Node2VecWeights(g_, current_, previous_, p_, q_);
      std::partial_sum(w.begin(), w.end(), w.begin());
      double u = internal::Uniform01(rng_) * w.back();
      auto idx = static_cast<std::size_t>(
          std::upper_bound(w.begin(), w.end(), u) - w.begin());
      next = out[std::min(idx, out.size() - 1)].node;
    }
    previous_ = current_;
    current_ = next;
    return current_;
  }

 private:
  const GraphAccess& g_;
  Rng& rng_;
  NodeId current_;
  std::optional<NodeId> previous_;
  bool second_order_;
  double p_;
  double q_;
};

// Membership bookkeeping for samplers that need no criterion state.
class PlainSample {
 public:
  explicit PlainSample(std::size_t n) : member_(n, 0) {}

  bool contains(NodeId v) const { return member_[v] != 0; }
  std::size_t size() const { return nodes_.size(); }
  std::span<const NodeId> nodes() const { return nodes_; }

  void Admit(NodeId v, Provenance how, SampleResult& result) {
    member_[v] = 1;
    nodes_.push_back(v);
    result.nodes.push_back(v);
    result.provenance.push_back(how);
  }

 private:
  std::vector<std::uint8_t> member_;
  std::vector<NodeId> nodes_;
};

SampleResult RunWalk(SamplerKind kind, const GraphAccess& g, const SamplerConfig& cfg) {
  ValidateCommon(g, cfg);
  const bool second_order = kind == SamplerKind::kNode2Vec;
  if (second_order && !(cfg.node2vec_p > 0.0 && cfg.node2vec_q > 0.0)) {
    throw ValidationError("node2vec p and q must be positive");
  }
  Rng rng(cfg.rng_seed);
  SampleResult result;
  result.sampler = kind;
  result.config = cfg;
  result.config.seed_nodes = ResolveSeeds(g, cfg, rng);

  PlainSample sample(g.node_count());
  for (NodeId s : result.config.seed_nodes) {
    if (sample.size() < cfg.target_size) sample.Admit(s, Provenance::kRwInit, result);
  }
  Walker walker(g, rng, result.config.seed_nodes.front(), second_order,
                cfg.node2vec_p, cfg.node2vec_q);
  const std::size_t budget = kStepBudgetPerNode * cfg.target_size;
  while (sample.size() < cfg.target_size) {
    if (result.counters.walk_steps >= budget) {
      throw PartialResultError(
          std::string(SamplerName(kind)) + ": step budget exhausted after " +
              std::to_string(sample.size()) + " of " +
              std::to_string(cfg.target_size) + " nodes",
          std::move(result));
    }
    NodeId v = walker.Step(sample.nodes(), result.counters);
    if (!sample.contains(v)) sample.Admit(v, Provenance::kRwInit, result);
  }
  return result;
}

// Criterion-driven crawl shared by TCEC and TCPR.
class CriterionCrawl {
 public:
  CriterionCrawl(SamplerKind kind, const GraphAccess& g, const SamplerConfig& cfg,
                 const AdmissionObserver& observer)
      : kind_(kind),
        g_(g),
        cfg_(cfg),
        observer_(observer),
        rng_(cfg.rng_seed),
        state_(g, cfg.leaderboard_capacity == 0 ? 1 : cfg.leaderboard_capacity),
        walker_(g, rng_, 0, /*second_order=*/false, 1.0, 1.0) {}

  SampleResult Run() {
    ValidateCommon(g_, cfg_);
    ValidateCrawl(cfg_);
    result_.sampler = kind_;
    result_.config = cfg_;
    result_.config.alpha = cfg_.ResolvedAlpha(g_);
    alpha_ = *result_.config.alpha;
    result_.config.seed_nodes = ResolveSeeds(g_, cfg_, rng_);

    const std::size_t m = cfg_.target_size;
    const auto init_target = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::ceil(cfg_.rw_init_fraction * static_cast<double>(m) - 1e-9)),
        1, m);

    for (NodeId s : result_.config.seed_nodes) {
      if (state_.size() < init_target) Admit(s, Provenance::kRwInit);
    }
    walker_.Reset(result_.config.seed_nodes.front());
    std::uint64_t init_steps = 0;
    const std::uint64_t init_budget = kStepBudgetPerNode * init_target;
    while (state_.size() < init_target && init_steps < init_budget) {
      ++init_steps;
      NodeId v = walker_.Step(state_.members(), result_.counters);
      if (!state_.contains(v)) Admit(v, Provenance::kRwInit);
    }
    for (std::size_t i = 0; i < state_.size(); ++i) Explore(state_.members()[i]);
    Notify();

    std::uint64_t fallback_steps = 0;
    const std::uint64_t fallback_budget = kStepBudgetPerNode * m;
    while (state_.size() < m) {
      NodeId next;
      Provenance how = Provenance::kCriterion;
      if (!state_.leaderboard().empty()) {
        next = PopBest();
      } else {
        how = Provenance::kFallback;
        ++result_.counters.fallback_events;
        walker_.Reset(state_.members().back());
        while (true) {
          if (fallback_steps >= fallback_budget) {
            throw PartialResultError(
                std::string(SamplerName(kind_)) + ": graph exhausted after " +
                    std::to_string(state_.size()) + " of " + std::to_string(m) + " nodes",
                std::move(result_));
          }
          ++fallback_steps;
          NodeId v = walker_.Step(state_.members(), result_.counters);
          if (!state_.contains(v)) {
            next = v;
            break;
          }
        }
      }
      Admit(next, how);
      Explore(next);
      Notify();
    }
    return std::move(result_);
  }

 private:
  void Admit(NodeId v, Provenance how) {
    state_.Admit(v);
    result_.nodes.push_back(v);
    result_.provenance.push_back(how);
  }

  void Notify() {
    if (observer_) observer_(state_);
  }

  std::optional<double> Score(NodeId c) const {
    if (kind_ == SamplerKind::kTcec) return TcecScore(g_, state_, c, alpha_);
    auto s = TcprScore(g_, state_, c, cfg_.damping);
    if (s && cfg_.tcpr_mix_in_degree) {
      return (1.0 - alpha_) * *s + alpha_ * state_.in_sample_indegree(c);
    }
    return s;
  }

  void Offer(NodeId c) {
    if (!internal::Bernoulli(rng_, cfg_.exploration_p)) return;
    std::optional<double> score = Score(c);
    if (!score) {
      ++result_.counters.dangling_rejections;
      return;
    }
    ++result_.counters.scored_candidates;
    if (state_.leaderboard().Offer(c, *score, next_seq_++) ==
        Leaderboard::Outcome::kEvictedOther) {
      ++result_.counters.leaderboard_evictions;
    }
  }

  // Scores and offers the border neighbours of a newly admitted node: both
  // directions for TCEC, in-neighbours only for TCPR.
  void Explore(NodeId s) {
    if (kind_ == SamplerKind::kTcec) {
      ForEachUndirectedNeighbor(g_, s, [&](NodeId c) {
        if (!state_.contains(c)) Offer(c);
      });
      return;
    }
    for (const Neighbor& nb : g_.in_neighbors(s)) {
      const NodeId c = nb.node;
      if (c == s || state_.contains(c)) continue;
      if (g_.out_strength(c) == 0.0) {
        ++result_.counters.dangling_rejections;
        continue;
      }
      Offer(c);
    }
  }

  NodeId PopBest() {
    Leaderboard& board = state_.leaderboard();
    if (!cfg_.rescore_on_pop) return board.PopTop().node;
    for (std::size_t attempt = 0; attempt < cfg_.leaderboard_capacity; ++attempt) {
      LeaderboardEntry e = board.PopTop();
      ++result_.counters.rescored_pops;
      // Offered candidates are never dangling, so a fresh score exists.
      e.score = Score(e.node).value_or(e.score);
      if (board.empty() || Leaderboard::Ahead(e, board.Top())) return e.node;
      board.Offer(e.node, e.score, e.seq);
    }
    return board.PopTop().node;
  }

  SamplerKind kind_;
  const GraphAccess& g_;
  const SamplerConfig& cfg_;
  const AdmissionObserver& observer_;
  Rng rng_;
  SampleState state_;
  Walker walker_;
  SampleResult result_;
  double alpha_ = 0.0;
  std::uint64_t next_seq_ = 0;
};

}  // namespace

std::string_view SamplerName(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::kRandomNode: return "rn";
    case SamplerKind::kRandomWalk: return "rw";
    case SamplerKind::kExpansion: return "xs";
    case SamplerKind::kNode2Vec: return "node2vec";
    case SamplerKind::kTcec: return "tcec";
    case SamplerKind::kTcpr: return "tcpr";
  }
  return "?";
}

std::optional<SamplerKind> ParseSamplerKind(std::string_view name) {
  for (SamplerKind k : {SamplerKind::kRandomNode, SamplerKind::kRandomWalk,
                        SamplerKind::kExpansion, SamplerKind::kNode2Vec,
                        SamplerKind::kTcec, SamplerKind::kTcpr}) {
    if (SamplerName(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kRwInit: return "rw-init";
    case Provenance::kCriterion: return "criterion";
    case Provenance::kFallback: return "fallback";
  }
  return "?";
}

std::vector<double> Node2VecWeights(const GraphAccess& g, NodeId current,
                                    std::optional<NodeId> previous, double p,
                                    double q) {
  auto out = g.out_neighbors(current);
  std::vector<double> w;
  w.reserve(out.size());
  for (const Neighbor& nb : out) {
    double bias = 1.0;
    if (previous) {
      if (nb.node == *previous) {
        bias = 1.0 / p;
      } else if (!HasArc(g.out_neighbors(*previous), nb.node) &&
                 !HasArc(g.in_neighbors(*previous), nb.node)) {
        bias = 1.0 / q;
      }
    }
    w.push_back(nb.weight * bias);
  }
  return w;
}

SampleResult SampleRandomNode(const GraphAccess& g, const SamplerConfig& cfg) {
  ValidateCommon(g, cfg);
  Rng rng(cfg.rng_seed);
  std::vector<NodeId> pool(g.node_count());
  std::iota(pool.begin(), pool.end(), NodeId{0});
  SampleResult result;
  result.sampler = SamplerKind::kRandomNode;
  result.config = cfg;
  for (std::size_t i = 0; i < cfg.target_size; ++i) {
    std::size_t j = i + internal::UniformIndex(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    result.nodes.push_back(pool[i]);
    result.provenance.push_back(Provenance::kCriterion);
  }
  return result;
}

SampleResult SampleRandomWalk(const GraphAccess& g, const SamplerConfig& cfg) {
  return RunWalk(SamplerKind::kRandomWalk, g, cfg);
}

SampleResult SampleNode2VecWalk(const GraphAccess& g, const SamplerConfig& cfg) {
  return RunWalk(SamplerKind::kNode2Vec, g, cfg);
}

SampleResult SampleExpansion(const GraphAccess& g, const SamplerConfig& cfg) {
  ValidateCommon(g, cfg);
  Rng rng(cfg.rng_seed);
  SampleResult result;
  result.sampler = SamplerKind::kExpansion;
  result.config = cfg;
  result.config.seed_nodes = ResolveSeeds(g, cfg, rng);

  const std::size_t n = g.node_count();
  // gain[v] = neighbours of v not yet in S u N(S).
  std::vector<std::uint32_t> gain(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    ForEachUndirectedNeighbor(g, v, [&](NodeId) { ++gain[v]; });
  }
  std::vector<std::uint8_t> covered(n, 0), in_border(n, 0);
  PlainSample sample(n);
  // Ordered by gain descending, then id ascending.
  std::set<std::pair<std::int64_t, NodeId>> border;

  auto set_gain = [&](NodeId v, std::uint32_t value) {
    if (in_border[v]) border.erase({-static_cast<std::int64_t>(gain[v]), v});
    gain[v] = value;
    if (in_border[v]) border.insert({-static_cast<std::int64_t>(gain[v]), v});
  };
  auto cover = [&](NodeId w) {
    if (covered[w]) return;
    covered[w] = 1;
    ForEachUndirectedNeighbor(g, w, [&](NodeId v) { set_gain(v, gain[v] - 1); });
  };
  auto admit = [&](NodeId u, Provenance how) {
    if (in_border[u]) {
      border.erase({-static_cast<std::int64_t>(gain[u]), u});
      in_border[u] = 0;
    }
    sample.Admit(u, how, result);
    cover(u);
    ForEachUndirectedNeighbor(g, u, [&](NodeId w) { cover(w); });
    ForEachUndirectedNeighbor(g, u, [&](NodeId w) {
      if (!sample.contains(w) && !in_border[w]) {
        in_border[w] = 1;
        border.insert({-static_cast<std::int64_t>(gain[w]), w});
      }
    });
  };

  for (NodeId s : result.config.seed_nodes) {
    if (sample.size() < cfg.target_size) admit(s, Provenance::kCriterion);
  }
  while (sample.size() < cfg.target_size) {
    if (border.empty()) {
      throw PartialResultError("xs: border exhausted after " +
                                   std::to_string(sample.size()) + " of " +
                                   std::to_string(cfg.target_size) + " nodes",
                               std::move(result));
    }
    admit(border.begin()->second, Provenance::kCriterion);
  }
  return result;
}

SampleResult SampleTcec(const GraphAccess& g, const SamplerConfig& cfg,
                        const AdmissionObserver& observer) {
  return CriterionCrawl(SamplerKind::kTcec, g, cfg, observer).Run();
}

SampleResult SampleTcpr(const GraphAccess& g, const SamplerConfig& cfg,
                        const AdmissionObserver& observer) {
  return CriterionCrawl(SamplerKind::kTcpr, g, cfg, observer).Run();
}

std::size_t TargetSizeForFraction(double fraction, std::size_t n) {
  if (n == 0) return 0;
  auto m = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  return std::clamp<std::size_t>(m, 1, n);
}

SampleResult Sample(SamplerKind kind, const GraphAccess& g, const SamplerConfig& cfg) {
  switch (kind) {
    case SamplerKind::kRandomNode: return SampleRandomNode(g, cfg);
    case SamplerKind::kRandomWalk: return SampleRandomWalk(g, cfg);
    case SamplerKind::kExpansion: return SampleExpansion(g, cfg);
    case SamplerKind::kNode2Vec: return SampleNode2VecWalk(g, cfg);
    case SamplerKind::kTcec: return SampleTcec(g, cfg);
    case SamplerKind::kTcpr: return SampleTcpr(g, cfg);
  }
  throw ValidationError("unknown sampler");
}

}  // namespace graphsamp
