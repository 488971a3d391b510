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

#include "graphsamp/sample_state.h"

#include <string>

#include "graphsamp/errors.h"

namespace graphsamp {

Leaderboard::Leaderboard(std::size_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw ValidationError("leaderboard capacity must be positive");
}

Leaderboard::Outcome Leaderboard::Offer(NodeId node, double score, std::uint64_t seq) {
  if (auto it = where_.find(node); it != where_.end()) {
    LeaderboardEntry entry = *it->second;
    entries_.erase(it->second);
    entry.score = score;
    it->second = entries_.insert(entry).first;
    return Outcome::kUpdated;
  }
  LeaderboardEntry entry{node, score, seq};
  Outcome outcome = Outcome::kInserted;
  if (entries_.size() >= capacity_) {
    auto worst = std::prev(entries_.end());
    if (!(score > worst->score)) return Outcome::kRejected;
    where_.erase(worst->node);
    entries_.erase(worst);
    outcome = Outcome::kEvictedOther;
  }
  where_[node] = entries_.insert(entry).first;
  return outcome;
}

LeaderboardEntry Leaderboard::PopTop() {
  LeaderboardEntry top = *entries_.begin();
  where_.erase(top.node);
  entries_.erase(entries_.begin());
  return top;
}

void Leaderboard::Erase(NodeId node) {
  if (auto it = where_.find(node); it != where_.end()) {
    entries_.erase(it->second);
    where_.erase(it);
  }
}

std::vector<LeaderboardEntry> Leaderboard::Entries() const {
  return {entries_.begin(), entries_.end()};
}

SampleState::SampleState(const GraphAccess& g, std::size_t leaderboard_capacity)
    : graph_(&g),
      member_(g.node_count(), 0),
      in_sample_indegree_(g.node_count(), 0.0),
      delta_(g.node_count(), 0.0),
      leaderboard_(leaderboard_capacity) {
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (g.out_strength(i) == 0.0) ++dangling_outside_;
  }
  scratch_.value.assign(g.node_count(), 0.0);
}

void SampleState::Admit(NodeId s) {
  if (member_[s]) throw ValidationError("node " + std::to_string(s) + " already sampled");
  const GraphAccess& g = *graph_;
  member_[s] = 1;
  members_.push_back(s);
  leaderboard_.Erase(s);

  const double s_out = g.out_strength(s);
  if (s_out == 0.0) --dangling_outside_;
  for (const Neighbor& nb : g.out_neighbors(s)) {
    in_sample_indegree_[nb.node] += nb.weight;
    // s leaves the outside set: drop its contribution to members it feeds.
    if (nb.node != s && member_[nb.node] && nb.weight > 0.0) {
      delta_[nb.node] -= nb.weight / s_out;
    }
  }

  double d = 0.0;
  for (const Neighbor& nb : g.in_neighbors(s)) {
    if (member_[nb.node] || nb.weight == 0.0) continue;
    d += nb.weight / g.out_strength(nb.node);
  }
  delta_[s] = d;
}

}  // namespace graphsamp
