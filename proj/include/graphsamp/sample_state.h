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

#ifndef GRAPHSAMP_SAMPLE_STATE_H_
#define GRAPHSAMP_SAMPLE_STATE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "graphsamp/graph.h"

namespace graphsamp {

struct LeaderboardEntry {
  NodeId node;
  double score;
  // Offer sequence number of the candidate's first insertion; smaller wins
  // ties.
  std::uint64_t seq;
};

// Bounded best-score buffer of border candidates. Ordered by score
// (descending), then by seq (ascending). When full, a new candidate replaces
// the worst entry only if its score is strictly higher.
class Leaderboard {
 public:
  enum class Outcome { kInserted, kUpdated, kEvictedOther, kRejected };

  explicit Leaderboard(std::size_t capacity);

  // Inserts or refreshes `node`. A refresh replaces the score and keeps the
  // original seq.
  Outcome Offer(NodeId node, double score, std::uint64_t seq);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool contains(NodeId node) const { return where_.contains(node); }

  const LeaderboardEntry& Top() const { return *entries_.begin(); }
  LeaderboardEntry PopTop();
  void Erase(NodeId node);

  // Best first.
  std::vector<LeaderboardEntry> Entries() const;

  // True when `a` ranks strictly ahead of `b`.
  static bool Ahead(const LeaderboardEntry& a, const LeaderboardEntry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.seq < b.seq;
  }

 private:
  struct Order {
    bool operator()(const LeaderboardEntry& a, const LeaderboardEntry& b) const {
      return Ahead(a, b);
    }
  };
  using Set = std::set<LeaderboardEntry, Order>;

  std::size_t capacity_;
  Set entries_;
  std::unordered_map<NodeId, Set::iterator> where_;
};

// Evolving sample of one crawl: membership, the candidate leaderboard and the
// incremental statistics the TCEC and TCPR criteria read.
//
// in_sample_indegree(j) is the weight of edges from members into j.
// delta(s), for a member s, is the out-degree-normalised weight entering s
// from outside the sample: sum over non-members i with i->s of
// A_is / out_strength(i). A node is dangling when its out-strength is zero.
class SampleState {
 public:
  SampleState(const GraphAccess& g, std::size_t leaderboard_capacity);

  const GraphAccess& graph() const { return *graph_; }
  const std::vector<NodeId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(NodeId node) const { return member_[node] != 0; }

  double in_sample_indegree(NodeId j) const { return in_sample_indegree_[j]; }
  double delta(NodeId member) const { return delta_[member]; }
  // Dangling nodes not yet in the sample.
  std::size_t dangling_outside() const { return dangling_outside_; }

  const Leaderboard& leaderboard() const { return leaderboard_; }
  Leaderboard& leaderboard() { return leaderboard_; }

  // Adds `node` to the sample and updates every incremental statistic.
  // The node is removed from the leaderboard if present.
  void Admit(NodeId node);

  // Scratch accumulator for per-candidate sparse sums. Not part of the
  // logical state.
  struct Scratch {
    std::vector<double> value;
    std::vector<NodeId> touched;
  };
  Scratch& scratch() const { return scratch_; }

 private:
  const GraphAccess* graph_;
  std::vector<NodeId> members_;
  std::vector<std::uint8_t> member_;
  std::vector<double> in_sample_indegree_;
  std::vector<double> delta_;
  std::size_t dangling_outside_ = 0;
  Leaderboard leaderboard_;
  mutable Scratch scratch_;
};

}  // namespace graphsamp

#endif  // GRAPHSAMP_SAMPLE_STATE_H_
