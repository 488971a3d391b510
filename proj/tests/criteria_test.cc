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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "graphsamp/criteria.h"
#include "graphsamp/errors.h"
#include "graphsamp/sample_state.h"
#include "oracles.h"

namespace graphsamp {
namespace {

TEST(LeaderboardTest, CapacityEvictionAndTies) {
  Leaderboard b(2);
  EXPECT_EQ(b.Offer(1, 1.0, 0), Leaderboard::Outcome::kInserted);
  EXPECT_EQ(b.Offer(2, 1.0, 1), Leaderboard::Outcome::kInserted);
  // Equal score, later insertion: ranks last, so it is rejected.
  EXPECT_EQ(b.Offer(3, 1.0, 2), Leaderboard::Outcome::kRejected);
  EXPECT_EQ(b.Offer(4, 2.0, 3), Leaderboard::Outcome::kEvictedOther);
  EXPECT_EQ(b.size(), 2u);
  EXPECT_FALSE(b.contains(2));
  EXPECT_EQ(b.PopTop().node, 4u);
  EXPECT_EQ(b.PopTop().node, 1u);
  EXPECT_TRUE(b.empty());
}

TEST(LeaderboardTest, RefreshKeepsSequence) {
  Leaderboard b(3);
  b.Offer(1, 1.0, 0);
  b.Offer(2, 3.0, 1);
  EXPECT_EQ(b.Offer(2, 1.0, 7), Leaderboard::Outcome::kUpdated);
  // Now tied at 1.0; node 1 was inserted first.
  EXPECT_EQ(b.Top().node, 1u);
  EXPECT_EQ(b.Entries()[1].seq, 1u);
  b.Erase(1);
  EXPECT_EQ(b.Top().node, 2u);
}

TEST(SampleStateTest, IncrementalStatisticsMatchRecomputation) {
  Graph g = oracle::RandomDigraph(60, 0.08, 5, /*weighted=*/true);
  Eigen::MatrixXd a = oracle::Dense(g);
  SampleState state(g, 10);
  std::vector<NodeId> order(60);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::shuffle(order.begin(), order.end(), std::mt19937_64(1));
  std::vector<NodeId> members;
  for (std::size_t step = 0; step < 40; ++step) {
    const NodeId v = order[step];
    state.leaderboard().Offer(v, 1.0, step);
    state.Admit(v);
    members.push_back(v);
    EXPECT_FALSE(state.leaderboard().contains(v));
    std::size_t dangling = 0;
    for (NodeId j = 0; j < 60; ++j) {
      double d_in = 0;
      for (NodeId s : members) d_in += a(s, j);
      EXPECT_NEAR(state.in_sample_indegree(j), d_in, 1e-12);
      if (!state.contains(j) && a.row(j).sum() == 0.0) ++dangling;
    }
    for (NodeId s : members) EXPECT_NEAR(state.delta(s), oracle::Delta(a, members, s), 1e-12);
    EXPECT_EQ(state.dangling_outside(), dangling);
  }
  EXPECT_THROW(state.Admit(order[0]), ValidationError);
}

TEST(TcecScoreTest, HandExample) {
  // S = {0, 1}; edges 2->0, 2->1, 3->2, 3->0; candidate 2.
  std::vector<Edge> e{{2, 0}, {2, 1}, {3, 2}, {3, 0}};
  Graph g = Graph::FromEdges(4, e, true);
  SampleState state(g, 4);
  state.Admit(0);
  state.Admit(1);
  TcecTerms t = ComputeTcecTerms(g, state, 2);
  EXPECT_EQ(t.b1_sq, 2.0);
  EXPECT_EQ(t.b1u_sq, 1.0);
  EXPECT_EQ(t.b3_sq, 1.0);
  EXPECT_EQ(t.in_sample_indegree, 0.0);
  EXPECT_DOUBLE_EQ(TcecScore(g, state, 2, 0.5), 1.0);
}

TEST(TcecScoreTest, IsolatedCandidateScoresZero) {
  std::vector<Edge> e{{0, 1}, {1, 0}};
  Graph g = Graph::FromEdges(3, e, true);
  SampleState state(g, 4);
  state.Admit(0);
  for (double alpha : {0.0, 0.3, 1.0}) EXPECT_EQ(TcecScore(g, state, 2, alpha), 0.0);
}

TEST(TcecScoreTest, MemberCandidateRejected) {
  Graph g = oracle::RandomDigraph(5, 0.5, 1);
  SampleState state(g, 4);
  state.Admit(0);
  EXPECT_THROW(TcecScore(g, state, 0, 0.5), ValidationError);
}

TEST(TcecScoreTest, MatchesDenseOracle) {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = oracle::RandomDigraph(50, 0.1, seed, /*weighted=*/seed % 2 == 0, seed % 3 != 0);
    Eigen::MatrixXd a = oracle::Dense(g);
    SampleState state(g, 4);
    std::vector<NodeId> order(50);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<NodeId> members(order.begin(), order.begin() + 15);
    for (NodeId v : members) state.Admit(v);
    for (NodeId j = 0; j < 50; ++j) {
      if (state.contains(j)) continue;
      for (double alpha : {0.0, 0.5, 1.0}) {
        const double want = oracle::TcecScore(a, members, j, alpha);
        EXPECT_NEAR(TcecScore(g, state, j, alpha), want, 1e-9 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST(TcprScoreTest, DisconnectedCandidateScoresZero) {
  // 0 is the sample; 2 -> 3 touches neither the sample nor has in-edges.
  std::vector<Edge> e{{1, 0}, {2, 3}, {3, 1}};
  Graph g = Graph::FromEdges(4, e, true);
  SampleState state(g, 4);
  state.Admit(0);
  auto t = ComputeTcprTerms(g, state, 2, 0.85);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->score(), 0.0);
}

TEST(TcprScoreTest, DanglingCandidateIsRejected) {
  std::vector<Edge> e{{0, 1}};
  Graph g = Graph::FromEdges(2, e, true);
  SampleState state(g, 4);
  state.Admit(0);
  EXPECT_FALSE(TcprScore(g, state, 1, 0.85).has_value());
}

TEST(TcprScoreTest, ZeroDampingScoresZero) {
  Graph g = oracle::RandomDigraph(30, 0.15, 4, true);
  SampleState state(g, 4);
  for (NodeId v : {3u, 9u, 12u}) state.Admit(v);
  for (NodeId c = 0; c < 30; ++c) {
    if (state.contains(c)) continue;
    auto s = TcprScore(g, state, c, 0.0);
    if (s) EXPECT_EQ(*s, 0.0);
  }
}

// Differences between candidates equal differences of the untruncated L1
// norms on the dense Google matrix, and the rankings agree.
TEST(TcprScoreTest, DifferencesMatchDenseOracle) {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const std::size_t n = 30 + seed * 2;
    Graph g = oracle::RandomDigraph(n, 0.08, 100 + seed, /*weighted=*/seed % 2 == 1);
    Eigen::MatrixXd m = oracle::GoogleMatrix(oracle::Dense(g), 0.85);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<NodeId> members(order.begin(), order.begin() + 8);
    SampleState state(g, 4);
    for (NodeId v : members) state.Admit(v);
    std::vector<std::pair<double, double>> scores;  // (library, oracle)
    for (NodeId c = 0; c < n; ++c) {
      if (state.contains(c)) continue;
      auto s = TcprScore(g, state, c, 0.85);
      if (!s) continue;
      scores.push_back({*s, oracle::TcprL1(m, members, c)});
    }
    ASSERT_GE(scores.size(), 2u);
    for (std::size_t i = 1; i < scores.size(); ++i) {
      EXPECT_NEAR(scores[i].first - scores[0].first, scores[i].second - scores[0].second, 1e-9);
    }
  }
}

}  // namespace
}  // namespace graphsamp
