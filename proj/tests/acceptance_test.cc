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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphsamp/centrality.h"
#include "graphsamp/criteria.h"
#include "graphsamp/experiment.h"
#include "graphsamp/metrics.h"
#include "graphsamp/samplers.h"
#include "oracles.h"

namespace graphsamp {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

bool WeaklyConnected(const Graph& g) {
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (auto list : {g.out_neighbors(v), g.in_neighbors(v)}) {
      for (const Neighbor& nb : list) {
        if (!seen[nb.node]) {
          seen[nb.node] = 1;
          ++count;
          stack.push_back(nb.node);
        }
      }
    }
  }
  return count == g.node_count();
}

// 1. Every leaderboard candidate's score equals the dense evaluation at
// every step of full TCEC runs.
Outcome TcecOracle() {
  const auto start = Clock::now();
  double worst = 0.0;
  std::size_t checks = 0, complete = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = oracle::RandomDigraph(100, 0.05, 1000 + seed);
    Eigen::MatrixXd a = oracle::Dense(g);
    SamplerConfig cfg;
    cfg.target_size = 100;
    cfg.rng_seed = seed;
    const double alpha = cfg.ResolvedAlpha(g);
    try {
      SampleTcec(g, cfg, [&](const SampleState& state) {
        for (const auto& e : state.leaderboard().Entries()) {
          const double want = oracle::TcecScore(a, state.members(), e.node, alpha);
          const double got = TcecScore(g, state, e.node, alpha);
          worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
          ++checks;
        }
      });
      ++complete;
    } catch (const PartialResultError&) {
    }
  }
  const double secs = Seconds(start);
  return {worst <= 1e-9 && secs < 60.0 && checks > 0,
          Fmt("%zu candidate checks, max rel err %.3g, %zu/50 runs reached m=n, %.1fs", checks,
              worst, complete, secs)};
}

// 2. Exact-argmax mode admits the same sequence as an exhaustive border scan.
Outcome ExactArgmax() {
  std::size_t runs = 0, matched = 0;
  std::string first_mismatch;
  for (std::uint64_t seed = 0; runs < 10; ++seed) {
    const std::size_t n = 120 + 8 * runs;
    Graph g = oracle::RandomDigraph(n, 0.03, 2000 + seed, /*weighted=*/true);
    if (!WeaklyConnected(g)) continue;
    ++runs;
    Eigen::MatrixXd a = oracle::Dense(g);
    SamplerConfig cfg;
    cfg.target_size = n;
    cfg.exploration_p = 1.0;
    cfg.leaderboard_capacity = n;
    cfg.rescore_on_pop = true;
    cfg.rng_seed = seed;
    const double alpha = cfg.ResolvedAlpha(g);
    SampleResult r = SampleTcec(g, cfg);

    std::vector<NodeId> sample;
    std::vector<char> in(n, 0);
    std::size_t i = 0;
    for (; i < r.nodes.size() && r.provenance[i] == Provenance::kRwInit; ++i) {
      sample.push_back(r.nodes[i]);
      in[r.nodes[i]] = 1;
    }
    bool same = true;
    for (; i < n; ++i) {
      std::optional<NodeId> best;
      double best_score = 0.0;
      for (NodeId j = 0; j < n; ++j) {
        if (in[j]) continue;
        bool border = false;
        for (NodeId s : sample) border = border || a(s, j) != 0.0 || a(j, s) != 0.0;
        if (!border) continue;
        const double score = oracle::TcecScore(a, sample, j, alpha);
        if (!best || score > best_score) {
          best = j;
          best_score = score;
        }
      }
      if (!best || r.nodes[i] != *best || r.provenance[i] != Provenance::kCriterion) {
        same = false;
        if (first_mismatch.empty()) {
          first_mismatch = Fmt(" (first mismatch: run %zu step %zu)", runs, i);
        }
        break;
      }
      sample.push_back(*best);
      in[*best] = 1;
    }
    matched += same;
  }
  return {matched == runs, Fmt("%zu/%zu runs identical", matched, runs) + first_mismatch};
}

// 3. TCPR score differences equal dense L1 differences; rankings agree.
Outcome TcprConstantDrop() {
  double worst = 0.0;
  std::size_t states = 0, pairs = 0, rank_flips = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 30 + seed;
    Graph g = oracle::RandomDigraph(n, 0.08, 3000 + seed, /*weighted=*/true);
    Eigen::MatrixXd m = oracle::GoogleMatrix(oracle::Dense(g), 0.85);
    SamplerConfig cfg;
    cfg.target_size = n;
    cfg.rng_seed = seed;
    auto check = [&](const SampleState& state) {
      std::vector<std::pair<double, double>> s;
      for (NodeId c = 0; c < n; ++c) {
        if (state.contains(c)) continue;
        auto score = TcprScore(g, state, c, 0.85);
        if (score) s.push_back({*score, oracle::TcprL1(m, state.members(), c)});
      }
      ++states;
      for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = x + 1; y < s.size(); ++y) {
          const double lib = s[x].first - s[y].first;
          const double ref = s[x].second - s[y].second;
          worst = std::max(worst, std::abs(lib - ref));
          if (std::abs(ref) > 1e-9 && (lib > 0) != (ref > 0)) ++rank_flips;
          ++pairs;
        }
      }
    };
    try {
      SampleTcpr(g, cfg, check);
    } catch (const PartialResultError&) {
    }
  }
  return {worst <= 1e-9 && rank_flips == 0 && pairs > 0,
          Fmt("%zu states, %zu pairs, max diff err %.3g, %zu ranking flips", states, pairs, worst,
              rank_flips)};
}

// 4. Stored delta values equal recomputation after every admission.
Outcome DeltaBookkeeping() {
  double worst = 0.0;
  std::size_t admissions = 0, dangling = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = oracle::RandomDigraph(100, 0.03, 4000 + seed, /*weighted=*/seed % 2 == 0);
    Eigen::MatrixXd a = oracle::Dense(g);
    for (NodeId v = 0; v < 100; ++v) dangling += g.out_degree(v) == 0;
    SamplerConfig cfg;
    cfg.target_size = 100;
    cfg.rng_seed = seed;
    try {
      SampleTcpr(g, cfg, [&](const SampleState& state) {
        for (NodeId s : state.members()) {
          worst = std::max(worst, std::abs(state.delta(s) - oracle::Delta(a, state.members(), s)));
        }
        ++admissions;
      });
    } catch (const PartialResultError&) {
    }
  }
  return {worst <= 1e-12 && admissions > 0,
          Fmt("%zu admission states over 5 runs (%zu dangling nodes), max err %.3g", admissions,
              dangling, worst)};
}

double L1(const std::vector<double>& x, const Eigen::VectorXd& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y(static_cast<Eigen::Index>(i)));
  return s;
}

// 5. PageRank and eigenvector centrality against dense solves.
Outcome PageRankAndEigenvector() {
  double pr_err = 0.0, pr_sum = 0.0, ev_err = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = oracle::RandomDigraph(10 + 2 * seed, 0.1, 5000 + seed, true);
    auto pr = PageRank(g, 0.85);
    pr_err = std::max(pr_err, L1(pr.scores, oracle::PageRank(oracle::Dense(g), 0.85)));
    pr_sum = std::max(pr_sum, std::abs(std::accumulate(pr.scores.begin(), pr.scores.end(), 0.0) - 1));
    Graph s = oracle::RandomStrongDigraph(10 + 2 * seed, 0.1, 5100 + seed);
    ev_err = std::max(ev_err, L1(EigenvectorCentrality(s).scores, oracle::Eigenvector(oracle::Dense(s))));
  }
  std::vector<Edge> e{{0, 1}};
  auto two = PageRank(Graph::FromEdges(2, e, true), 0.85);
  const bool two_ok = std::abs(two.scores[0] - 0.350877) <= 1e-6 &&
                      std::abs(two.scores[1] - 0.649123) <= 1e-6;
  bool cycle_ok = true;
  for (std::size_t n : {5u, 12u, 50u}) {
    std::vector<Edge> c;
    for (NodeId i = 0; i < n; ++i) c.push_back({i, static_cast<NodeId>((i + 1) % n)});
    for (double v : EigenvectorCentrality(Graph::FromEdges(n, c, true)).scores) {
      cycle_ok = cycle_ok && v == 1.0 / static_cast<double>(n);
    }
  }
  return {pr_err <= 1e-8 && pr_sum <= 1e-12 && two_ok && ev_err <= 1e-8 && cycle_ok,
          Fmt("pagerank L1 %.3g, sum err %.3g, 2-node (%.6f, %.6f); eigenvector L1 %.3g; "
              "cycle uniform %s",
              pr_err, pr_sum, two.scores[0], two.scores[1], ev_err, cycle_ok ? "yes" : "no")};
}

// 6. Betweenness against path enumeration; Kendall tau against pairs.
Outcome BetweennessAndKendall() {
  double bc_err = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = oracle::RandomDigraph(20 + seed, 0.1, 6000 + seed);
    auto got = Betweenness(g).scores;
    auto want = oracle::Betweenness(g);
    for (std::size_t i = 0; i < want.size(); ++i) bc_err = std::max(bc_err, std::abs(got[i] - want[i]));
  }
  double tau_err = 0.0;
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 499;
    std::uniform_int_distribution<int> pick(0, 2 + static_cast<int>(rng() % 30));
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = pick(rng);
      y[i] = pick(rng);
    }
    x[0] = -1;
    y[1 % n] = -1;
    tau_err = std::max(tau_err, std::abs(KendallTau(x, y) - oracle::KendallTau(x, y)));
  }
  return {bc_err <= 1e-9 && tau_err <= 1e-12,
          Fmt("betweenness max abs err %.3g over 20 graphs; kendall max err %.3g over 100 pairs",
              bc_err, tau_err)};
}

// 7. SpringRank residual and closed-form cases.
Outcome SpringRankChecks() {
  double worst_residual = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = oracle::RandomDigraph(50, 0.06, 7000 + seed, true);
    Eigen::MatrixXd a = oracle::Dense(g);
    Eigen::VectorXd dout = a.rowwise().sum(), din = a.colwise().sum().transpose();
    Eigen::MatrixXd l = Eigen::MatrixXd::Identity(50, 50);
    l.diagonal() += dout + din;
    l -= a + a.transpose();
    auto s = SpringRank(g, 1.0).scores;
    Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(s.data(), 50);
    worst_residual = std::max(worst_residual, (l * x - (dout - din)).norm());
  }
  std::vector<Edge> e{{0, 1}};
  auto two = SpringRank(Graph::FromEdges(2, e, true), 2.0).scores;
  const bool two_ok = std::abs(two[0] - 0.25) <= 1e-9 && std::abs(two[1] + 0.25) <= 1e-9;
  double sym = 0.0;
  for (double v : SpringRank(oracle::RandomDigraph(40, 0.1, 8, true, false)).scores) {
    sym = std::max(sym, std::abs(v));
  }
  return {worst_residual < 1e-8 && two_ok && sym <= 1e-9,
          Fmt("max residual %.3g; 2-node (%.10f, %.10f); symmetric max |s| %.3g", worst_residual,
              two[0], two[1], sym)};
}

std::map<std::string, double> MeanBySampler(const RunResult& r, const std::string& measure) {
  std::map<std::string, std::pair<double, int>> acc;
  for (const RunRow& row : r.rows) {
    if (row.measure != measure || !row.value) continue;
    acc[row.sampler].first += *row.value;
    acc[row.sampler].second += 1;
  }
  std::map<std::string, double> out;
  for (const auto& [k, v] : acc) out[k] = v.first / v.second;
  return out;
}

std::string CommunitySpec(double p_in, double p_out) {
  return Fmt(R"({
    "name": "community", "kind": "community",
    "input": {"sbm": {"block_sizes": [300, 300, 400], "p_in": %g, "p_out": %g, "rng_seed": 1}},
    "samplers": ["rw", "tcec", "xs"],
    "fractions": [0.1], "repetitions": 10, "base_seed": 8, "start": "smallest_block"
  })",
             p_in, p_out);
}

// 8. Scaled community reproduction.
Outcome CommunityTrend() {
  const auto start = Clock::now();
  RunResult assort = RunExperiment(ParseExperimentSpec(CommunitySpec(0.05, 0.005)));
  RunResult disassort = RunExperiment(ParseExperimentSpec(CommunitySpec(0.005, 0.05)));
  auto kl_i = MeanBySampler(assort, "kl");
  auto kl_iii = MeanBySampler(disassort, "kl");
  auto confined = MeanBySampler(assort, "seed_block_fraction");
  const double ratio_i = kl_i["tcec"] / kl_i["rw"];
  const double ratio_iii = kl_iii["tcec"] / kl_iii["rw"];
  const double secs = Seconds(start);
  return {kl_i["tcec"] > kl_i["rw"] && confined["xs"] >= 0.95 && ratio_iii < ratio_i &&
              secs < 300.0,
          Fmt("assortative KL tcec %.4f vs rw %.4f; xs seed-block share %.3f; "
              "KL ratio tcec/rw %.3f (assortative) vs %.3f (disassortative); %.1fs",
              kl_i["tcec"], kl_i["rw"], confined["xs"], ratio_i, ratio_iii, secs)};
}

// 9. Scaled attribute reproduction.
Outcome AttributeTrend() {
  RunResult r = RunExperiment(ParseExperimentSpec(R"({
    "name": "attr", "kind": "attribute",
    "input": {"sbm": {"block_sizes": [600, 600, 800], "p_in": 0.05, "p_out": 0.005, "rng_seed": 2},
              "attributes": {"noise": 0.1, "labels": ["r0", "r1", "r2"], "rng_seed": 3}},
    "samplers": ["rw", "tcec", {"sampler": "node2vec", "config": {"node2vec_p": 2, "node2vec_q": 0.5}}],
    "fractions": [0.1], "repetitions": 10, "base_seed": 9,
    "seed_regions": ["r0", "r1", "r2"]
  })"));
  auto ratio = MeanBySampler(r, "entropy_ratio");
  std::map<std::string, std::map<std::string, std::pair<double, int>>> kl;
  for (const RunRow& row : r.rows) {
    if (row.measure != "kl" || !row.value) continue;
    auto& cell = kl[row.dataset][row.sampler];
    cell.first += *row.value;
    cell.second += 1;
  }
  int ordered = 0;
  std::string per_region;
  for (auto& [region, by_sampler] : kl) {
    auto mean = [&](const char* s) { return by_sampler[s].first / by_sampler[s].second; };
    const bool ok = mean("rw") <= mean("tcec") && mean("tcec") <= mean("node2vec");
    ordered += ok;
    per_region += Fmt(" %s[rw %.4f tcec %.4f n2v %.4f]", region.c_str(), mean("rw"), mean("tcec"),
                      mean("node2vec"));
  }
  const bool ratio_ok = ratio["node2vec"] > ratio["rw"] && ratio["node2vec"] > ratio["tcec"];
  return {ratio_ok && ordered >= 2,
          Fmt("entropy ratio n2v %.3f rw %.3f tcec %.3f; KL order held in %d/3 regions;",
              ratio["node2vec"], ratio["rw"], ratio["tcec"], ordered) +
              per_region};
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 10. Re-running the resolved config reproduces the CSV byte for byte.
Outcome Determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "graphsamp_acceptance_determinism";
  fs::remove_all(root);
  const std::vector<std::string> specs = {
      CommunitySpec(0.05, 0.005),
      R"({"name": "cent", "kind": "centrality",
          "input": {"sbm": {"block_sizes": [100, 100], "p_in": 0.08, "p_out": 0.01, "directed": true}},
          "samplers": ["rn", "rw", "tcec", "tcpr", "node2vec", "xs"], "fractions": [0.1, 0.3],
          "measures": ["eigenvector", "pagerank", "indegree", "betweenness", "springrank"],
          "repetitions": 3, "seeds": [5, 6, 7]})"};
  std::size_t identical = 0;
  for (const auto& text : specs) {
    ExperimentSpec spec = ParseExperimentSpec(text);
    RunResult first = RunExperiment(spec);
    WriteRunOutputs(first, root / "a");
    ExperimentSpec again = ParseExperimentSpec(ResolvedSpecJson(first.spec));
    again.threads = 3;
    WriteRunOutputs(RunExperiment(again), root / "b");
    for (const char* suffix : {".raw.csv", ".summary.csv"}) {
      const std::string name = spec.name + suffix;
      identical += Slurp(root / "a" / name) == Slurp(root / "b" / name) &&
                   !Slurp(root / "a" / name).empty();
    }
  }
  fs::remove_all(root);
  return {identical == 2 * specs.size(),
          Fmt("%zu/%zu CSV files byte-identical across re-runs", identical, 2 * specs.size())};
}

// 11. TCEC on a 1e5-node, 1e6-edge graph at a 10% sample.
Outcome Performance() {
  const std::size_t n = 100000, m = 1000000;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    NodeId a = pick(rng), b = pick(rng);
    if (a != b && seen.insert({a, b}).second) edges.push_back({a, b, 1.0});
  }
  Graph g = Graph::FromEdges(n, edges, true);
  SamplerConfig cfg;
  cfg.target_size = TargetSizeForFraction(0.1, n);
  cfg.rng_seed = 1;
  const auto start = Clock::now();
  SampleResult r = SampleTcec(g, cfg);
  const double secs = Seconds(start);
  return {r.nodes.size() == cfg.target_size && secs < 60.0,
          Fmt("%zu nodes sampled in %.2fs (%llu candidates scored)", r.nodes.size(), secs,
              static_cast<unsigned long long>(r.counters.scored_candidates))};
}

}  // namespace
}  // namespace graphsamp

int main() {
  using graphsamp::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"TCEC criterion equals dense oracle", graphsamp::TcecOracle},
      {"TCEC exact-argmax mode equals exhaustive scan", graphsamp::ExactArgmax},
      {"TCPR score differences equal dense L1 differences", graphsamp::TcprConstantDrop},
      {"TCPR delta bookkeeping", graphsamp::DeltaBookkeeping},
      {"PageRank and eigenvector centrality", graphsamp::PageRankAndEigenvector},
      {"Betweenness and Kendall tau-b oracles", graphsamp::BetweennessAndKendall},
      {"SpringRank linear system", graphsamp::SpringRankChecks},
      {"Scaled community trend", graphsamp::CommunityTrend},
      {"Scaled attribute trend", graphsamp::AttributeTrend},
      {"Determinism of experiment CSV", graphsamp::Determinism},
      {"TCEC performance budget", graphsamp::Performance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("CRITERION %zu: %s %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
