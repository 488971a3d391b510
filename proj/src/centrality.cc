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

#include "graphsamp/centrality.h"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <queue>

#include "graphsamp/errors.h"
#include "random_util.h"

namespace graphsamp {

namespace {

double NormalizeL1(std::vector<double>& x) {
  double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (sum > 0.0) {
    for (double& v : x) v /= sum;
  }
  return sum;
}

double L1Distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

}  // namespace

std::string_view MeasureName(CentralityMeasure m) {
  switch (m) {
    case CentralityMeasure::kEigenvector: return "eigenvector";
    case CentralityMeasure::kPageRank: return "pagerank";
    case CentralityMeasure::kInDegree: return "indegree";
    case CentralityMeasure::kBetweenness: return "betweenness";
    case CentralityMeasure::kSpringRank: return "springrank";
  }
  return "?";
}

std::optional<CentralityMeasure> ParseMeasure(std::string_view name) {
  for (auto m : {CentralityMeasure::kEigenvector, CentralityMeasure::kPageRank,
                 CentralityMeasure::kInDegree, CentralityMeasure::kBetweenness,
                 CentralityMeasure::kSpringRank}) {
    if (MeasureName(m) == name) return m;
  }
  return std::nullopt;
}

CentralityVector EigenvectorCentrality(const Graph& g, double tol, std::size_t max_iter) {
  const std::size_t n = g.node_count();
  if (g.arc_count() == 0) throw ValidationError("eigenvector centrality needs at least one edge");
  CentralityVector out{std::vector<double>(n, 1.0 / static_cast<double>(n)),
                       "eigenvector", 0, 0.0, false};
  // Iterates are scaled by their largest entry, which keeps a uniform vector
  // exact; the L1-normalised copy drives the stopping rule.
  std::vector<double> x(n, 1.0), next(n), normalised(n);
  while (out.iterations < max_iter) {
    double top = 0.0;
    for (NodeId j = 0; j < n; ++j) {
      double acc = x[j];
      for (const Neighbor& nb : g.in_neighbors(j)) acc += nb.weight * x[nb.node];
      next[j] = acc;
      top = std::max(top, acc);
    }
    for (double& v : next) v /= top;
    x.swap(next);
    normalised = x;
    NormalizeL1(normalised);
    out.residual = L1Distance(normalised, out.scores);
    out.scores.swap(normalised);
    ++out.iterations;
    if (out.residual < tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

CentralityVector PageRank(const Graph& g, double damping, double tol, std::size_t max_iter) {
  if (!(damping >= 0.0 && damping < 1.0)) throw ValidationError("damping must lie in [0, 1)");
  const std::size_t n = g.node_count();
  if (n == 0) throw ValidationError("pagerank of an empty graph");
  const double nd = static_cast<double>(n);
  CentralityVector out{std::vector<double>(n, 1.0 / nd), "pagerank", 0, 0.0, false};
  std::vector<double> next(n);
  while (out.iterations < max_iter) {
    double dangling = 0.0;
    for (NodeId j = 0; j < n; ++j) {
      if (g.out_strength(j) == 0.0) dangling += out.scores[j];
    }
    const double base = damping * dangling / nd + (1.0 - damping) / nd;
    for (NodeId i = 0; i < n; ++i) {
      double acc = 0.0;
      for (const Neighbor& nb : g.in_neighbors(i)) {
        acc += nb.weight / g.out_strength(nb.node) * out.scores[nb.node];
      }
      next[i] = damping * acc + base;
    }
    NormalizeL1(next);
    out.residual = L1Distance(next, out.scores);
    out.scores.swap(next);
    ++out.iterations;
    if (out.residual < tol) {
      out.converged = true;
      break;
    }
  }
  NormalizeL1(out.scores);
  return out;
}

CentralityVector InDegreeCentrality(const Graph& g) {
  CentralityVector out{std::vector<double>(g.node_count()), "indegree", 0, 0.0, true};
  for (NodeId i = 0; i < g.node_count(); ++i) out.scores[i] = g.in_strength(i);
  return out;
}

CentralityVector Betweenness(const Graph& g, std::optional<std::span<const NodeId>> sources) {
  const std::size_t n = g.node_count();
  CentralityVector out{std::vector<double>(n, 0.0), "betweenness", 0, 0.0, true};
  std::vector<NodeId> all;
  if (!sources) {
    all.resize(n);
    std::iota(all.begin(), all.end(), NodeId{0});
    sources = std::span<const NodeId>(all);
  }

  std::vector<std::int64_t> dist(n);
  std::vector<double> sigma(n), dependency(n);
  std::vector<NodeId> order;
  order.reserve(n);
  std::queue<NodeId> frontier;
  for (NodeId s : *sources) {
    if (s >= n) throw ValidationError("betweenness source out of range");
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(dependency.begin(), dependency.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    frontier.push(s);
    while (!frontier.empty()) {
      NodeId v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (const Neighbor& nb : g.out_neighbors(v)) {
        NodeId w = nb.node;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Walk back in non-increasing distance; predecessors are in-neighbours one
    // hop closer to s.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      for (const Neighbor& nb : g.in_neighbors(w)) {
        NodeId v = nb.node;
        if (dist[v] >= 0 && dist[v] + 1 == dist[w]) {
          dependency[v] += sigma[v] / sigma[w] * (1.0 + dependency[w]);
        }
      }
      if (w != s) out.scores[w] += dependency[w];
    }
    ++out.iterations;
  }

  double scale = 1.0;
  if (!sources->empty() && sources->size() != n) {
    scale = static_cast<double>(n) / static_cast<double>(sources->size());
  }
  if (!g.directed()) scale *= 0.5;
  if (scale != 1.0) {
    for (double& v : out.scores) v *= scale;
  }
  return out;
}

std::vector<NodeId> PivotSources(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), NodeId{0});
  if (count >= n) return pool;
  internal::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + internal::UniformIndex(rng, n - i)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

CentralityVector SpringRank(const Graph& g, double reg, double tol, std::size_t max_iter) {
  if (!(reg > 0.0)) throw ValidationError("springrank regularisation must be positive");
  const auto n = static_cast<Eigen::Index>(g.node_count());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * g.arc_count() + g.node_count());
  Eigen::VectorXd rhs(n);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    triplets.emplace_back(i, i, reg + g.out_strength(i) + g.in_strength(i));
    rhs[i] = g.out_strength(i) - g.in_strength(i);
    for (const Neighbor& nb : g.out_neighbors(i)) {
      triplets.emplace_back(i, nb.node, -nb.weight);
      triplets.emplace_back(nb.node, i, -nb.weight);
    }
  }
  Eigen::SparseMatrix<double> system(n, n);
  system.setFromTriplets(triplets.begin(), triplets.end());

  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
  cg.setTolerance(tol);
  cg.setMaxIterations(static_cast<Eigen::Index>(max_iter));
  cg.compute(system);
  Eigen::VectorXd s = cg.solve(rhs);

  CentralityVector out;
  out.method = "springrank";
  out.scores.assign(s.data(), s.data() + s.size());
  out.iterations = static_cast<std::size_t>(cg.iterations());
  out.residual = (system * s - rhs).norm();
  out.converged = cg.info() == Eigen::Success;
  return out;
}

CentralityVector ComputeCentrality(const Graph& g, CentralityMeasure m,
                                   const CentralityParams& params) {
  switch (m) {
    case CentralityMeasure::kEigenvector:
      return EigenvectorCentrality(g, params.tol > 0 ? params.tol : 1e-12, params.max_iter);
    case CentralityMeasure::kPageRank:
      return PageRank(g, params.damping, params.tol > 0 ? params.tol : 1e-13, params.max_iter);
    case CentralityMeasure::kInDegree:
      return InDegreeCentrality(g);
    case CentralityMeasure::kBetweenness: {
      if (params.pivots == 0) {
        if (g.node_count() > kExactBetweennessMaxNodes) {
          throw BudgetError("exact betweenness refused on " +
                            std::to_string(g.node_count()) + " nodes (limit " +
                            std::to_string(kExactBetweennessMaxNodes) +
                            "); use pivots");
        }
        return Betweenness(g);
      }
      auto pivots = PivotSources(g.node_count(), params.pivots, params.pivot_seed);
      return Betweenness(g, std::span<const NodeId>(pivots));
    }
    case CentralityMeasure::kSpringRank:
      return SpringRank(g, params.spring_reg, params.tol > 0 ? params.tol : 1e-14,
                        params.max_iter);
  }
  throw ValidationError("unknown centrality measure");
}

void WriteCentralityCsv(const CentralityVector& c, const NodeMapping* ids, std::ostream& out) {
  out << "node_id,score\n";
  char buf[40];
  for (NodeId i = 0; i < c.scores.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", c.scores[i]);
    out << (ids ? ids->to_full(i) : static_cast<std::int64_t>(i)) << ',' << buf << '\n';
  }
}

}  // namespace graphsamp
