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

#include "graphsamp/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "graphsamp/errors.h"

namespace graphsamp {

namespace {

// Sum over runs of equal values (in an already grouped order) of t(t-1)/2.
template <typename Equal>
std::int64_t TiedPairs(std::span<const std::size_t> order, Equal equal) {
  std::int64_t total = 0;
  std::int64_t run = 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (equal(order[i - 1], order[i])) {
      ++run;
    } else {
      total += run * (run - 1) / 2;
      run = 1;
    }
  }
  return total + run * (run - 1) / 2;
}

// Stable merge sort of `idx` by y, returning the number of inversions.
std::int64_t SortCountingSwaps(std::vector<std::size_t>& idx, std::span<const double> y) {
  std::vector<std::size_t> buf(idx.size());
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < idx.size(); width *= 2) {
    for (std::size_t lo = 0; lo < idx.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, idx.size());
      const std::size_t hi = std::min(lo + 2 * width, idx.size());
      std::size_t a = lo, b = mid, out = lo;
      while (a < mid && b < hi) {
        if (y[idx[a]] <= y[idx[b]]) {
          buf[out++] = idx[a++];
        } else {
          swaps += static_cast<std::int64_t>(mid - a);
          buf[out++] = idx[b++];
        }
      }
      while (a < mid) buf[out++] = idx[a++];
      while (b < hi) buf[out++] = idx[b++];
    }
    idx.swap(buf);
  }
  return swaps;
}

}  // namespace

double CategoricalDistribution::prob(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return probs[i];
  }
  return 0.0;
}

double KendallTau(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ValidationError("kendall tau needs equal lengths");
  if (x.size() < 2) throw ValidationError("kendall tau needs at least two values");
  const std::size_t n = x.size();

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return x[a] != x[b] ? x[a] < x[b] : y[a] < y[b];
  });

  const auto total = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  const std::int64_t x_ties =
      TiedPairs(idx, [&](std::size_t a, std::size_t b) { return x[a] == x[b]; });
  const std::int64_t joint_ties = TiedPairs(
      idx, [&](std::size_t a, std::size_t b) { return x[a] == x[b] && y[a] == y[b]; });
  const std::int64_t swaps = SortCountingSwaps(idx, y);
  const std::int64_t y_ties =
      TiedPairs(idx, [&](std::size_t a, std::size_t b) { return y[a] == y[b]; });

  if (x_ties == total || y_ties == total) {
    throw UndefinedCorrelationError("kendall tau is undefined for a constant vector");
  }
  const double numer =
      static_cast<double>(total - x_ties - y_ties + joint_ties - 2 * swaps);
  const double denom = std::sqrt(static_cast<double>(total - x_ties)) *
                       std::sqrt(static_cast<double>(total - y_ties));
  return std::clamp(numer / denom, -1.0, 1.0);
}

double KlDivergence(const CategoricalDistribution& p, const CategoricalDistribution& q,
                    double epsilon) {
  if (p.labels.size() != p.probs.size() || q.labels.size() != q.probs.size()) {
    throw ValidationError("distribution labels and probabilities differ in length");
  }
  if (p.labels.size() != q.labels.size()) {
    throw ValidationError("kl divergence needs identical label sets");
  }
  std::unordered_map<std::string_view, std::size_t> q_index;
  for (std::size_t i = 0; i < q.labels.size(); ++i) q_index.emplace(q.labels[i], i);
  if (q_index.size() != q.labels.size()) throw ValidationError("duplicate label in distribution");

  double q_total = 0.0;
  for (double v : q.probs) q_total += v + epsilon;

  double kl = 0.0;
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    auto it = q_index.find(p.labels[i]);
    if (it == q_index.end()) {
      throw ValidationError("label '" + p.labels[i] + "' missing from second distribution");
    }
    const double pi = p.probs[i];
    if (pi <= 0.0) continue;
    const double qi = (q.probs[it->second] + epsilon) / q_total;
    kl += pi * std::log(pi / qi);
  }
  return std::max(kl, 0.0);
}

double BinaryEntropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

EntropyRatio ComputeEntropyRatio(std::span<const std::string> sample_labels,
                                 std::span<const std::string> full_labels,
                                 std::string_view seed) {
  auto frequency = [&](std::span<const std::string> labels) {
    if (labels.empty()) return 0.0;
    auto hits = std::count(labels.begin(), labels.end(), seed);
    return static_cast<double>(hits) / static_cast<double>(labels.size());
  };
  const double full = frequency(full_labels);
  if (!(full > 0.0 && full < 1.0)) {
    throw ValidationError("seed label '" + std::string(seed) +
                          "' must have full-network frequency strictly inside (0, 1)");
  }
  const double sample = frequency(sample_labels);
  if (sample <= 0.0 || sample >= 1.0) return {0.0, true};
  return {BinaryEntropy(sample) / BinaryEntropy(full), false};
}

CategoricalDistribution LabelHistogram(std::span<const NodeId> nodes,
                                       const LabeledPartition& partition) {
  if (nodes.empty()) throw ValidationError("label histogram of an empty node set");
  CategoricalDistribution d;
  d.labels = partition.label_set();
  // Nodes past the partition are unknown; make sure that bin exists.
  const bool any_outside = std::any_of(nodes.begin(), nodes.end(),
                                       [&](NodeId v) { return v >= partition.size(); });
  if (any_outside && !partition.has_unknown()) {
    d.labels.emplace_back(LabeledPartition::kUnknown);
  }
  std::vector<std::size_t> counts(d.labels.size(), 0);
  for (NodeId v : nodes) ++counts[partition.code(v)];
  d.probs.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    d.probs[i] = static_cast<double>(counts[i]) / static_cast<double>(nodes.size());
  }
  return d;
}

}  // namespace graphsamp
