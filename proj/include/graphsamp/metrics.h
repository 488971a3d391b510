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

#ifndef GRAPHSAMP_METRICS_H_
#define GRAPHSAMP_METRICS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphsamp/graph.h"
#include "graphsamp/partition.h"

namespace graphsamp {

struct CategoricalDistribution {
  std::vector<std::string> labels;
  std::vector<double> probs;

  // Probability of `label`, 0 if absent.
  double prob(std::string_view label) const;
};

// Smoothing mass added to every bin of the second argument of KlDivergence.
inline constexpr double kKlEpsilon = 1e-12;

// Kendall tau-b between two equally long score vectors (length >= 2), in
// O(n log n). Throws UndefinedCorrelationError when either vector is constant
// and ValidationError on a length mismatch.
double KendallTau(std::span<const double> x, std::span<const double> y);

// KL(p || q) in nats. Each q bin gets `epsilon` added before renormalising.
// Labels are matched by name; different label sets raise ValidationError.
double KlDivergence(const CategoricalDistribution& p, const CategoricalDistribution& q,
                    double epsilon = kKlEpsilon);

// Binary entropy in nats; 0 at the endpoints.
double BinaryEntropy(double p);

struct EntropyRatio {
  double value = 0.0;
  // The sample frequency of the seed label is 0 or 1; value is then 0.
  bool degenerate = false;
};

// H(freq of `seed` in sample) / H(freq of `seed` in full). Throws
// ValidationError unless the full frequency lies strictly inside (0, 1).
EntropyRatio ComputeEntropyRatio(std::span<const std::string> sample_labels,
                                 std::span<const std::string> full_labels,
                                 std::string_view seed);

// Empirical frequencies of the nodes' labels over partition.label_set(), in
// that order, zero-count labels kept. Throws ValidationError when `nodes` is
// empty.
CategoricalDistribution LabelHistogram(std::span<const NodeId> nodes,
                                       const LabeledPartition& partition);

}  // namespace graphsamp

#endif  // GRAPHSAMP_METRICS_H_
