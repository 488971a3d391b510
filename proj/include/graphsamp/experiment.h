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

#ifndef GRAPHSAMP_EXPERIMENT_H_
#define GRAPHSAMP_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphsamp/centrality.h"
#include "graphsamp/graph.h"
#include "graphsamp/partition.h"
#include "graphsamp/samplers.h"
#include "graphsamp/synth.h"

namespace graphsamp {

enum class ExperimentKind { kCentrality, kCommunity, kAttribute };
std::string_view ExperimentKindName(ExperimentKind k);

// How each repetition picks its start node.
//   kRandom: uniform over all nodes.
//   kSmallestBlock: uniform over the smallest label class (ties: first).
//   kSeedRegion: uniform over the current seed region (attribute runs).
enum class StartPolicy { kRandom, kSmallestBlock, kSeedRegion };
std::string_view StartPolicyName(StartPolicy p);

struct AttributeSpec {
  double noise = 0.0;
  // Empty: one label per block, named after the block.
  std::vector<std::string> labels;
  std::uint64_t rng_seed = 0;

  friend bool operator==(const AttributeSpec&, const AttributeSpec&) = default;
};

// Either an edge list (with optional label file) or a synthetic SBM.
struct GraphInput {
  std::string edge_list;
  bool directed = true;
  std::string labels;
  std::optional<SbmSpec> sbm;
  // Planted on top of the SBM blocks; the blocks are used when absent.
  std::optional<AttributeSpec> attributes;

  friend bool operator==(const GraphInput&, const GraphInput&) = default;
};

struct SamplerEntry {
  // Column value in result files; defaults to the sampler name.
  std::string label;
  // nullopt selects the pseudo-sampler "full" (every node).
  std::optional<SamplerKind> kind;
  // target_size is overwritten per fraction; rng_seed and seed_nodes per
  // repetition unless seed_nodes is given explicitly.
  SamplerConfig config;

  friend bool operator==(const SamplerEntry&, const SamplerEntry&) = default;
};

inline const std::vector<double> kDefaultFractions = {0.05, 0.1, 0.15, 0.2, 0.25, 0.3};

struct ExperimentSpec {
  std::string name = "experiment";
  ExperimentKind kind = ExperimentKind::kCentrality;
  GraphInput input;
  std::vector<SamplerEntry> samplers;
  std::vector<double> fractions = kDefaultFractions;
  // Centrality runs only.
  std::vector<CentralityMeasure> measures;
  CentralityParams centrality;
  std::size_t repetitions = 10;
  // Repetition r uses seeds[r] when given (size must equal repetitions),
  // otherwise a seed derived from (base_seed, r).
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> seeds;
  StartPolicy start = StartPolicy::kRandom;
  // Attribute runs only.
  std::vector<std::string> seed_regions;
  std::size_t threads = 1;
  std::string output_dir = ".";
  // Also write each sample's node list under output_dir/samples.
  bool write_samples = false;

  std::uint64_t RepetitionSeed(std::size_t r) const;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

// Parses the JSON experiment document. Relative paths are resolved against
// `base_dir`. Unknown keys raise ValidationError; malformed JSON ParseError.
ExperimentSpec ParseExperimentSpec(std::string_view text,
                                   const std::filesystem::path& base_dir = {});
ExperimentSpec LoadExperimentSpec(const std::filesystem::path& path);

// The spec with every default written out; parses back to an equal spec.
std::string ResolvedSpecJson(const ExperimentSpec& spec);

struct Dataset {
  Graph graph;
  NodeMapping mapping;
  // Indexed by dense node id; empty when the input has no labels.
  LabeledPartition labels;
};
Dataset LoadDataset(const GraphInput& input);

// One per-repetition value. `value` is empty for a missing cell (partial
// sample or undefined correlation).
struct RunRow {
  std::string dataset;
  std::string sampler;
  double fraction = 0.0;
  std::size_t repetition = 0;
  std::string measure;
  std::optional<double> value;

  friend bool operator==(const RunRow&, const RunRow&) = default;
};

struct CellSummary {
  std::string dataset;
  std::string sampler;
  double fraction = 0.0;
  std::string measure;
  double mean = 0.0;
  // Population standard deviation over the present values.
  double std = 0.0;
  // Number of present values.
  std::size_t count = 0;

  friend bool operator==(const CellSummary&, const CellSummary&) = default;
};

struct RunResult {
  ExperimentSpec spec;
  std::vector<RunRow> rows;
  // Per-sampler configuration with graph-dependent defaults resolved.
  std::vector<SamplerConfig> resolved_configs;
  // Samples in row order, kept only when spec.write_samples.
  struct StoredSample {
    std::string sampler;
    double fraction;
    std::size_t repetition;
    std::string region;
    std::vector<std::int64_t> nodes;
  };
  std::vector<StoredSample> samples;
};

// Kendall tau over the sampled nodes between each measure on the induced
// subgraph and on the full graph. Measure names are the centrality names.
RunResult RunCentralityComparison(const ExperimentSpec& spec, const Dataset& data);

// Measures "kl" (full || sample label histograms) and "seed_block_fraction"
// (share of the sample carrying the start node's label).
RunResult RunCommunityExperiment(const ExperimentSpec& spec, const Dataset& data);

// Per seed region: "kl" and "entropy_ratio" (0 when degenerate) plus
// "entropy_degenerate" (0/1). The dataset column reads "<name>@<region>".
RunResult RunAttributeExperiment(const ExperimentSpec& spec, const Dataset& data);

// Loads the dataset and dispatches on spec.kind.
RunResult RunExperiment(const ExperimentSpec& spec);

// Aggregates rows per (dataset, sampler, fraction, measure) in first
// appearance order.
std::vector<CellSummary> Summarize(const std::vector<RunRow>& rows);

inline constexpr std::string_view kRawCsvHeader =
    "dataset,sampler,fraction,repetition,measure,value";
inline constexpr std::string_view kSummaryCsvHeader =
    "dataset,sampler,fraction,measure,mean,std,R";

void WriteRawCsv(const std::vector<RunRow>& rows, std::ostream& out);
void WriteSummaryCsv(const std::vector<CellSummary>& cells, std::ostream& out);
// Throws ParseError on a header other than kRawCsvHeader or bad rows.
std::vector<RunRow> ReadRawCsv(std::istream& in);

// Writes <dir>/<name>.raw.csv, <name>.summary.csv and <name>.json (resolved
// spec, resolved sampler configs and summary), plus samples when requested.
void WriteRunOutputs(const RunResult& result, const std::filesystem::path& dir);

// Environment variable naming the ground-truth cache directory; caching is
// off when unset or empty.
inline constexpr const char* kCacheDirEnv = "GRAPHSAMP_CACHE_DIR";

// Whole-graph centrality, read from / written to the cache when enabled.
std::vector<double> GroundTruthCentrality(const Graph& g, CentralityMeasure m,
                                          const CentralityParams& params);

}  // namespace graphsamp

#endif  // GRAPHSAMP_EXPERIMENT_H_
