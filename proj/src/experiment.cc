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

#include "graphsamp/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "format_util.h"
#include "graphsamp/errors.h"
#include "graphsamp/graph_io.h"
#include "graphsamp/metrics.h"
#include "json_convert.h"
#include "random_util.h"

namespace graphsamp {

using internal::FormatDouble;
using internal::Json;

namespace {

std::string ResolvePath(const std::string& p, const std::filesystem::path& base) {
  if (p.empty()) return p;
  std::filesystem::path path(p);
  if (path.is_relative() && !base.empty()) path = base / path;
  return path.lexically_normal().string();
}

void RejectUnknownKeys(const Json& j, std::initializer_list<std::string_view> known,
                       const std::string& where) {
  for (const auto& item : j.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw ValidationError(where + ": unknown key '" + item.key() + "'");
    }
  }
}

std::vector<std::string> GetStrings(const Json& j, const char* key, const std::string& where) {
  const Json& v = j.at(key);
  if (!v.is_array()) throw ValidationError(where + ": '" + key + "' must be an array");
  std::vector<std::string> out;
  for (const Json& s : v) {
    if (!s.is_string()) throw ValidationError(where + ": '" + key + "' must hold strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

SbmSpec ParseSbm(const Json& j) {
  const std::string where = "input.sbm";
  if (!j.is_object()) throw ValidationError(where + " must be an object");
  RejectUnknownKeys(j, {"block_sizes", "p_in", "p_out", "directed", "rng_seed"}, where);
  SbmSpec s;
  if (!j.contains("block_sizes") || !j["block_sizes"].is_array()) {
    throw ValidationError(where + ": 'block_sizes' must be an array");
  }
  for (const Json& b : j["block_sizes"]) {
    if (!b.is_number_integer() || b.get<std::int64_t>() <= 0) {
      throw ValidationError(where + ": block sizes must be positive integers");
    }
    s.block_sizes.push_back(b.get<std::size_t>());
  }
  s.p_in = internal::GetNumber(j, "p_in", where);
  s.p_out = internal::GetNumber(j, "p_out", where);
  if (j.contains("directed")) s.directed = internal::GetBool(j, "directed", where);
  if (j.contains("rng_seed")) s.rng_seed = internal::GetUnsigned(j, "rng_seed", where);
  return s;
}

AttributeSpec ParseAttributes(const Json& j) {
  const std::string where = "input.attributes";
  if (!j.is_object()) throw ValidationError(where + " must be an object");
  RejectUnknownKeys(j, {"noise", "labels", "rng_seed"}, where);
  AttributeSpec a;
  if (j.contains("noise")) a.noise = internal::GetNumber(j, "noise", where);
  if (j.contains("labels")) a.labels = GetStrings(j, "labels", where);
  if (j.contains("rng_seed")) a.rng_seed = internal::GetUnsigned(j, "rng_seed", where);
  return a;
}

GraphInput ParseInput(const Json& j, const std::filesystem::path& base) {
  const std::string where = "input";
  if (!j.is_object()) throw ValidationError("input must be an object");
  RejectUnknownKeys(j, {"edge_list", "directed", "labels", "sbm", "attributes"}, where);
  GraphInput in;
  if (j.contains("edge_list")) in.edge_list = ResolvePath(internal::GetString(j, "edge_list", where), base);
  if (j.contains("directed")) in.directed = internal::GetBool(j, "directed", where);
  if (j.contains("labels")) in.labels = ResolvePath(internal::GetString(j, "labels", where), base);
  if (j.contains("sbm")) in.sbm = ParseSbm(j["sbm"]);
  if (j.contains("attributes")) in.attributes = ParseAttributes(j["attributes"]);
  if (in.edge_list.empty() == !in.sbm.has_value()) {
    throw ValidationError("input needs exactly one of 'edge_list' and 'sbm'");
  }
  if (in.attributes && !in.sbm) {
    throw ValidationError("input.attributes requires an 'sbm' input");
  }
  if (in.sbm && !in.labels.empty()) {
    throw ValidationError("input.labels cannot be combined with 'sbm'");
  }
  return in;
}

SamplerEntry ParseSamplerEntry(const Json& j, std::size_t index) {
  const std::string where = "samplers[" + std::to_string(index) + "]";
  SamplerEntry e;
  std::string name;
  if (j.is_string()) {
    name = j.get<std::string>();
  } else if (j.is_object()) {
    RejectUnknownKeys(j, {"sampler", "label", "config"}, where);
    name = internal::GetString(j, "sampler", where);
    if (j.contains("label")) e.label = internal::GetString(j, "label", where);
    if (j.contains("config")) e.config = internal::ConfigFromJson(j["config"], {}, where);
  } else {
    throw ValidationError(where + " must be a sampler name or an object");
  }
  if (name != "full") {
    e.kind = ParseSamplerKind(name);
    if (!e.kind) throw ValidationError(where + ": unknown sampler '" + name + "'");
  }
  if (e.label.empty()) e.label = name;
  return e;
}

CentralityParams ParseCentralityParams(const Json& j) {
  const std::string where = "centrality";
  if (!j.is_object()) throw ValidationError("centrality must be an object");
  RejectUnknownKeys(j, {"damping", "spring_reg", "tol", "max_iter", "pivots", "pivot_seed"},
                    where);
  CentralityParams p;
  if (j.contains("damping")) p.damping = internal::GetNumber(j, "damping", where);
  if (j.contains("spring_reg")) p.spring_reg = internal::GetNumber(j, "spring_reg", where);
  if (j.contains("tol")) p.tol = internal::GetNumber(j, "tol", where);
  if (j.contains("max_iter")) p.max_iter = internal::GetUnsigned(j, "max_iter", where);
  if (j.contains("pivots")) p.pivots = internal::GetUnsigned(j, "pivots", where);
  if (j.contains("pivot_seed")) p.pivot_seed = internal::GetUnsigned(j, "pivot_seed", where);
  return p;
}

std::optional<ExperimentKind> ParseKind(std::string_view s) {
  for (auto k : {ExperimentKind::kCentrality, ExperimentKind::kCommunity,
                 ExperimentKind::kAttribute}) {
    if (ExperimentKindName(k) == s) return k;
  }
  return std::nullopt;
}

std::optional<StartPolicy> ParseStart(std::string_view s) {
  for (auto p : {StartPolicy::kRandom, StartPolicy::kSmallestBlock, StartPolicy::kSeedRegion}) {
    if (StartPolicyName(p) == s) return p;
  }
  return std::nullopt;
}

void ValidateSpec(const ExperimentSpec& s) {
  if (s.name.empty()) throw ValidationError("experiment name must not be empty");
  if (s.samplers.empty()) throw ValidationError("experiment lists no samplers");
  if (s.fractions.empty()) throw ValidationError("experiment lists no sample fractions");
  for (double f : s.fractions) {
    if (!(f > 0.0 && f <= 1.0)) throw ValidationError("sample fractions must lie in (0, 1]");
  }
  if (s.repetitions == 0) throw ValidationError("repetitions must be at least 1");
  if (!s.seeds.empty() && s.seeds.size() != s.repetitions) {
    throw ValidationError("seed list length must equal repetitions");
  }
  if (s.threads == 0) throw ValidationError("threads must be at least 1");
  switch (s.kind) {
    case ExperimentKind::kCentrality:
      if (s.measures.empty()) throw ValidationError("centrality experiment lists no measures");
      if (s.start == StartPolicy::kSeedRegion) {
        throw ValidationError("start policy seed_region needs an attribute experiment");
      }
      break;
    case ExperimentKind::kCommunity:
      if (s.start == StartPolicy::kSeedRegion) {
        throw ValidationError("start policy seed_region needs an attribute experiment");
      }
      break;
    case ExperimentKind::kAttribute:
      if (s.seed_regions.empty()) throw ValidationError("attribute experiment lists no seed regions");
      if (s.start != StartPolicy::kSeedRegion) {
        throw ValidationError("attribute experiments start in the seed region");
      }
      break;
  }
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> SplitCsvLine(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line_no);
  return fields;
}

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string Hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Trial {
  std::size_t sampler;
  std::size_t fraction;
  std::size_t repetition;
  std::string region;
};

struct TrialOutput {
  std::vector<RunRow> rows;
  std::optional<RunResult::StoredSample> sample;
};

// Runs `fn` over all trials on up to `threads` workers; outputs keep trial
// order so results do not depend on scheduling.
std::vector<TrialOutput> RunTrials(const std::vector<Trial>& trials, std::size_t threads,
                                   const std::function<TrialOutput(const Trial&)>& fn) {
  std::vector<TrialOutput> out(trials.size());
  std::vector<std::exception_ptr> errors(trials.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials.size(); i = next++) {
      try {
        out[i] = fn(trials[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(threads, trials.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

class Runner {
 public:
  Runner(const ExperimentSpec& spec, const Dataset& data) : spec_(spec), data_(data) {
    ValidateSpec(spec_);
    const std::size_t n = data_.graph.node_count();
    if (n == 0) throw ValidationError("experiment graph has no nodes");
    all_nodes_.resize(n);
    std::iota(all_nodes_.begin(), all_nodes_.end(), NodeId{0});
    if (spec_.start == StartPolicy::kSmallestBlock) {
      const auto& cats = data_.labels.categories();
      if (cats.empty()) throw ValidationError("start policy smallest_block needs node labels");
      std::vector<NodeId> best;
      for (std::size_t c = 0; c < cats.size(); ++c) {
        auto members = data_.labels.members(c);
        members.erase(std::remove_if(members.begin(), members.end(),
                                     [&](NodeId v) { return v >= n; }),
                      members.end());
        if (!members.empty() && (best.empty() || members.size() < best.size())) {
          best = std::move(members);
        }
      }
      if (best.empty()) throw ValidationError("no labelled node to start from");
      start_pool_ = std::move(best);
    } else {
      start_pool_ = all_nodes_;
    }
  }

  RunResult NewResult() const {
    RunResult r;
    r.spec = spec_;
    for (const auto& e : spec_.samplers) {
      SamplerConfig cfg = e.config;
      if (e.kind) cfg.alpha = cfg.ResolvedAlpha(data_.graph);
      r.resolved_configs.push_back(std::move(cfg));
    }
    return r;
  }

  std::vector<Trial> Trials(const std::vector<std::string>& regions) const {
    std::vector<Trial> t;
    for (const auto& region : regions) {
      for (std::size_t s = 0; s < spec_.samplers.size(); ++s) {
        for (std::size_t f = 0; f < spec_.fractions.size(); ++f) {
          for (std::size_t r = 0; r < spec_.repetitions; ++r) t.push_back({s, f, r, region});
        }
      }
    }
    return t;
  }

  // Draws the sample of one trial. nullopt on a partial sample.
  std::optional<std::vector<NodeId>> Draw(const Trial& t, std::span<const NodeId> pool,
                                          NodeId* start) const {
    const SamplerEntry& entry = spec_.samplers[t.sampler];
    const std::uint64_t rep_seed = spec_.RepetitionSeed(t.repetition);
    internal::Rng start_rng(internal::MixSeed(rep_seed, 1));
    *start = pool[internal::UniformIndex(start_rng, pool.size())];
    if (!entry.kind) return all_nodes_;
    SamplerConfig cfg = entry.config;
    cfg.target_size = TargetSizeForFraction(spec_.fractions[t.fraction], data_.graph.node_count());
    if (cfg.seed_nodes.empty()) {
      cfg.seed_nodes = {*start};
    } else {
      *start = cfg.seed_nodes.front();
    }
    cfg.rng_seed = internal::MixSeed(internal::MixSeed(rep_seed, 2), entry.config.rng_seed);
    try {
      return Sample(*entry.kind, data_.graph, cfg).nodes;
    } catch (const PartialResultError&) {
      return std::nullopt;
    }
  }

  RunRow Row(const Trial& t, const std::string& dataset, const std::string& measure,
             std::optional<double> value) const {
    return {dataset, spec_.samplers[t.sampler].label, spec_.fractions[t.fraction],
            t.repetition, measure, value};
  }

  std::optional<RunResult::StoredSample> Store(const Trial& t,
                                               const std::optional<std::vector<NodeId>>& nodes) const {
    if (!spec_.write_samples || !nodes) return std::nullopt;
    RunResult::StoredSample s{spec_.samplers[t.sampler].label, spec_.fractions[t.fraction],
                              t.repetition, t.region, {}};
    for (NodeId v : *nodes) s.nodes.push_back(data_.mapping.to_full(v));
    return s;
  }

  static void Collect(RunResult& r, std::vector<TrialOutput>&& outs) {
    for (auto& o : outs) {
      for (auto& row : o.rows) r.rows.push_back(std::move(row));
      if (o.sample) r.samples.push_back(std::move(*o.sample));
    }
  }

  const ExperimentSpec& spec() const { return spec_; }
  const Dataset& data() const { return data_; }
  std::span<const NodeId> start_pool() const { return start_pool_; }

 private:
  const ExperimentSpec& spec_;
  const Dataset& data_;
  std::vector<NodeId> all_nodes_;
  std::vector<NodeId> start_pool_;
};

std::vector<std::string> AllLabels(const Dataset& data) {
  std::vector<std::string> out(data.graph.node_count());
  for (NodeId v = 0; v < out.size(); ++v) out[v] = data.labels.label(v);
  return out;
}

void RequireLabels(const Dataset& data) {
  if (data.labels.categories().empty()) {
    throw ValidationError("this experiment needs node labels");
  }
}

}  // namespace

std::string_view ExperimentKindName(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::kCentrality: return "centrality";
    case ExperimentKind::kCommunity: return "community";
    case ExperimentKind::kAttribute: return "attribute";
  }
  return "?";
}

std::string_view StartPolicyName(StartPolicy p) {
  switch (p) {
    case StartPolicy::kRandom: return "random";
    case StartPolicy::kSmallestBlock: return "smallest_block";
    case StartPolicy::kSeedRegion: return "seed_region";
  }
  return "?";
}

std::uint64_t ExperimentSpec::RepetitionSeed(std::size_t r) const {
  return seeds.empty() ? internal::MixSeed(base_seed, r) : seeds[r];
}

ExperimentSpec ParseExperimentSpec(std::string_view text, const std::filesystem::path& base_dir) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw ParseError("experiment spec is not valid JSON", 0);
  if (!j.is_object()) throw ValidationError("experiment spec must be a JSON object");
  const std::string where = "experiment";
  RejectUnknownKeys(j,
                    {"name", "kind", "input", "samplers", "fractions", "measures", "centrality",
                     "repetitions", "base_seed", "seeds", "start", "seed_regions", "threads",
                     "output_dir", "write_samples"},
                    where);
  ExperimentSpec s;
  if (j.contains("name")) s.name = internal::GetString(j, "name", where);
  if (j.contains("kind")) {
    auto k = ParseKind(internal::GetString(j, "kind", where));
    if (!k) throw ValidationError("unknown experiment kind '" + j["kind"].get<std::string>() + "'");
    s.kind = *k;
  }
  if (!j.contains("input")) throw ValidationError("experiment: missing 'input'");
  s.input = ParseInput(j["input"], base_dir);
  if (!j.contains("samplers") || !j["samplers"].is_array()) {
    throw ValidationError("experiment: 'samplers' must be an array");
  }
  for (std::size_t i = 0; i < j["samplers"].size(); ++i) {
    s.samplers.push_back(ParseSamplerEntry(j["samplers"][i], i));
  }
  if (j.contains("fractions")) {
    if (!j["fractions"].is_array()) throw ValidationError("experiment: 'fractions' must be an array");
    s.fractions.clear();
    for (const Json& f : j["fractions"]) {
      if (!f.is_number()) throw ValidationError("experiment: fractions must be numbers");
      s.fractions.push_back(f.get<double>());
    }
  }
  if (j.contains("measures")) {
    for (const std::string& m : GetStrings(j, "measures", where)) {
      auto parsed = ParseMeasure(m);
      if (!parsed) throw ValidationError("unknown centrality measure '" + m + "'");
      s.measures.push_back(*parsed);
    }
  }
  if (j.contains("centrality")) s.centrality = ParseCentralityParams(j["centrality"]);
  if (j.contains("repetitions")) s.repetitions = internal::GetUnsigned(j, "repetitions", where);
  if (j.contains("base_seed")) s.base_seed = internal::GetUnsigned(j, "base_seed", where);
  if (j.contains("seeds")) {
    if (!j["seeds"].is_array()) throw ValidationError("experiment: 'seeds' must be an array");
    for (const Json& v : j["seeds"]) {
      if (!v.is_number_unsigned()) throw ValidationError("experiment: seeds must be non-negative integers");
      s.seeds.push_back(v.get<std::uint64_t>());
    }
  }
  switch (s.kind) {
    case ExperimentKind::kCentrality: s.start = StartPolicy::kRandom; break;
    case ExperimentKind::kCommunity: s.start = StartPolicy::kSmallestBlock; break;
    case ExperimentKind::kAttribute: s.start = StartPolicy::kSeedRegion; break;
  }
  if (j.contains("start")) {
    auto p = ParseStart(internal::GetString(j, "start", where));
    if (!p) throw ValidationError("unknown start policy '" + j["start"].get<std::string>() + "'");
    s.start = *p;
  }
  if (j.contains("seed_regions")) s.seed_regions = GetStrings(j, "seed_regions", where);
  if (j.contains("threads")) s.threads = internal::GetUnsigned(j, "threads", where);
  if (j.contains("output_dir")) {
    s.output_dir = ResolvePath(internal::GetString(j, "output_dir", where), base_dir);
  } else if (!base_dir.empty()) {
    s.output_dir = base_dir.lexically_normal().string();
  }
  if (j.contains("write_samples")) s.write_samples = internal::GetBool(j, "write_samples", where);
  ValidateSpec(s);
  return s;
}

ExperimentSpec LoadExperimentSpec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open experiment spec " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseExperimentSpec(buf.str(), path.parent_path());
}

std::string ResolvedSpecJson(const ExperimentSpec& s) {
  Json j;
  j["name"] = s.name;
  j["kind"] = std::string(ExperimentKindName(s.kind));
  Json input;
  if (s.input.sbm) {
    const SbmSpec& b = *s.input.sbm;
    input["sbm"] = {{"block_sizes", b.block_sizes}, {"p_in", b.p_in}, {"p_out", b.p_out},
                    {"directed", b.directed}, {"rng_seed", b.rng_seed}};
    if (s.input.attributes) {
      const AttributeSpec& a = *s.input.attributes;
      input["attributes"] = {{"noise", a.noise}, {"labels", a.labels}, {"rng_seed", a.rng_seed}};
    }
  } else {
    input["edge_list"] = s.input.edge_list;
    input["directed"] = s.input.directed;
    if (!s.input.labels.empty()) input["labels"] = s.input.labels;
  }
  j["input"] = std::move(input);
  Json samplers = Json::array();
  for (const auto& e : s.samplers) {
    samplers.push_back({{"sampler", e.kind ? std::string(SamplerName(*e.kind)) : "full"},
                        {"label", e.label},
                        {"config", internal::ConfigToJson(e.config)}});
  }
  j["samplers"] = std::move(samplers);
  j["fractions"] = s.fractions;
  Json measures = Json::array();
  for (auto m : s.measures) measures.push_back(std::string(MeasureName(m)));
  j["measures"] = std::move(measures);
  j["centrality"] = {{"damping", s.centrality.damping},   {"spring_reg", s.centrality.spring_reg},
                     {"tol", s.centrality.tol},           {"max_iter", s.centrality.max_iter},
                     {"pivots", s.centrality.pivots},     {"pivot_seed", s.centrality.pivot_seed}};
  j["repetitions"] = s.repetitions;
  j["base_seed"] = s.base_seed;
  j["seeds"] = s.seeds;
  j["start"] = std::string(StartPolicyName(s.start));
  j["seed_regions"] = s.seed_regions;
  j["threads"] = s.threads;
  j["output_dir"] = s.output_dir;
  j["write_samples"] = s.write_samples;
  return j.dump(2);
}

Dataset LoadDataset(const GraphInput& input) {
  if (input.sbm) {
    SbmGraph sbm = GenerateSbm(*input.sbm);
    std::vector<std::int64_t> ids(sbm.graph.node_count());
    std::iota(ids.begin(), ids.end(), std::int64_t{0});
    LabeledPartition labels = sbm.blocks;
    if (input.attributes) {
      std::vector<std::string> names = input.attributes->labels;
      if (names.empty()) names = sbm.blocks.categories();
      labels = PlantAttributes(sbm.blocks, input.attributes->noise, names,
                               input.attributes->rng_seed);
    }
    return {std::move(sbm.graph), NodeMapping(std::move(ids)), std::move(labels)};
  }
  LoadedGraph loaded = LoadEdgeList(input.edge_list, input.directed);
  LabeledPartition labels;
  if (!input.labels.empty()) {
    labels = AlignToMapping(LoadLabels(input.labels), loaded.mapping);
  }
  return {std::move(loaded.graph), std::move(loaded.mapping), std::move(labels)};
}

RunResult RunCentralityComparison(const ExperimentSpec& spec, const Dataset& data) {
  Runner runner(spec, data);
  std::vector<std::vector<double>> truth;
  for (auto m : spec.measures) {
    truth.push_back(GroundTruthCentrality(data.graph, m, spec.centrality));
  }
  auto run = [&](const Trial& t) {
    TrialOutput out;
    NodeId start = 0;
    auto nodes = runner.Draw(t, runner.start_pool(), &start);
    std::optional<std::pair<Graph, NodeMapping>> sub;
    if (nodes) sub = InducedSubgraph(data.graph, *nodes);
    for (std::size_t k = 0; k < spec.measures.size(); ++k) {
      const auto measure = spec.measures[k];
      std::optional<double> tau;
      if (sub && nodes->size() >= 2) {
        try {
          CentralityVector local = ComputeCentrality(sub->first, measure, spec.centrality);
          std::vector<double> global(nodes->size());
          for (std::size_t i = 0; i < nodes->size(); ++i) global[i] = truth[k][(*nodes)[i]];
          tau = KendallTau(local.scores, global);
        } catch (const UndefinedCorrelationError&) {
        } catch (const ValidationError&) {
        }
      }
      out.rows.push_back(runner.Row(t, spec.name, std::string(MeasureName(measure)), tau));
    }
    out.sample = runner.Store(t, nodes);
    return out;
  };
  RunResult result = runner.NewResult();
  Runner::Collect(result, RunTrials(runner.Trials({""}), spec.threads, run));
  return result;
}

RunResult RunCommunityExperiment(const ExperimentSpec& spec, const Dataset& data) {
  RequireLabels(data);
  Runner runner(spec, data);
  const std::vector<NodeId> all = [&] {
    std::vector<NodeId> v(data.graph.node_count());
    std::iota(v.begin(), v.end(), NodeId{0});
    return v;
  }();
  const CategoricalDistribution full = LabelHistogram(all, data.labels);
  auto run = [&](const Trial& t) {
    TrialOutput out;
    NodeId start = 0;
    auto nodes = runner.Draw(t, runner.start_pool(), &start);
    std::optional<double> kl, confined;
    if (nodes && !nodes->empty()) {
      kl = KlDivergence(full, LabelHistogram(*nodes, data.labels));
      const std::size_t block = data.labels.code(start);
      auto inside = std::count_if(nodes->begin(), nodes->end(),
                                  [&](NodeId v) { return data.labels.code(v) == block; });
      confined = static_cast<double>(inside) / static_cast<double>(nodes->size());
    }
    out.rows.push_back(runner.Row(t, spec.name, "kl", kl));
    out.rows.push_back(runner.Row(t, spec.name, "seed_block_fraction", confined));
    out.sample = runner.Store(t, nodes);
    return out;
  };
  RunResult result = runner.NewResult();
  Runner::Collect(result, RunTrials(runner.Trials({""}), spec.threads, run));
  return result;
}

RunResult RunAttributeExperiment(const ExperimentSpec& spec, const Dataset& data) {
  RequireLabels(data);
  Runner runner(spec, data);
  const auto& cats = data.labels.categories();
  std::map<std::string, std::vector<NodeId>> pools;
  for (const auto& region : spec.seed_regions) {
    auto it = std::find(cats.begin(), cats.end(), region);
    if (it == cats.end()) {
      throw ValidationError("seed region '" + region + "' does not occur in the labels");
    }
    auto members = data.labels.members(static_cast<std::size_t>(it - cats.begin()));
    members.erase(std::remove_if(members.begin(), members.end(),
                                 [&](NodeId v) { return v >= data.graph.node_count(); }),
                  members.end());
    if (members.empty()) throw ValidationError("seed region '" + region + "' has no nodes");
    pools[region] = std::move(members);
  }
  std::vector<NodeId> all(data.graph.node_count());
  std::iota(all.begin(), all.end(), NodeId{0});
  const CategoricalDistribution full = LabelHistogram(all, data.labels);
  const std::vector<std::string> full_labels = AllLabels(data);
  for (const auto& region : spec.seed_regions) {
    ComputeEntropyRatio(full_labels, full_labels, region);  // validates the full frequency
  }

  auto run = [&](const Trial& t) {
    TrialOutput out;
    NodeId start = 0;
    auto nodes = runner.Draw(t, pools.at(t.region), &start);
    std::optional<double> kl, ratio, degenerate;
    if (nodes && !nodes->empty()) {
      kl = KlDivergence(full, LabelHistogram(*nodes, data.labels));
      std::vector<std::string> sample_labels;
      sample_labels.reserve(nodes->size());
      for (NodeId v : *nodes) sample_labels.push_back(full_labels[v]);
      EntropyRatio er = ComputeEntropyRatio(sample_labels, full_labels, t.region);
      ratio = er.value;
      degenerate = er.degenerate ? 1.0 : 0.0;
    }
    const std::string dataset = spec.name + "@" + t.region;
    out.rows.push_back(runner.Row(t, dataset, "kl", kl));
    out.rows.push_back(runner.Row(t, dataset, "entropy_ratio", ratio));
    out.rows.push_back(runner.Row(t, dataset, "entropy_degenerate", degenerate));
    out.sample = runner.Store(t, nodes);
    return out;
  };
  RunResult result = runner.NewResult();
  Runner::Collect(result, RunTrials(runner.Trials(spec.seed_regions), spec.threads, run));
  return result;
}

RunResult RunExperiment(const ExperimentSpec& spec) {
  ValidateSpec(spec);
  Dataset data = LoadDataset(spec.input);
  switch (spec.kind) {
    case ExperimentKind::kCentrality: return RunCentralityComparison(spec, data);
    case ExperimentKind::kCommunity: return RunCommunityExperiment(spec, data);
    case ExperimentKind::kAttribute: return RunAttributeExperiment(spec, data);
  }
  throw ValidationError("unknown experiment kind");
}

std::vector<CellSummary> Summarize(const std::vector<RunRow>& rows) {
  using Key = std::tuple<std::string, std::string, double, std::string>;
  std::map<Key, std::size_t> index;
  std::vector<std::vector<double>> values;
  std::vector<CellSummary> cells;
  for (const RunRow& r : rows) {
    Key key{r.dataset, r.sampler, r.fraction, r.measure};
    auto [it, inserted] = index.emplace(key, cells.size());
    if (inserted) {
      cells.push_back({r.dataset, r.sampler, r.fraction, r.measure, 0.0, 0.0, 0});
      values.emplace_back();
    }
    if (r.value) values[it->second].push_back(*r.value);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& v = values[i];
    cells[i].count = v.size();
    if (v.empty()) {
      cells[i].mean = cells[i].std = std::nan("");
      continue;
    }
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    cells[i].mean = mean;
    cells[i].std = std::sqrt(var / static_cast<double>(v.size()));
  }
  return cells;
}

void WriteRawCsv(const std::vector<RunRow>& rows, std::ostream& out) {
  out << kRawCsvHeader << '\n';
  for (const RunRow& r : rows) {
    out << CsvField(r.dataset) << ',' << CsvField(r.sampler) << ',' << FormatDouble(r.fraction)
        << ',' << r.repetition << ',' << CsvField(r.measure) << ','
        << (r.value ? FormatDouble(*r.value) : std::string()) << '\n';
  }
}

void WriteSummaryCsv(const std::vector<CellSummary>& cells, std::ostream& out) {
  out << kSummaryCsvHeader << '\n';
  for (const CellSummary& c : cells) {
    const bool present = c.count > 0;
    out << CsvField(c.dataset) << ',' << CsvField(c.sampler) << ',' << FormatDouble(c.fraction)
        << ',' << CsvField(c.measure) << ',' << (present ? FormatDouble(c.mean) : "") << ','
        << (present ? FormatDouble(c.std) : "") << ',' << c.count << '\n';
  }
}

std::vector<RunRow> ReadRawCsv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty result file", 1);
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRawCsvHeader) {
    throw ParseError("unexpected header '" + line + "'", line_no);
  }
  std::vector<RunRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = SplitCsvLine(line, line_no);
    if (f.size() != 6) throw ParseError("expected 6 fields", line_no);
    RunRow r;
    r.dataset = f[0];
    r.sampler = f[1];
    if (!internal::ParseDouble(f[2], r.fraction)) throw ParseError("bad fraction", line_no);
    double rep = 0.0;
    if (!internal::ParseDouble(f[3], rep) || rep < 0 || rep != std::floor(rep)) {
      throw ParseError("bad repetition", line_no);
    }
    r.repetition = static_cast<std::size_t>(rep);
    r.measure = f[4];
    if (!f[5].empty()) {
      double v = 0.0;
      if (!internal::ParseDouble(f[5], v)) throw ParseError("bad value", line_no);
      r.value = v;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void WriteRunOutputs(const RunResult& result, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::string& name = result.spec.name;
  auto open = [&](const std::filesystem::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw Error("cannot write " + p.string());
    return out;
  };
  const auto summary = Summarize(result.rows);
  {
    auto out = open(dir / (name + ".raw.csv"));
    WriteRawCsv(result.rows, out);
  }
  {
    auto out = open(dir / (name + ".summary.csv"));
    WriteSummaryCsv(summary, out);
  }
  {
    Json j;
    j["name"] = name;
    j["kind"] = std::string(ExperimentKindName(result.spec.kind));
    j["spec"] = Json::parse(ResolvedSpecJson(result.spec));
    Json configs = Json::array();
    for (std::size_t i = 0; i < result.resolved_configs.size(); ++i) {
      configs.push_back({{"label", result.spec.samplers[i].label},
                         {"config", internal::ConfigToJson(result.resolved_configs[i])}});
    }
    j["resolved_samplers"] = std::move(configs);
    j["constants"] = {{"restart_probability", kRestartProbability},
                      {"step_budget_per_node", kStepBudgetPerNode},
                      {"kl_epsilon", kKlEpsilon},
                      {"log_base", "e"}};
    Json cells = Json::array();
    for (const CellSummary& c : summary) {
      const bool present = c.count > 0;
      cells.push_back({{"dataset", c.dataset},
                       {"sampler", c.sampler},
                       {"fraction", c.fraction},
                       {"measure", c.measure},
                       {"mean", present ? Json(c.mean) : Json(nullptr)},
                       {"std", present ? Json(c.std) : Json(nullptr)},
                       {"R", c.count}});
    }
    j["summary"] = std::move(cells);
    auto out = open(dir / (name + ".json"));
    out << j.dump(2) << '\n';
  }
  if (!result.samples.empty()) {
    std::filesystem::create_directories(dir / "samples");
    for (const auto& s : result.samples) {
      std::string file = name + "__" + s.sampler + "__f" + FormatDouble(s.fraction) + "__r" +
                         std::to_string(s.repetition);
      if (!s.region.empty()) file += "__" + s.region;
      for (char& c : file) {
        if (c == '/' || c == '\\' || c == ' ') c = '_';
      }
      auto out = open(dir / "samples" / (file + ".txt"));
      for (auto v : s.nodes) out << v << '\n';
    }
  }
}

std::vector<double> GroundTruthCentrality(const Graph& g, CentralityMeasure m,
                                          const CentralityParams& params) {
  const char* env = std::getenv(kCacheDirEnv);
  if (env == nullptr || *env == '\0') return ComputeCentrality(g, m, params).scores;

  const std::string fingerprint =
      FormatDouble(params.damping) + "," + FormatDouble(params.spring_reg) + "," +
      FormatDouble(params.tol) + "," + std::to_string(params.max_iter) + "," +
      std::to_string(params.pivots) + "," + std::to_string(params.pivot_seed);
  const std::filesystem::path dir(env);
  const std::filesystem::path file =
      dir / (Hex(g.content_hash()) + "-" + std::string(MeasureName(m)) + "-" +
             Hex(Fnv1a(fingerprint)) + ".txt");

  if (std::ifstream in(file); in) {
    std::size_t n = 0;
    std::string tag;
    if (in >> tag >> n && tag == "n" && n == g.node_count()) {
      std::vector<double> scores(n);
      std::string token;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        ok = static_cast<bool>(in >> token) && internal::ParseDouble(token, scores[i]);
      }
      if (ok) return scores;
    }
  }

  std::vector<double> scores = ComputeCentrality(g, m, params).scores;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path tmp = file.string() + ".tmp" + Hex(Fnv1a(std::to_string(
                                        std::hash<std::thread::id>{}(std::this_thread::get_id()))));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return scores;
    out << "n " << scores.size() << '\n';
    char buf[40];
    for (double v : scores) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << buf << '\n';
    }
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return scores;
}

}  // namespace graphsamp
