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

#include "graphsamp/sample_io.h"

#include <istream>
#include <ostream>

#include "graphsamp/errors.h"
#include "json_convert.h"

namespace graphsamp {

namespace internal {

namespace {

const Json& Require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(where + ": missing key '" + key + "'");
  }
  return j.at(key);
}

std::int64_t OutId(NodeId v, const NodeMapping* ids) {
  return ids ? ids->to_full(v) : static_cast<std::int64_t>(v);
}

}  // namespace

double GetNumber(const Json& j, const char* key, const std::string& where) {
  const Json& v = Require(j, key, where);
  if (!v.is_number()) throw ValidationError(where + ": '" + key + "' must be a number");
  return v.get<double>();
}

std::uint64_t GetUnsigned(const Json& j, const char* key, const std::string& where) {
  const Json& v = Require(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ValidationError(where + ": '" + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

bool GetBool(const Json& j, const char* key, const std::string& where) {
  const Json& v = Require(j, key, where);
  if (!v.is_boolean()) throw ValidationError(where + ": '" + key + "' must be a boolean");
  return v.get<bool>();
}

std::string GetString(const Json& j, const char* key, const std::string& where) {
  const Json& v = Require(j, key, where);
  if (!v.is_string()) throw ValidationError(where + ": '" + key + "' must be a string");
  return v.get<std::string>();
}

Json ConfigToJson(const SamplerConfig& cfg, const NodeMapping* ids) {
  Json seeds = Json::array();
  for (NodeId v : cfg.seed_nodes) seeds.push_back(OutId(v, ids));
  Json j;
  j["target_size"] = cfg.target_size;
  j["rw_init_fraction"] = cfg.rw_init_fraction;
  j["leaderboard_capacity"] = cfg.leaderboard_capacity;
  j["alpha"] = cfg.alpha ? Json(*cfg.alpha) : Json(nullptr);
  j["exploration_p"] = cfg.exploration_p;
  j["damping"] = cfg.damping;
  j["seed_nodes"] = std::move(seeds);
  j["rng_seed"] = cfg.rng_seed;
  j["rescore_on_pop"] = cfg.rescore_on_pop;
  j["tcpr_mix_in_degree"] = cfg.tcpr_mix_in_degree;
  j["node2vec_p"] = cfg.node2vec_p;
  j["node2vec_q"] = cfg.node2vec_q;
  return j;
}

SamplerConfig ConfigFromJson(const Json& j, SamplerConfig base, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": sampler config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "target_size") {
      base.target_size = GetUnsigned(j, "target_size", where);
    } else if (key == "rw_init_fraction") {
      base.rw_init_fraction = GetNumber(j, "rw_init_fraction", where);
    } else if (key == "leaderboard_capacity") {
      base.leaderboard_capacity = GetUnsigned(j, "leaderboard_capacity", where);
    } else if (key == "alpha") {
      base.alpha = value.is_null() ? std::nullopt
                                   : std::optional<double>(GetNumber(j, "alpha", where));
    } else if (key == "exploration_p") {
      base.exploration_p = GetNumber(j, "exploration_p", where);
    } else if (key == "damping") {
      base.damping = GetNumber(j, "damping", where);
    } else if (key == "seed_nodes") {
      if (!value.is_array()) throw ValidationError(where + ": 'seed_nodes' must be an array");
      base.seed_nodes.clear();
      for (const Json& v : value) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
          throw ValidationError(where + ": seed node ids must be non-negative integers");
        }
        base.seed_nodes.push_back(static_cast<NodeId>(v.get<std::int64_t>()));
      }
    } else if (key == "rng_seed") {
      base.rng_seed = GetUnsigned(j, "rng_seed", where);
    } else if (key == "rescore_on_pop") {
      base.rescore_on_pop = GetBool(j, "rescore_on_pop", where);
    } else if (key == "tcpr_mix_in_degree") {
      base.tcpr_mix_in_degree = GetBool(j, "tcpr_mix_in_degree", where);
    } else if (key == "node2vec_p") {
      base.node2vec_p = GetNumber(j, "node2vec_p", where);
    } else if (key == "node2vec_q") {
      base.node2vec_q = GetNumber(j, "node2vec_q", where);
    } else {
      throw ValidationError(where + ": unknown sampler option '" + key + "'");
    }
  }
  return base;
}

Json CountersToJson(const SampleCounters& c) {
  Json j;
  j["scored_candidates"] = c.scored_candidates;
  j["leaderboard_evictions"] = c.leaderboard_evictions;
  j["fallback_events"] = c.fallback_events;
  j["walk_steps"] = c.walk_steps;
  j["restarts"] = c.restarts;
  j["rescored_pops"] = c.rescored_pops;
  j["dangling_rejections"] = c.dangling_rejections;
  return j;
}

}  // namespace internal

using internal::Json;

std::string SampleJson(const SampleResult& result, const NodeMapping* ids) {
  Json nodes = Json::array();
  for (NodeId v : result.nodes) {
    nodes.push_back(ids ? ids->to_full(v) : static_cast<std::int64_t>(v));
  }
  Json provenance = Json::array();
  for (Provenance p : result.provenance) provenance.push_back(std::string(ProvenanceName(p)));
  Json j;
  j["sampler"] = std::string(SamplerName(result.sampler));
  j["nodes"] = std::move(nodes);
  j["provenance"] = std::move(provenance);
  j["counters"] = internal::CountersToJson(result.counters);
  j["config"] = internal::ConfigToJson(result.config, ids);
  j["constants"] = {{"restart_probability", kRestartProbability},
                    {"step_budget_per_node", kStepBudgetPerNode}};
  return j.dump(2);
}

void WriteSampleJson(const SampleResult& result, const NodeMapping* ids, std::ostream& out) {
  out << SampleJson(result, ids) << '\n';
}

SampleResult ReadSampleJson(std::istream& in) {
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ParseError("sample file is not a JSON object", 0);
  const std::string where = "sample";
  SampleResult r;
  auto kind = ParseSamplerKind(internal::GetString(j, "sampler", where));
  if (!kind) throw ValidationError("sample: unknown sampler name");
  r.sampler = *kind;
  if (!j.contains("nodes") || !j["nodes"].is_array()) {
    throw ValidationError("sample: 'nodes' must be an array");
  }
  for (const Json& v : j["nodes"]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw ValidationError("sample: node ids must be non-negative integers");
    }
    r.nodes.push_back(static_cast<NodeId>(v.get<std::int64_t>()));
  }
  if (j.contains("provenance")) {
    for (const Json& v : j["provenance"]) {
      const std::string tag = v.is_string() ? v.get<std::string>() : "";
      if (tag == ProvenanceName(Provenance::kRwInit)) {
        r.provenance.push_back(Provenance::kRwInit);
      } else if (tag == ProvenanceName(Provenance::kCriterion)) {
        r.provenance.push_back(Provenance::kCriterion);
      } else if (tag == ProvenanceName(Provenance::kFallback)) {
        r.provenance.push_back(Provenance::kFallback);
      } else {
        throw ValidationError("sample: unknown provenance tag '" + tag + "'");
      }
    }
  }
  if (r.provenance.size() != r.nodes.size()) {
    throw ValidationError("sample: provenance and nodes differ in length");
  }
  if (j.contains("counters")) {
    const Json& c = j["counters"];
    r.counters.scored_candidates = internal::GetUnsigned(c, "scored_candidates", where);
    r.counters.leaderboard_evictions = internal::GetUnsigned(c, "leaderboard_evictions", where);
    r.counters.fallback_events = internal::GetUnsigned(c, "fallback_events", where);
    r.counters.walk_steps = internal::GetUnsigned(c, "walk_steps", where);
    r.counters.restarts = internal::GetUnsigned(c, "restarts", where);
    r.counters.rescored_pops = internal::GetUnsigned(c, "rescored_pops", where);
    r.counters.dangling_rejections = internal::GetUnsigned(c, "dangling_rejections", where);
  }
  if (j.contains("config")) r.config = internal::ConfigFromJson(j["config"], {}, where);
  return r;
}

void WriteSampleNodeList(const SampleResult& result, const NodeMapping* ids, std::ostream& out) {
  for (NodeId v : result.nodes) {
    out << (ids ? ids->to_full(v) : static_cast<std::int64_t>(v)) << '\n';
  }
}

}  // namespace graphsamp
