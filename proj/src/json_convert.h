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

#ifndef GRAPHSAMP_SRC_JSON_CONVERT_H_
#define GRAPHSAMP_SRC_JSON_CONVERT_H_

#include <string>

#include "graphsamp/graph.h"
#include "graphsamp/samplers.h"
#include "json.hpp"

namespace graphsamp::internal {

using Json = nlohmann::ordered_json;

// All SamplerConfig fields; alpha is null when unset. With `ids`, seed nodes
// are written as original ids.
Json ConfigToJson(const SamplerConfig& cfg, const NodeMapping* ids = nullptr);

// Overlays the keys present in `j` onto `base`. Unknown keys and ill-typed
// values raise ValidationError naming `where`.
SamplerConfig ConfigFromJson(const Json& j, SamplerConfig base, const std::string& where);

Json CountersToJson(const SampleCounters& c);

// Typed accessors that turn nlohmann type errors into ValidationError.
double GetNumber(const Json& j, const char* key, const std::string& where);
std::uint64_t GetUnsigned(const Json& j, const char* key, const std::string& where);
bool GetBool(const Json& j, const char* key, const std::string& where);
std::string GetString(const Json& j, const char* key, const std::string& where);

}  // namespace graphsamp::internal

#endif  // GRAPHSAMP_SRC_JSON_CONVERT_H_
