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

#ifndef GRAPHSAMP_SAMPLE_IO_H_
#define GRAPHSAMP_SAMPLE_IO_H_

#include <iosfwd>
#include <string>

#include "graphsamp/graph.h"
#include "graphsamp/samplers.h"

namespace graphsamp {

// JSON document with the sampler name, ordered node ids, provenance tags,
// counters, the resolved configuration and the walker constants. With
// `ids`, node ids (including seed nodes) are written as original ids.
void WriteSampleJson(const SampleResult& result, const NodeMapping* ids, std::ostream& out);
std::string SampleJson(const SampleResult& result, const NodeMapping* ids);

// Inverse of WriteSampleJson; ids are returned as stored. Throws ParseError
// or ValidationError on malformed documents.
SampleResult ReadSampleJson(std::istream& in);

// One node id per line, in admission order.
void WriteSampleNodeList(const SampleResult& result, const NodeMapping* ids, std::ostream& out);

}  // namespace graphsamp

#endif  // GRAPHSAMP_SAMPLE_IO_H_
