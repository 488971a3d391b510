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

#include "graphsamp/partition.h"

#include <algorithm>

#include "graphsamp/errors.h"

namespace graphsamp {

LabeledPartition::LabeledPartition(std::size_t n) : codes_(n, -1) {}

LabeledPartition::LabeledPartition(std::vector<std::string> categories,
                                   std::vector<std::int32_t> codes)
    : categories_(std::move(categories)), codes_(std::move(codes)) {
  for (std::size_t c = 0; c < categories_.size(); ++c) {
    if (categories_[c] == kUnknown) {
      throw ValidationError("category name 'unknown' is reserved");
    }
    if (!index_.emplace(categories_[c], static_cast<std::int32_t>(c)).second) {
      throw ValidationError("duplicate category '" + categories_[c] + "'");
    }
  }
  for (std::int32_t& code : codes_) {
    if (code >= static_cast<std::int32_t>(categories_.size())) {
      throw ValidationError("category code out of range");
    }
    if (code < 0) code = -1;
  }
}

void LabeledPartition::Assign(NodeId node, const std::string& label) {
  if (node >= codes_.size()) codes_.resize(static_cast<std::size_t>(node) + 1, -1);
  if (label == kUnknown) {
    codes_[node] = -1;
    return;
  }
  auto [it, inserted] =
      index_.emplace(label, static_cast<std::int32_t>(categories_.size()));
  if (inserted) categories_.push_back(label);
  codes_[node] = it->second;
}

bool LabeledPartition::has_unknown() const {
  return std::any_of(codes_.begin(), codes_.end(), [](std::int32_t c) { return c < 0; });
}

std::vector<std::string> LabeledPartition::label_set() const {
  std::vector<std::string> out = categories_;
  if (has_unknown()) out.emplace_back(kUnknown);
  return out;
}

std::size_t LabeledPartition::code(NodeId node) const {
  if (node >= codes_.size() || codes_[node] < 0) return categories_.size();
  return static_cast<std::size_t>(codes_[node]);
}

bool LabeledPartition::is_unknown(NodeId node) const {
  return code(node) == categories_.size();
}

std::string LabeledPartition::label(NodeId node) const {
  std::size_t c = code(node);
  return c == categories_.size() ? std::string(kUnknown) : categories_[c];
}

std::vector<NodeId> LabeledPartition::members(std::size_t c) const {
  std::vector<NodeId> out;
  for (NodeId i = 0; i < codes_.size(); ++i) {
    if (codes_[i] == static_cast<std::int32_t>(c)) out.push_back(i);
  }
  return out;
}

LabeledPartition AlignToMapping(const LabeledPartition& labels,
                                const NodeMapping& mapping) {
  std::vector<std::int32_t> codes(mapping.size(), -1);
  for (NodeId k = 0; k < mapping.size(); ++k) {
    std::int64_t full = mapping.to_full(k);
    if (full >= 0 && static_cast<std::uint64_t>(full) < labels.size() &&
        !labels.is_unknown(static_cast<NodeId>(full))) {
      codes[k] = static_cast<std::int32_t>(labels.code(static_cast<NodeId>(full)));
    }
  }
  return LabeledPartition(labels.categories(), std::move(codes));
}

LabeledPartition Restrict(const LabeledPartition& labels,
                          std::span<const NodeId> nodes) {
  std::vector<std::int32_t> codes(nodes.size(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (!labels.is_unknown(nodes[k])) {
      codes[k] = static_cast<std::int32_t>(labels.code(nodes[k]));
    }
  }
  return LabeledPartition(labels.categories(), std::move(codes));
}

}  // namespace graphsamp
