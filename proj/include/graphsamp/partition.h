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

#ifndef GRAPHSAMP_PARTITION_H_
#define GRAPHSAMP_PARTITION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphsamp/graph.h"

namespace graphsamp {

// Categorical label per node (SBM block, attribute region, ...). Nodes that
// were never assigned, including ids past size(), carry the reserved
// "unknown" label, which is a category of its own rather than a gap.
class LabeledPartition {
 public:
  static constexpr std::string_view kUnknown = "unknown";

  LabeledPartition() = default;
  // A partition over `n` nodes, all unknown.
  explicit LabeledPartition(std::size_t n);
  // codes[i] indexes `categories`; codes[i] < 0 marks node i unknown.
  LabeledPartition(std::vector<std::string> categories,
                   std::vector<std::int32_t> codes);

  // Assigns `label` to `node`, growing the partition if needed. Assigning
  // kUnknown clears the node.
  void Assign(NodeId node, const std::string& label);

  std::size_t size() const { return codes_.size(); }
  bool has_unknown() const;

  // Known categories in first-assignment order; never contains kUnknown.
  const std::vector<std::string>& categories() const { return categories_; }

  // categories() followed by kUnknown when has_unknown().
  std::vector<std::string> label_set() const;

  // Index into label_set(); unknown nodes map to categories().size().
  std::size_t code(NodeId node) const;
  bool is_unknown(NodeId node) const;
  std::string label(NodeId node) const;

  // Nodes (ascending) carrying category `c` (an index into categories()).
  std::vector<NodeId> members(std::size_t c) const;

  friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;

 private:
  std::vector<std::string> categories_;
  std::unordered_map<std::string, std::int32_t> index_;
  std::vector<std::int32_t> codes_;
};

// Re-keys a partition indexed by original ids onto the dense ids of
// `mapping`. Ids absent from `labels` become unknown.
LabeledPartition AlignToMapping(const LabeledPartition& labels,
                                const NodeMapping& mapping);

// Restricts a partition to `nodes` (nodes[k] becomes k), keeping the full
// category list.
LabeledPartition Restrict(const LabeledPartition& labels,
                          std::span<const NodeId> nodes);

}  // namespace graphsamp

#endif  // GRAPHSAMP_PARTITION_H_
