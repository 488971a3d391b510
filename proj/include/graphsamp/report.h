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

#ifndef GRAPHSAMP_REPORT_H_
#define GRAPHSAMP_REPORT_H_

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "graphsamp/experiment.h"

namespace graphsamp {

struct Report {
  // Inputs in the order they were merged.
  std::vector<std::filesystem::path> files;
  std::vector<RunRow> rows;
  std::vector<CellSummary> cells;
};

// Raw per-repetition files ("*.raw.csv") directly inside `dir`, sorted by
// file name.
std::vector<std::filesystem::path> FindRawResults(const std::filesystem::path& dir);

// Concatenates the rows of `files` and aggregates them. Files whose header
// or rows do not follow the raw schema are collected and reported together
// in one ValidationError.
Report BuildReport(const std::vector<std::filesystem::path>& files);

// JSON with the input file names and one object per cell.
void WriteReportJson(const Report& report, std::ostream& out);

}  // namespace graphsamp

#endif  // GRAPHSAMP_REPORT_H_
