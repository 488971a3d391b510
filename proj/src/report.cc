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

#include "graphsamp/report.h"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>

#include "graphsamp/errors.h"
#include "json_convert.h"

namespace graphsamp {

namespace {

constexpr std::string_view kRawSuffix = ".raw.csv";

bool EndsWith(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::vector<std::filesystem::path> FindRawResults(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw ValidationError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && EndsWith(entry.path().filename().string(), kRawSuffix)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

Report BuildReport(const std::vector<std::filesystem::path>& files) {
  if (files.empty()) throw ValidationError("no result files to report on");
  Report report;
  std::vector<std::string> offending;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    try {
      auto rows = ReadRawCsv(in);
      report.files.push_back(path);
      report.rows.insert(report.rows.end(), std::make_move_iterator(rows.begin()),
                         std::make_move_iterator(rows.end()));
    } catch (const ParseError& e) {
      offending.push_back(path.string() + " (" + e.what() + ")");
    }
  }
  if (!offending.empty()) {
    std::string msg = "schema mismatch in " + std::to_string(offending.size()) + " file(s):";
    for (const auto& f : offending) msg += "\n  " + f;
    throw ValidationError(msg);
  }
  report.cells = Summarize(report.rows);
  return report;
}

void WriteReportJson(const Report& report, std::ostream& out) {
  using internal::Json;
  Json files = Json::array();
  for (const auto& f : report.files) files.push_back(f.filename().string());
  Json cells = Json::array();
  for (const CellSummary& c : report.cells) {
    const bool present = c.count > 0;
    cells.push_back({{"dataset", c.dataset},
                     {"sampler", c.sampler},
                     {"fraction", c.fraction},
                     {"measure", c.measure},
                     {"mean", present ? Json(c.mean) : Json(nullptr)},
                     {"std", present ? Json(c.std) : Json(nullptr)},
                     {"R", c.count}});
  }
  Json j;
  j["files"] = std::move(files);
  j["rows"] = report.rows.size();
  j["cells"] = std::move(cells);
  out << j.dump(2) << '\n';
}

}  // namespace graphsamp
