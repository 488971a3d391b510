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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "graphsamp/cli.h"
#include "graphsamp/errors.h"
#include "graphsamp/experiment.h"
#include "graphsamp/report.h"

namespace graphsamp {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            ("graphsamp_" + std::string(info->test_suite_name()) + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string RawCsv(const RunResult& r) {
  std::ostringstream out;
  WriteRawCsv(r.rows, out);
  return out.str();
}

constexpr const char* kCommunitySpec = R"({
  "name": "toy",
  "kind": "community",
  "input": {"sbm": {"block_sizes": [60, 60, 80], "p_in": 0.1, "p_out": 0.01, "rng_seed": 3}},
  "samplers": ["full", "rw", "tcec", {"sampler": "xs", "label": "expansion"}],
  "fractions": [0.1, 0.2],
  "repetitions": 3,
  "seeds": [11, 12, 13]
})";

TEST(ExperimentSpecTest, DefaultsAndResolvedEchoRoundTrip) {
  ExperimentSpec spec = ParseExperimentSpec(kCommunitySpec);
  EXPECT_EQ(spec.kind, ExperimentKind::kCommunity);
  EXPECT_EQ(spec.start, StartPolicy::kSmallestBlock);
  EXPECT_EQ(spec.samplers.size(), 4u);
  EXPECT_FALSE(spec.samplers[0].kind.has_value());
  EXPECT_EQ(spec.samplers[3].label, "expansion");
  EXPECT_EQ(ParseExperimentSpec(ResolvedSpecJson(spec)), spec);

  ExperimentSpec bare = ParseExperimentSpec(
      R"({"input": {"edge_list": "g.txt"}, "samplers": ["rn"], "measures": ["pagerank"]})", "/data");
  EXPECT_EQ(bare.fractions, kDefaultFractions);
  EXPECT_EQ(bare.repetitions, 10u);
  EXPECT_EQ(bare.input.edge_list, "/data/g.txt");
  EXPECT_EQ(ParseExperimentSpec(ResolvedSpecJson(bare)), bare);
}

TEST(ExperimentSpecTest, Rejections) {
  EXPECT_THROW(ParseExperimentSpec(R"({"input": {}, "samplers": ["rn"], "bogus": 1})"),
               ValidationError);
  EXPECT_THROW(ParseExperimentSpec(R"({"input": {}, "samplers": ["nope"]})"), ValidationError);
  EXPECT_THROW(ParseExperimentSpec("{not json"), ParseError);
  ExperimentSpec spec = ParseExperimentSpec(kCommunitySpec);
  spec.fractions = {1.5};
  EXPECT_THROW(RunExperiment(spec), ValidationError);
  spec = ParseExperimentSpec(kCommunitySpec);
  spec.repetitions = 0;
  spec.seeds.clear();
  EXPECT_THROW(RunExperiment(spec), ValidationError);
}

TEST(ExperimentTest, CommunityRunIsDeterministicAcrossThreadCounts) {
  ExperimentSpec spec = ParseExperimentSpec(kCommunitySpec);
  const std::string one = RawCsv(RunExperiment(spec));
  spec.threads = 4;
  EXPECT_EQ(RawCsv(RunExperiment(spec)), one);
  EXPECT_EQ(one.substr(0, kRawCsvHeader.size()), kRawCsvHeader);
}

TEST(ExperimentTest, FullSamplerHasZeroKl) {
  ExperimentSpec spec = ParseExperimentSpec(kCommunitySpec);
  RunResult r = RunExperiment(spec);
  // 4 samplers x 2 fractions x 3 repetitions x 2 measures.
  EXPECT_EQ(r.rows.size(), 48u);
  for (const RunRow& row : r.rows) {
    ASSERT_TRUE(row.value.has_value());
    if (row.sampler == "full" && row.measure == "kl") EXPECT_NEAR(*row.value, 0.0, 1e-9);
  }
  EXPECT_EQ(r.resolved_configs[1].alpha, std::optional<double>(0.0));
}

TEST(ExperimentTest, FullSamplerAttributeRun) {
  ExperimentSpec spec = ParseExperimentSpec(R"({
    "name": "attr", "kind": "attribute",
    "input": {"sbm": {"block_sizes": [50, 50, 50], "p_in": 0.1, "p_out": 0.01, "rng_seed": 1},
              "attributes": {"noise": 0.1, "labels": ["r0", "r1", "r2"], "rng_seed": 2}},
    "samplers": ["full", "rw", "node2vec"],
    "fractions": [0.2],
    "repetitions": 2,
    "seed_regions": ["r0", "r2"]
  })");
  RunResult r = RunExperiment(spec);
  std::set<std::string> datasets;
  for (const RunRow& row : r.rows) {
    datasets.insert(row.dataset);
    if (row.sampler != "full") continue;
    if (row.measure == "kl") EXPECT_NEAR(*row.value, 0.0, 1e-9);
    if (row.measure == "entropy_ratio") EXPECT_NEAR(*row.value, 1.0, 1e-12);
  }
  EXPECT_EQ(datasets, (std::set<std::string>{"attr@r0", "attr@r2"}));
  spec.seed_regions = {"r9"};
  EXPECT_THROW(RunExperiment(spec), ValidationError);
}

TEST(ExperimentTest, RandomNodesAtFullFractionRecoverEveryRanking) {
  TempDir tmp;
  ExperimentSpec spec = ParseExperimentSpec(R"({
    "name": "cent", "kind": "centrality",
    "input": {"sbm": {"block_sizes": [40, 40], "p_in": 0.2, "p_out": 0.05, "directed": true}},
    "samplers": ["rn", "tcec"],
    "fractions": [1.0, 0.5],
    "measures": ["eigenvector", "pagerank", "indegree", "betweenness", "springrank"],
    "repetitions": 2
  })");
  ::setenv(kCacheDirEnv, tmp.path().c_str(), 1);
  RunResult first = RunExperiment(spec);
  RunResult cached = RunExperiment(spec);
  ::unsetenv(kCacheDirEnv);
  EXPECT_EQ(RawCsv(first), RawCsv(cached));
  EXPECT_FALSE(fs::is_empty(tmp.path()));
  for (const RunRow& row : first.rows) {
    if (row.fraction != 1.0) continue;
    ASSERT_TRUE(row.value.has_value()) << row.measure;
    EXPECT_NEAR(*row.value, 1.0, 1e-12) << row.sampler << " " << row.measure;
  }
}

TEST(ReportTest, SingleFilePassesThrough) {
  TempDir tmp;
  ExperimentSpec spec = ParseExperimentSpec(kCommunitySpec);
  RunResult r = RunExperiment(spec);
  WriteRunOutputs(r, tmp.path());
  Report report = BuildReport(FindRawResults(tmp.path()));
  std::ostringstream csv;
  WriteSummaryCsv(report.cells, csv);
  EXPECT_EQ(csv.str(), ReadFile(tmp.path() / "toy.summary.csv"));
  EXPECT_EQ(report.rows, r.rows);
}

TEST(ReportTest, TwoRepetitionsGiveMeanAndStd) {
  std::vector<RunRow> rows{{"d", "rw", 0.1, 0, "kl", 1.0},
                           {"d", "rw", 0.1, 1, "kl", 3.0},
                           {"d", "rw", 0.1, 2, "kl", std::nullopt}};
  auto cells = Summarize(rows);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_DOUBLE_EQ(cells[0].mean, 2.0);
  EXPECT_DOUBLE_EQ(cells[0].std, 1.0);
  EXPECT_EQ(cells[0].count, 2u);
  std::ostringstream raw;
  WriteRawCsv(rows, raw);
  std::istringstream back(raw.str());
  EXPECT_EQ(ReadRawCsv(back), rows);
}

TEST(ReportTest, MixedSchemasListEveryOffendingFile) {
  TempDir tmp;
  WriteFile(tmp.path() / "a.raw.csv", std::string(kRawCsvHeader) + "\nd,rw,0.1,0,kl,0.5\n");
  WriteFile(tmp.path() / "b.raw.csv", "sampler,value\nrw,1\n");
  WriteFile(tmp.path() / "c.raw.csv", "x,y,z\n");
  try {
    BuildReport(FindRawResults(tmp.path()));
    FAIL() << "expected a schema error";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_EQ(msg.find("a.raw.csv"), std::string::npos);
    EXPECT_NE(msg.find("b.raw.csv"), std::string::npos);
    EXPECT_NE(msg.find("c.raw.csv"), std::string::npos);
  }
}

struct CliOutput {
  int code;
  std::string out;
  std::string err;
};

CliOutput RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "graphsamp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(RunCli({}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"sample", "--sbm-blocks", "5", "-s", "bogus", "-m", "2"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"centrality", "--sbm-blocks", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, cli::kExitOk);
}

TEST(CliTest, RandomNodesWithFullSizeIsIdentity) {
  TempDir tmp;
  WriteFile(tmp.path() / "g.txt", "10 20\n20 30\n30 10\n40 10\n");
  auto r = RunCli({"sample", "-g", (tmp.path() / "g.txt").string(), "-s", "rn", "-m", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ids = Lines(r.out);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()),
            (std::set<std::string>{"10", "20", "30", "40"}));
  EXPECT_EQ(RunCli({"sample", "-g", (tmp.path() / "g.txt").string(), "-s", "rn", "-m", "5"}).code,
            cli::kExitFailure);
}

TEST(CliTest, SampleWritesNodeListAndJson) {
  TempDir tmp;
  const auto prefix = (tmp.path() / "s").string();
  auto r = RunCli({"sample", "--sbm-blocks", "3000,3000,4000", "--p-in", "0.05", "--p-out",
                   "0.005", "-s", "tcec", "-f", "0.1", "--seed", "1", "-o", prefix});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Lines(ReadFile(prefix + ".txt")).size(), 1000u);
  EXPECT_NE(ReadFile(prefix + ".json").find("\"provenance\""), std::string::npos);
}

TEST(CliTest, CentralityCsv) {
  TempDir tmp;
  WriteFile(tmp.path() / "two.txt", "1 2\n");
  auto r = RunCli({"centrality", "-g", (tmp.path() / "two.txt").string(), "-M", "pagerank"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "node_id,score");
  EXPECT_NEAR(std::stod(lines[1].substr(2)), 0.350877, 1e-6);
  EXPECT_NEAR(std::stod(lines[2].substr(2)), 0.649123, 1e-6);

  WriteFile(tmp.path() / "cycle.txt", "0 1\n1 2\n2 0\n");
  r = RunCli({"centrality", "-g", (tmp.path() / "cycle.txt").string(), "-M", "indegree"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "node_id,score\n0,1\n1,1\n2,1\n");
}

TEST(CliTest, ExactBetweennessRefusedOnLargeGraphs) {
  TempDir tmp;
  std::ofstream out(tmp.path() / "path.txt");
  for (std::size_t i = 0; i < kExactBetweennessMaxNodes + 5; ++i) out << i << ' ' << i + 1 << '\n';
  out.close();
  auto r = RunCli({"centrality", "-g", (tmp.path() / "path.txt").string(), "-M", "betweenness",
                   "--exact"});
  EXPECT_EQ(r.code, cli::kExitFailure);
  EXPECT_NE(r.err.find("pivots"), std::string::npos) << r.err;
}

TEST(CliTest, ExperimentAndReport) {
  TempDir tmp;
  WriteFile(tmp.path() / "spec.json", kCommunitySpec);
  auto run = RunCli({"experiment", "run", (tmp.path() / "spec.json").string(), "-o",
                     (tmp.path() / "out").string(), "-j", "2"});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_TRUE(fs::exists(tmp.path() / "out" / "toy.raw.csv"));
  EXPECT_TRUE(fs::exists(tmp.path() / "out" / "toy.json"));
  auto report = RunCli({"report", (tmp.path() / "out").string()});
  ASSERT_EQ(report.code, 0) << report.err;
  EXPECT_EQ(report.out, ReadFile(tmp.path() / "out" / "toy.summary.csv"));
  EXPECT_EQ(RunCli({"experiment", "run", (tmp.path() / "missing.json").string()}).code,
            cli::kExitUsage);
}

}  // namespace
}  // namespace graphsamp
