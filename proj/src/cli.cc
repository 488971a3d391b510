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

#include "graphsamp/cli.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphsamp/centrality.h"
#include "graphsamp/errors.h"
#include "graphsamp/experiment.h"
#include "graphsamp/graph_io.h"
#include "graphsamp/report.h"
#include "graphsamp/sample_io.h"
#include "graphsamp/samplers.h"
#include "graphsamp/synth.h"

namespace graphsamp::cli {

namespace {

struct GraphOptions {
  std::string path;
  bool undirected = false;
  std::vector<std::size_t> sbm_blocks;
  double p_in = 0.05;
  double p_out = 0.005;
  bool sbm_directed = false;
  std::uint64_t sbm_seed = 0;

  void Register(CLI::App* app) {
    auto* graph = app->add_option("-g,--graph", path, "Edge list (src dst [weight] per line)");
    auto* blocks = app->add_option("--sbm-blocks", sbm_blocks,
                                   "Generate an SBM with these block sizes instead")
                       ->delimiter(',');
    graph->excludes(blocks);
    app->add_flag("--undirected", undirected, "Treat the edge list as undirected");
    app->add_option("--p-in", p_in, "SBM within-block edge probability")->capture_default_str();
    app->add_option("--p-out", p_out, "SBM cross-block edge probability")->capture_default_str();
    app->add_flag("--sbm-directed", sbm_directed, "Draw a directed SBM");
    app->add_option("--sbm-seed", sbm_seed, "SBM random seed")->capture_default_str();
  }

  LoadedGraph Load() const {
    if (!sbm_blocks.empty()) {
      SbmGraph sbm = GenerateSbm({sbm_blocks, p_in, p_out, sbm_directed, sbm_seed});
      std::vector<std::int64_t> ids(sbm.graph.node_count());
      std::iota(ids.begin(), ids.end(), std::int64_t{0});
      return {std::move(sbm.graph), NodeMapping(std::move(ids))};
    }
    if (path.empty()) throw CLI::RequiredError("--graph or --sbm-blocks");
    return LoadEdgeList(path, !undirected);
  }
};

std::vector<std::string> SamplerNames() {
  std::vector<std::string> names;
  for (auto k : {SamplerKind::kRandomNode, SamplerKind::kRandomWalk, SamplerKind::kExpansion,
                 SamplerKind::kNode2Vec, SamplerKind::kTcec, SamplerKind::kTcpr}) {
    names.emplace_back(SamplerName(k));
  }
  return names;
}

std::vector<std::string> MeasureNames() {
  std::vector<std::string> names;
  for (auto m : {CentralityMeasure::kEigenvector, CentralityMeasure::kPageRank,
                 CentralityMeasure::kInDegree, CentralityMeasure::kBetweenness,
                 CentralityMeasure::kSpringRank}) {
    names.emplace_back(MeasureName(m));
  }
  return names;
}

std::ofstream OpenOutput(const std::filesystem::path& p) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  return out;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph sampling toolkit: crawl samplers, centrality and experiment runner",
               "graphsamp"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "Draw one sample from a graph");
  GraphOptions sample_graph;
  sample_graph.Register(sample);
  std::string sampler_name;
  std::optional<std::size_t> size;
  std::optional<double> fraction;
  std::optional<double> alpha;
  std::vector<std::int64_t> seed_nodes;
  std::string sample_out;
  SamplerConfig cfg;
  sample->add_option("-s,--sampler", sampler_name, "Sampler")
      ->required()
      ->check(CLI::IsMember(SamplerNames()));
  auto* size_opt = sample->add_option("-m,--size", size, "Number of nodes to sample");
  auto* frac_opt = sample->add_option("-f,--fraction", fraction, "Share of nodes to sample");
  size_opt->excludes(frac_opt);
  sample->add_option("--rw-init-fraction", cfg.rw_init_fraction)->capture_default_str();
  sample->add_option("--leaderboard", cfg.leaderboard_capacity, "Leaderboard capacity")
      ->capture_default_str();
  sample->add_option("--alpha", alpha, "In-sample in-degree weight (default 0 undirected, 0.5 directed)");
  sample->add_option("-p,--exploration-p", cfg.exploration_p)->capture_default_str();
  sample->add_option("--damping", cfg.damping)->capture_default_str();
  sample->add_option("--seed-node", seed_nodes, "Start node id (repeatable)");
  sample->add_option("--seed", cfg.rng_seed, "Random seed")->capture_default_str();
  sample->add_flag("--rescore-on-pop", cfg.rescore_on_pop);
  sample->add_flag("--tcpr-mix-in-degree", cfg.tcpr_mix_in_degree);
  sample->add_option("--node2vec-p", cfg.node2vec_p)->capture_default_str();
  sample->add_option("--node2vec-q", cfg.node2vec_q)->capture_default_str();
  sample->add_option("-o,--out", sample_out,
                     "Output prefix for <prefix>.txt and <prefix>.json (default: ids to stdout)");

  // centrality
  auto* centrality = app.add_subcommand("centrality", "Compute a centrality measure");
  GraphOptions centrality_graph;
  centrality_graph.Register(centrality);
  std::string measure_name;
  CentralityParams params;
  bool exact = false;
  std::string centrality_out;
  centrality->add_option("-M,--measure", measure_name, "Measure")
      ->required()
      ->check(CLI::IsMember(MeasureNames()));
  centrality->add_option("--damping", params.damping)->capture_default_str();
  centrality->add_option("--reg", params.spring_reg, "SpringRank regularisation")
      ->capture_default_str();
  centrality->add_option("--tol", params.tol, "Convergence tolerance (0: measure default)");
  centrality->add_option("--max-iter", params.max_iter)->capture_default_str();
  auto* pivots_opt =
      centrality->add_option("--pivots", params.pivots, "Betweenness pivot sources (0: exact)");
  centrality->add_option("--pivot-seed", params.pivot_seed)->capture_default_str();
  centrality->add_flag("--exact", exact, "Exact betweenness")->excludes(pivots_opt);
  centrality->add_option("-o,--out", centrality_out, "CSV path (default stdout)");

  // experiment run
  auto* experiment = app.add_subcommand("experiment", "Run declarative experiments");
  experiment->require_subcommand(1);
  auto* run = experiment->add_subcommand("run", "Run an experiment spec");
  std::string spec_path;
  std::string run_out;
  std::optional<std::size_t> threads;
  run->add_option("spec", spec_path, "Experiment spec (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("-o,--out", run_out, "Output directory (overrides the spec)");
  run->add_option("-j,--threads", threads, "Worker threads (overrides the spec)");

  // report
  auto* report = app.add_subcommand("report", "Aggregate raw experiment results");
  std::vector<std::string> inputs;
  std::string report_out;
  report->add_option("inputs", inputs, "Result directories or *.raw.csv files")->required();
  report->add_option("-o,--out", report_out,
                     "Output prefix for <prefix>.csv and <prefix>.json (default: CSV to stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sample) {
      LoadedGraph g = sample_graph.Load();
      const std::size_t n = g.graph.node_count();
      if (size) {
        cfg.target_size = *size;
      } else if (fraction) {
        if (!(*fraction > 0.0 && *fraction <= 1.0)) {
          err << "error: --fraction must lie in (0, 1]\n";
          return kExitUsage;
        }
        cfg.target_size = TargetSizeForFraction(*fraction, n);
      } else {
        err << "error: one of --size and --fraction is required\n";
        return kExitUsage;
      }
      cfg.alpha = alpha;
      for (std::int64_t id : seed_nodes) {
        auto sub = g.mapping.to_sub(id);
        if (!sub) throw ValidationError("seed node " + std::to_string(id) + " not in the graph");
        cfg.seed_nodes.push_back(*sub);
      }
      SampleResult result = Sample(*ParseSamplerKind(sampler_name), g.graph, cfg);
      if (sample_out.empty()) {
        WriteSampleNodeList(result, &g.mapping, out);
      } else {
        auto txt = OpenOutput(sample_out + ".txt");
        WriteSampleNodeList(result, &g.mapping, txt);
        auto json = OpenOutput(sample_out + ".json");
        WriteSampleJson(result, &g.mapping, json);
      }
    } else if (*centrality) {
      LoadedGraph g = centrality_graph.Load();
      if (exact) params.pivots = 0;
      CentralityVector c = ComputeCentrality(g.graph, *ParseMeasure(measure_name), params);
      if (!c.converged) {
        err << "warning: " << c.method << " did not converge (residual " << c.residual
            << " after " << c.iterations << " iterations)\n";
      }
      if (centrality_out.empty()) {
        WriteCentralityCsv(c, &g.mapping, out);
      } else {
        auto file = OpenOutput(centrality_out);
        WriteCentralityCsv(c, &g.mapping, file);
      }
    } else if (*run) {
      ExperimentSpec spec = LoadExperimentSpec(spec_path);
      if (!run_out.empty()) spec.output_dir = run_out;
      if (threads) spec.threads = *threads;
      RunResult result = RunExperiment(spec);
      WriteRunOutputs(result, spec.output_dir);
      out << "wrote " << (std::filesystem::path(spec.output_dir) / (spec.name + ".raw.csv")).string()
          << " (" << result.rows.size() << " rows)\n";
    } else if (*report) {
      std::vector<std::filesystem::path> files;
      for (const auto& in : inputs) {
        if (std::filesystem::is_directory(in)) {
          auto found = FindRawResults(in);
          files.insert(files.end(), found.begin(), found.end());
        } else {
          files.emplace_back(in);
        }
      }
      Report merged = BuildReport(files);
      if (report_out.empty()) {
        WriteSummaryCsv(merged.cells, out);
      } else {
        auto csv = OpenOutput(report_out + ".csv");
        WriteSummaryCsv(merged.cells, csv);
        auto json = OpenOutput(report_out + ".json");
        WriteReportJson(merged, json);
      }
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PartialResultError& e) {
    err << "error: " << e.what() << " (" << e.partial().nodes.size() << " nodes collected)\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace graphsamp::cli
