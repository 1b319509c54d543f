// Copyright 2026 The Authors.
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pomc/dynamics.hpp"
#include "pomc/error.hpp"
#include "pomc/experiment.hpp"
#include "pomc/maxcut.hpp"
#include "pomc/stats.hpp"
#include "pomc/text_io.hpp"

namespace {

using namespace pomc;

void add_config_flags(CLI::App* cmd, ExperimentConfig& cfg, std::string& greedy_stop) {
  cmd->add_option("--n", cfg.n, "number of vertices");
  cmd->add_option("--density", cfg.density, "edges = floor(density * n^2)");
  cmd->add_option("--k", cfg.k, "number of equal partition blocks");
  cmd->add_option("--repetitions", cfg.repetitions, "POMC runs per interval");
  cmd->add_option("--intervals", cfg.intervals, "evaluations between changes")->delimiter(',');
  cmd->add_option("--m-changes", cfg.m_changes, "number of threshold changes");
  cmd->add_option("--sigma", cfg.sigma, "standard deviation of the level walk");
  cmd->add_option("--batch-size", cfg.batch_size, "changes per table row");
  cmd->add_option("--seed-graph", cfg.graph_seed, "seed of the graph and partition");
  cmd->add_option("--seed-schedule", cfg.schedule_seed, "seed of the level walk");
  cmd->add_option("--seed-run", cfg.run_seed_base, "repetition r uses seed-run + r");
  cmd->add_option("--greedy-stop", greedy_stop, "positive-gain or fill-budget")
      ->check(CLI::IsMember({"positive-gain", "fill-budget"}));
  cmd->add_option("--schedule-file", cfg.schedule_file, "read levels instead of generating");
  cmd->add_option("--threads", cfg.threads, "worker threads, 0 for the OpenMP default");
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pareto optimization under dynamic partition matroid constraints"};
  app.require_subcommand(1);

  // gen-graph
  ExperimentConfig graph_cfg;
  std::string graph_out = "graph.txt";
  auto* gen_graph = app.add_subcommand("gen-graph", "generate a random weighted graph");
  gen_graph->add_option("--n", graph_cfg.n, "number of vertices");
  gen_graph->add_option("--density", graph_cfg.density, "edges = floor(density * n^2)");
  gen_graph->add_option("--seed-graph", graph_cfg.graph_seed, "generator seed")->required();
  gen_graph->add_option("-o,--output", graph_out, "output path, - for stdout");

  // gen-schedule
  ExperimentConfig sched_cfg;
  std::string sched_out = "schedule.txt";
  auto* gen_schedule = app.add_subcommand("gen-schedule", "generate a threshold level walk");
  gen_schedule->add_option("--m-changes", sched_cfg.m_changes, "number of levels");
  gen_schedule->add_option("--sigma", sched_cfg.sigma, "standard deviation of each step");
  gen_schedule->add_option("--seed-schedule", sched_cfg.schedule_seed, "generator seed")
      ->required();
  gen_schedule->add_option("-o,--output", sched_out, "output path, - for stdout");

  // run-dynamic
  ExperimentConfig run_cfg;
  std::string run_greedy_stop = to_string(run_cfg.greedy_stop);
  std::string from_metadata;
  auto* run_dynamic =
      app.add_subcommand("run-dynamic", "run GREEDY and POMC through a threshold schedule");
  add_config_flags(run_dynamic, run_cfg, run_greedy_stop);
  run_dynamic->add_option("--from-metadata", from_metadata,
                          "start from a metadata.txt; explicit flags still override");
  run_dynamic->add_option("-o,--output-dir", run_cfg.output_dir, "directory for all outputs");

  // theory-check
  TheoryConfig theory;
  std::string objective = to_string(theory.objective);
  std::string theory_out = "-";
  auto* theory_check = app.add_subcommand(
      "theory-check", "check approximation bounds by brute force on a small instance");
  theory_check->add_option("--objective", objective, "modular, coverage or cut")
      ->check(CLI::IsMember({"modular", "coverage", "cut"}));
  theory_check->add_option("--n", theory.n, "ground set size");
  theory_check->add_option("--k", theory.k, "number of equal partition blocks");
  theory_check->add_option("--threshold", theory.threshold, "every d_i before the change");
  theory_check->add_option("--raised-threshold", theory.raised_threshold,
                           "every d_i after the change");
  theory_check->add_option("--seeds", theory.seeds, "number of POMC runs");
  theory_check->add_option("--seed-instance", theory.instance_seed, "instance seed");
  theory_check->add_option("--seed-run", theory.run_seed_base, "run s uses seed-run + s");
  theory_check->add_option("--budget-factor", theory.budget_factor,
                           "multiplier of the expected evaluation budgets");
  theory_check->add_option("--threads", theory.threads, "worker threads");
  theory_check->add_option("-o,--output", theory_out, "JSON report path, - for stdout");

  // aggregate
  std::string records_path;
  std::string table_out = "-";
  std::size_t batch_size = 50;
  double alpha = 0.05;
  std::size_t agg_k = 1;
  double agg_density = 0.05;
  auto* aggregate = app.add_subcommand("aggregate", "rebuild the batch table from records");
  aggregate->add_option("records", records_path, "records.jsonl")->required();
  aggregate->add_option("--batch-size", batch_size, "changes per row");
  aggregate->add_option("--alpha", alpha, "significance level of the sign test");
  aggregate->add_option("--k", agg_k, "k column value");
  aggregate->add_option("--density", agg_density, "density column value");
  aggregate->add_option("-o,--output", table_out, "CSV path, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_graph) {
      std::mt19937_64 rng(graph_cfg.graph_seed);
      const WeightedGraph g = generate_graph(graph_cfg.n, graph_cfg.density, rng);
      std::ostringstream out;
      write_graph(out, g);
      write_file(graph_out, out.str());
    } else if (*gen_schedule) {
      require(sched_cfg.m_changes >= 1, "m-changes must be at least 1");
      require(sched_cfg.sigma > 0.0, "sigma must be positive");
      std::mt19937_64 rng(sched_cfg.schedule_seed);
      std::ostringstream out;
      write_levels(out, generate_levels(sched_cfg.m_changes, sched_cfg.sigma, rng));
      write_file(sched_out, out.str());
    } else if (*run_dynamic) {
      ExperimentConfig cfg = run_cfg;
      if (!from_metadata.empty()) {
        std::ifstream in(from_metadata);
        require(static_cast<bool>(in), "cannot read " + from_metadata);
        cfg = parse_metadata(in);
        // Flags given on the command line win over the file.
        for (const CLI::Option* opt : run_dynamic->get_options()) {
          if (opt->count() == 0) continue;
          const std::string name = opt->get_name();
          if (name == "--n") cfg.n = run_cfg.n;
          if (name == "--density") cfg.density = run_cfg.density;
          if (name == "--k") cfg.k = run_cfg.k;
          if (name == "--repetitions") cfg.repetitions = run_cfg.repetitions;
          if (name == "--intervals") cfg.intervals = run_cfg.intervals;
          if (name == "--m-changes") cfg.m_changes = run_cfg.m_changes;
          if (name == "--sigma") cfg.sigma = run_cfg.sigma;
          if (name == "--batch-size") cfg.batch_size = run_cfg.batch_size;
          if (name == "--seed-graph") cfg.graph_seed = run_cfg.graph_seed;
          if (name == "--seed-schedule") cfg.schedule_seed = run_cfg.schedule_seed;
          if (name == "--seed-run") cfg.run_seed_base = run_cfg.run_seed_base;
          if (name == "--greedy-stop") cfg.greedy_stop = parse_greedy_stop(run_greedy_stop);
          if (name == "--schedule-file") cfg.schedule_file = run_cfg.schedule_file;
        }
        cfg.output_dir = run_cfg.output_dir;
        cfg.threads = run_cfg.threads;
      } else {
        for (const char* seed : {"--seed-graph", "--seed-schedule", "--seed-run"}) {
          require(run_dynamic->count(seed) > 0,
                  std::string(seed) + " is required unless --from-metadata is given");
        }
        cfg.greedy_stop = parse_greedy_stop(run_greedy_stop);
      }
      const DynamicResult r = run_dynamic_experiment(cfg);
      std::cerr << "wrote " << r.records.size() << " records for " << r.changes.size()
                << " changes to " << cfg.output_dir << '\n';
    } else if (*theory_check) {
      theory.objective = parse_theory_objective(objective);
      const TheoryReport report = run_theory_check(theory);
      write_file(theory_out, to_json(report) + "\n");
      for (ObjectiveKind kind : report.kinds) {
        std::cerr << to_string(kind) << ": static " << report.static_passes(kind) << '/'
                  << report.runs.size() << ", adapted " << report.adapted_passes(kind) << '/'
                  << report.runs.size() << '\n';
      }
    } else if (*aggregate) {
      std::ifstream in(records_path);
      require(static_cast<bool>(in), "cannot read " + records_path);
      const std::vector<ChangeRecord> records = read_records_jsonl(in);
      std::ostringstream out;
      write_table_csv(out, aggregate_batches(records, batch_size, alpha), agg_k, agg_density);
      write_file(table_out, out.str());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
