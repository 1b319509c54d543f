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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "pomc/greedy.hpp"
#include "pomc/matroid.hpp"
#include "pomc/maxcut.hpp"
#include "pomc/metrics.hpp"
#include "pomc/stats.hpp"

namespace pomc {

struct ExperimentConfig {
  std::size_t n = 200;
  double density = 0.05;
  std::size_t k = 1;
  std::size_t repetitions = 30;
  std::vector<std::uint64_t> intervals{5000, 10000, 20000};
  std::size_t m_changes = 200;
  double sigma = 0.05;
  std::size_t batch_size = 50;
  std::uint64_t graph_seed = 1;
  std::uint64_t schedule_seed = 2;
  std::uint64_t run_seed_base = 1000;
  GreedyStop greedy_stop = GreedyStop::kPositiveGain;
  std::string schedule_file;  // when set, levels are read from it instead of generated
  std::string output_dir = ".";
  int threads = 0;  // 0 = OpenMP default; results do not depend on it
};

// Throws ContractError describing the first invalid field.
void validate(const ExperimentConfig& cfg);

// key=value lines; parse_metadata(write_metadata(cfg)) reproduces cfg.
void write_metadata(std::ostream& out, const ExperimentConfig& cfg);
ExperimentConfig parse_metadata(std::istream& in);

// The max-cut graph plus a random equal-size partition of its vertices.
struct DynamicInstance {
  MaxCut objective;
  PartitionMatroid matroid;  // thresholds set for level 1.0
};

// Graph and partition both come from one stream seeded with graph_seed.
DynamicInstance make_dynamic_instance(const ExperimentConfig& cfg);
std::vector<double> make_levels(const ExperimentConfig& cfg);

struct ChangeLog {
  std::size_t change_index = 0;
  double level = 0.0;
  std::vector<int> thresholds;
  double greedy_value = 0.0;
  std::uint64_t greedy_evals = 0;
};

struct DynamicResult {
  std::vector<double> levels;
  std::vector<ChangeLog> changes;
  std::vector<ChangeRecord> records;  // change-major, then ascending interval
  std::vector<BatchRow> table;
};

// Runs GREEDY with restart and every (interval, repetition) POMC trajectory
// through all changes. Replications run in parallel.
DynamicResult simulate_dynamic(const ExperimentConfig& cfg);

// simulate_dynamic plus graph.txt, schedule.txt, records.jsonl, table.csv and
// metadata.txt under cfg.output_dir. Nothing is left behind on failure.
DynamicResult run_dynamic_experiment(const ExperimentConfig& cfg);

void write_records_jsonl(std::ostream& out, const DynamicResult& result);
std::vector<ChangeRecord> read_records_jsonl(std::istream& in);

enum class TheoryObjective { kModular, kCoverage, kCut };
const char* to_string(TheoryObjective o);
TheoryObjective parse_theory_objective(const std::string& name);

struct TheoryConfig {
  TheoryObjective objective = TheoryObjective::kModular;
  std::size_t n = 10;
  std::size_t k = 2;
  int threshold = 2;         // every d_i before the change
  int raised_threshold = 4;  // every d_i after the change
  std::size_t seeds = 30;
  std::uint64_t instance_seed = 1;
  std::uint64_t run_seed_base = 1;
  double budget_factor = 10.0;
  int threads = 0;
};

struct AdaptedCheck {
  ObjectiveKind kind = ObjectiveKind::kSubmodular;
  double best_value = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct TheoryRun {
  std::uint64_t seed = 0;
  std::vector<GuaranteeReport> static_reports;  // one per applicable kind
  std::vector<AdaptedCheck> adapted_checks;
  std::uint64_t evaluations = 0;
};

struct TheoryReport {
  TheoryConfig config;
  std::vector<ObjectiveKind> kinds;
  double opt_value = 0.0;
  double opt_star = 0.0;
  std::uint64_t static_budget = 0;
  std::uint64_t adapt_budget = 0;
  std::vector<TheoryRun> runs;

  std::size_t static_passes(ObjectiveKind kind) const;
  std::size_t adapted_passes(ObjectiveKind kind) const;
};

// ceil(factor * e * d_bar * n * (d + 1))
std::uint64_t static_budget(double factor, int d_bar, std::size_t n, int d);
// ceil(factor * e * (d_bar_star - d_bar) * n * (d_star + 1))
std::uint64_t adapt_budget(double factor, int d_bar, int d_bar_star, std::size_t n, int d_star);

struct TheoryInstance {
  std::unique_ptr<SetFunction> objective;
  PartitionMatroid matroid;  // thresholds = cfg.threshold
  std::vector<ObjectiveKind> kinds;  // guarantees that apply to the objective
};

// Random objective and equal-size random partition, both from instance_seed.
// Modular weights and coverage item weights are small integers so that the
// brute-force quantities are exact.
TheoryInstance make_theory_instance(const TheoryConfig& cfg);

// Brute-forces OPT, OPT*, epsilon and gamma, then runs POMC per seed for the
// static budget, checks the population guarantee, raises the thresholds and
// checks the adapted bound after the adaptation budget.
TheoryReport run_theory_check(const TheoryConfig& cfg);

std::string to_json(const TheoryReport& report);

}  // namespace pomc
