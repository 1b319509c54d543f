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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "pomc/error.hpp"
#include "pomc/experiment.hpp"

namespace pomc {
namespace {

namespace fs = std::filesystem;

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.n = 16;
  cfg.density = 0.25;
  cfg.k = 2;
  cfg.repetitions = 3;
  cfg.intervals = {200, 50};
  cfg.m_changes = 7;
  cfg.batch_size = 3;
  return cfg;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pomc_experiment_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(MetadataTest, RoundTrip) {
  ExperimentConfig cfg = small_config();
  cfg.density = 0.1;
  cfg.sigma = 0.07;
  cfg.graph_seed = 11;
  cfg.schedule_seed = 12;
  cfg.run_seed_base = 13;
  cfg.greedy_stop = GreedyStop::kFillBudget;
  cfg.schedule_file = "levels.txt";
  std::stringstream ss;
  write_metadata(ss, cfg);
  const ExperimentConfig back = parse_metadata(ss);
  EXPECT_EQ(back.n, cfg.n);
  EXPECT_EQ(back.density, cfg.density);
  EXPECT_EQ(back.k, cfg.k);
  EXPECT_EQ(back.repetitions, cfg.repetitions);
  EXPECT_EQ(back.intervals, cfg.intervals);
  EXPECT_EQ(back.m_changes, cfg.m_changes);
  EXPECT_EQ(back.sigma, cfg.sigma);
  EXPECT_EQ(back.batch_size, cfg.batch_size);
  EXPECT_EQ(back.graph_seed, cfg.graph_seed);
  EXPECT_EQ(back.schedule_seed, cfg.schedule_seed);
  EXPECT_EQ(back.run_seed_base, cfg.run_seed_base);
  EXPECT_EQ(back.greedy_stop, cfg.greedy_stop);
  EXPECT_EQ(back.schedule_file, cfg.schedule_file);
}

TEST(ValidateTest, RejectsBadConfigs) {
  ExperimentConfig cfg = small_config();
  EXPECT_NO_THROW(validate(cfg));
  cfg.k = 3;
  EXPECT_THROW(validate(cfg), ContractError);
  cfg = small_config();
  cfg.density = 0.0;
  EXPECT_THROW(validate(cfg), ContractError);
  cfg = small_config();
  cfg.intervals = {};
  EXPECT_THROW(validate(cfg), ContractError);
  cfg = small_config();
  cfg.intervals = {5, 5};
  EXPECT_THROW(validate(cfg), ContractError);
  cfg = small_config();
  cfg.repetitions = 0;
  EXPECT_THROW(validate(cfg), ContractError);
  cfg = small_config();
  cfg.sigma = 0.0;
  EXPECT_THROW(validate(cfg), ContractError);
}

TEST(SimulateTest, ZeroIntervalSingleChange) {
  ExperimentConfig cfg = small_config();
  cfg.m_changes = 1;
  cfg.intervals = {0};
  const DynamicResult r = simulate_dynamic(cfg);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.levels.size(), 1u);
  for (double v : r.records[0].pomc_values) EXPECT_EQ(v, 0.0);
  EXPECT_GT(r.records[0].greedy_value, 0.0);
  EXPECT_EQ(r.changes[0].thresholds.size(), 2u);
}

TEST(SimulateTest, RecordsAreChangeMajorAscendingInterval) {
  const ExperimentConfig cfg = small_config();
  const DynamicResult r = simulate_dynamic(cfg);
  ASSERT_EQ(r.records.size(), cfg.m_changes * cfg.intervals.size());
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    EXPECT_EQ(r.records[i].change_index, i / 2 + 1);
    EXPECT_EQ(r.records[i].interval, i % 2 == 0 ? 50u : 200u);
    EXPECT_EQ(r.records[i].pomc_values.size(), cfg.repetitions);
  }
  ASSERT_EQ(r.table.size(), 3u);
  EXPECT_EQ(r.table[2].first_change, 7u);
}

TEST(SimulateTest, IndependentOfThreadCount) {
  ExperimentConfig cfg = small_config();
  cfg.threads = 1;
  const DynamicResult one = simulate_dynamic(cfg);
  cfg.threads = 4;
  const DynamicResult four = simulate_dynamic(cfg);
  std::stringstream a, b;
  write_table_csv(a, one.table, cfg.k, cfg.density);
  write_table_csv(b, four.table, cfg.k, cfg.density);
  EXPECT_EQ(a.str(), b.str());
  std::stringstream ja, jb;
  write_records_jsonl(ja, one);
  write_records_jsonl(jb, four);
  EXPECT_EQ(ja.str(), jb.str());
}

TEST(RunDynamicTest, WritesIdenticalFilesAcrossRuns) {
  ExperimentConfig cfg = small_config();
  const std::vector<std::string> names{"graph.txt", "schedule.txt", "records.jsonl", "table.csv",
                                       "metadata.txt"};
  cfg.output_dir = fresh_dir("a").string();
  run_dynamic_experiment(cfg);
  const std::string first = cfg.output_dir;
  cfg.output_dir = fresh_dir("b").string();
  run_dynamic_experiment(cfg);
  for (const auto& name : names) {
    ASSERT_TRUE(fs::exists(fs::path(first) / name)) << name;
    if (name == "metadata.txt") continue;
    EXPECT_EQ(slurp(fs::path(first) / name), slurp(fs::path(cfg.output_dir) / name)) << name;
  }
  for (const auto& entry : fs::directory_iterator(first)) {
    EXPECT_NE(entry.path().extension(), ".tmp");
  }
}

TEST(RunDynamicTest, MetadataReproducesRun) {
  ExperimentConfig cfg = small_config();
  cfg.output_dir = fresh_dir("meta").string();
  run_dynamic_experiment(cfg);
  std::ifstream in(fs::path(cfg.output_dir) / "metadata.txt");
  ExperimentConfig replay = parse_metadata(in);
  replay.output_dir = fresh_dir("meta_replay").string();
  run_dynamic_experiment(replay);
  EXPECT_EQ(slurp(fs::path(cfg.output_dir) / "table.csv"),
            slurp(fs::path(replay.output_dir) / "table.csv"));
}

TEST(RunDynamicTest, ScheduleFileOverridesGeneration) {
  ExperimentConfig cfg = small_config();
  cfg.output_dir = fresh_dir("sched").string();
  const DynamicResult base = run_dynamic_experiment(cfg);
  ExperimentConfig replay = small_config();
  replay.schedule_seed = 999;
  replay.schedule_file = (fs::path(cfg.output_dir) / "schedule.txt").string();
  const DynamicResult again = simulate_dynamic(replay);
  EXPECT_EQ(base.levels, again.levels);
  replay.m_changes = 8;
  EXPECT_THROW(simulate_dynamic(replay), ContractError);
}

TEST(RunDynamicTest, FailureLeavesNoFiles) {
  ExperimentConfig cfg = small_config();
  const fs::path dir = fresh_dir("fail");
  fs::create_directories(dir);
  // A directory squatting on a final name makes the rename fail.
  fs::create_directories(dir / "metadata.txt" / "blocker");
  cfg.output_dir = dir.string();
  EXPECT_ANY_THROW(run_dynamic_experiment(cfg));
  for (const auto& entry : fs::directory_iterator(dir)) {
    EXPECT_NE(entry.path().extension(), ".tmp") << entry.path();
  }
}

TEST(RecordsJsonlTest, RoundTrip) {
  const DynamicResult r = simulate_dynamic(small_config());
  std::stringstream ss;
  write_records_jsonl(ss, r);
  const std::vector<ChangeRecord> back = read_records_jsonl(ss);
  ASSERT_EQ(back.size(), r.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].change_index, r.records[i].change_index);
    EXPECT_EQ(back[i].interval, r.records[i].interval);
    EXPECT_EQ(back[i].greedy_value, r.records[i].greedy_value);
    EXPECT_EQ(back[i].pomc_values, r.records[i].pomc_values);
  }
  std::stringstream bad("{\"change\": 1}\n");
  EXPECT_THROW(read_records_jsonl(bad), ContractError);
}

TEST(TheoryCheckTest, BudgetsFollowFormula) {
  EXPECT_EQ(static_budget(10.0, 2, 10, 4), 2719u);  // ceil(2718.28)
  EXPECT_EQ(adapt_budget(10.0, 2, 4, 10, 8), 4893u);  // ceil(4892.91)
  EXPECT_EQ(adapt_budget(10.0, 3, 3, 10, 6), 0u);
}

TEST(TheoryCheckTest, SmallModularPasses) {
  TheoryConfig cfg;
  cfg.n = 8;
  cfg.seeds = 5;
  const TheoryReport r = run_theory_check(cfg);
  ASSERT_EQ(r.runs.size(), 5u);
  EXPECT_EQ(r.static_passes(ObjectiveKind::kSubmodular), 5u);
  EXPECT_EQ(r.static_passes(ObjectiveKind::kMonotone), 5u);
  EXPECT_EQ(r.adapted_passes(ObjectiveKind::kMonotone), 5u);
  EXPECT_GE(r.opt_star, r.opt_value);
  EXPECT_NE(to_json(r).find("\"summary\""), std::string::npos);
}

TEST(TheoryCheckTest, UnchangedThresholdDegeneratesToStatic) {
  TheoryConfig cfg;
  cfg.objective = TheoryObjective::kCoverage;
  cfg.n = 8;
  cfg.seeds = 4;
  cfg.raised_threshold = cfg.threshold;
  const TheoryReport r = run_theory_check(cfg);
  EXPECT_EQ(r.adapt_budget, 0u);
  EXPECT_EQ(r.opt_star, r.opt_value);
  for (ObjectiveKind kind : r.kinds) {
    EXPECT_GE(r.adapted_passes(kind), r.static_passes(kind));
  }
}

TEST(TheoryCheckTest, CutChecksOnlySubmodularKind) {
  TheoryConfig cfg;
  cfg.objective = TheoryObjective::kCut;
  cfg.n = 8;
  cfg.seeds = 2;
  const TheoryReport r = run_theory_check(cfg);
  ASSERT_EQ(r.kinds.size(), 1u);
  EXPECT_EQ(r.kinds[0], ObjectiveKind::kSubmodular);
  EXPECT_EQ(r.static_passes(ObjectiveKind::kMonotone), 0u);
}

TEST(TheoryCheckTest, ObjectiveNames) {
  for (TheoryObjective o :
       {TheoryObjective::kModular, TheoryObjective::kCoverage, TheoryObjective::kCut}) {
    EXPECT_EQ(parse_theory_objective(to_string(o)), o);
  }
  EXPECT_THROW(parse_theory_objective("linear"), ContractError);
}

}  // namespace
}  // namespace pomc
