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

#include "pomc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "pomc/dynamics.hpp"
#include "pomc/error.hpp"
#include "pomc/pomc.hpp"
#include "pomc/text_io.hpp"

namespace pomc {

namespace {

int thread_count(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

// Runs body(i) for i in [0, count) on `threads` threads and rethrows the
// first exception raised by any iteration.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body body) {
  std::exception_ptr failure;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(pomc_parallel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<std::uint64_t> sorted_intervals(const ExperimentConfig& cfg) {
  std::vector<std::uint64_t> v = cfg.intervals;
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::size_t> shuffled_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  require(cfg.n >= 2, "n must be at least 2");
  require(cfg.k >= 1 && cfg.n % cfg.k == 0, "k must divide n");
  require(cfg.density > 0.0 && cfg.density <= 1.0, "density must lie in (0, 1]");
  require(edge_target(cfg.n, cfg.density) <= cfg.n * (cfg.n - 1) / 2,
          "density too large for distinct vertex pairs");
  require(cfg.repetitions >= 1, "repetitions must be at least 1");
  require(!cfg.intervals.empty(), "at least one interval is required");
  const auto intervals = sorted_intervals(cfg);
  require(std::adjacent_find(intervals.begin(), intervals.end()) == intervals.end(),
          "intervals must be distinct");
  require(cfg.m_changes >= 1, "m_changes must be at least 1");
  require(cfg.sigma > 0.0, "sigma must be positive");
  require(cfg.batch_size >= 1, "batch_size must be at least 1");
}

void write_metadata(std::ostream& out, const ExperimentConfig& cfg) {
  out << "# run-dynamic configuration; feed back with --from-metadata\n"
      << "n=" << cfg.n << '\n'
      << "density=" << format_double(cfg.density) << '\n'
      << "k=" << cfg.k << '\n'
      << "repetitions=" << cfg.repetitions << '\n'
      << "intervals=" << join(cfg.intervals) << '\n'
      << "m_changes=" << cfg.m_changes << '\n'
      << "sigma=" << format_double(cfg.sigma) << '\n'
      << "batch_size=" << cfg.batch_size << '\n'
      << "graph_seed=" << cfg.graph_seed << '\n'
      << "schedule_seed=" << cfg.schedule_seed << '\n'
      << "run_seed_base=" << cfg.run_seed_base << '\n'
      << "greedy_stop=" << to_string(cfg.greedy_stop) << '\n'
      << "schedule_file=" << cfg.schedule_file << '\n'
      << "# informational\n"
      << "rng=std::mt19937_64\n"
      << "distributions=libstdc++ uniform_real/normal/bernoulli/uniform_int\n"
      << "graph_stream=graph_seed (edges, weights, then partition shuffle)\n"
      << "schedule_stream=schedule_seed\n"
      << "run_stream=run_seed_base + repetition index\n";
}

ExperimentConfig parse_metadata(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, "metadata line without '=': " + line);
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "n") {
      cfg.n = parse_unsigned(value);
    } else if (key == "density") {
      cfg.density = parse_double(value);
    } else if (key == "k") {
      cfg.k = parse_unsigned(value);
    } else if (key == "repetitions") {
      cfg.repetitions = parse_unsigned(value);
    } else if (key == "intervals") {
      cfg.intervals.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.intervals.push_back(parse_unsigned(item));
    } else if (key == "m_changes") {
      cfg.m_changes = parse_unsigned(value);
    } else if (key == "sigma") {
      cfg.sigma = parse_double(value);
    } else if (key == "batch_size") {
      cfg.batch_size = parse_unsigned(value);
    } else if (key == "graph_seed") {
      cfg.graph_seed = parse_unsigned(value);
    } else if (key == "schedule_seed") {
      cfg.schedule_seed = parse_unsigned(value);
    } else if (key == "run_seed_base") {
      cfg.run_seed_base = parse_unsigned(value);
    } else if (key == "greedy_stop") {
      cfg.greedy_stop = parse_greedy_stop(value);
    } else if (key == "schedule_file") {
      cfg.schedule_file = value;
    }
  }
  return cfg;
}

DynamicInstance make_dynamic_instance(const ExperimentConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.graph_seed);
  WeightedGraph g = generate_graph(cfg.n, cfg.density, rng);
  const auto order = shuffled_order(cfg.n, rng);
  std::vector<int> full(cfg.k, static_cast<int>(cfg.n / cfg.k));
  return DynamicInstance{MaxCut(std::move(g)),
                         PartitionMatroid::equal_blocks(order, cfg.k, std::move(full))};
}

std::vector<double> make_levels(const ExperimentConfig& cfg) {
  if (!cfg.schedule_file.empty()) {
    std::vector<double> levels = load_levels(cfg.schedule_file);
    require(levels.size() >= cfg.m_changes,
            "schedule file holds fewer than m_changes levels");
    levels.resize(cfg.m_changes);
    return levels;
  }
  std::mt19937_64 rng(cfg.schedule_seed);
  return generate_levels(cfg.m_changes, cfg.sigma, rng);
}

DynamicResult simulate_dynamic(const ExperimentConfig& cfg) {
  validate(cfg);
  const DynamicInstance instance = make_dynamic_instance(cfg);
  DynamicResult result;
  result.levels = make_levels(cfg);
  const std::size_t changes = result.levels.size();

  std::vector<std::vector<int>> thresholds(changes);
  for (std::size_t j = 0; j < changes; ++j) {
    thresholds[j] = thresholds_at(result.levels[j], instance.matroid);
  }

  const int threads = thread_count(cfg.threads);
  result.changes.resize(changes);
  parallel_for(changes, threads, [&](std::size_t j) {
    PartitionMatroid m = instance.matroid;
    m.set_thresholds(thresholds[j]);
    Oracle oracle(instance.objective);
    const GreedyResult g = greedy_solve(oracle, m, cfg.greedy_stop);
    result.changes[j] =
        ChangeLog{j + 1, result.levels[j], thresholds[j], g.value, oracle.eval_count()};
  });

  const auto intervals = sorted_intervals(cfg);
  const std::size_t trajectories = intervals.size() * cfg.repetitions;
  // best[trajectory][change]
  std::vector<std::vector<double>> best(trajectories, std::vector<double>(changes));
  parallel_for(trajectories, threads, [&](std::size_t t) {
    const std::uint64_t interval = intervals[t / cfg.repetitions];
    const std::size_t rep = t % cfg.repetitions;
    PartitionMatroid m = instance.matroid;
    m.set_thresholds(thresholds[0]);
    Pomc pomc(instance.objective, std::move(m), cfg.run_seed_base + rep);
    for (std::size_t j = 0; j < changes; ++j) {
      if (j > 0) pomc.on_change(thresholds[j]);
      pomc.run(interval);
      best[t][j] = pomc.best_feasible().raw;
    }
  });

  for (std::size_t j = 0; j < changes; ++j) {
    for (std::size_t ii = 0; ii < intervals.size(); ++ii) {
      ChangeRecord r;
      r.change_index = j + 1;
      r.interval = intervals[ii];
      r.greedy_value = result.changes[j].greedy_value;
      for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
        r.pomc_values.push_back(best[ii * cfg.repetitions + rep][j]);
      }
      result.records.push_back(std::move(r));
    }
  }
  result.table = aggregate_batches(result.records, cfg.batch_size);
  return result;
}

void write_records_jsonl(std::ostream& out, const DynamicResult& result) {
  std::map<std::size_t, const ChangeLog*> logs;
  for (const ChangeLog& c : result.changes) logs[c.change_index] = &c;
  for (const ChangeRecord& r : result.records) {
    const ChangeLog& c = *logs.at(r.change_index);
    nlohmann::json line{{"change", r.change_index},
                        {"level", c.level},
                        {"thresholds", c.thresholds},
                        {"greedy_value", r.greedy_value},
                        {"greedy_evals", c.greedy_evals},
                        {"interval", r.interval},
                        {"pomc_values", r.pomc_values}};
    out << line.dump() << '\n';
  }
}

std::vector<ChangeRecord> read_records_jsonl(std::istream& in) {
  std::vector<ChangeRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      ChangeRecord r;
      r.change_index = j.at("change").get<std::size_t>();
      r.interval = j.at("interval").get<std::uint64_t>();
      r.greedy_value = j.at("greedy_value").get<double>();
      r.pomc_values = j.at("pomc_values").get<std::vector<double>>();
      records.push_back(std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw ContractError("records line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

DynamicResult run_dynamic_experiment(const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  DynamicResult result = simulate_dynamic(cfg);
  const DynamicInstance instance = make_dynamic_instance(cfg);

  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  const std::vector<std::string> names{"graph.txt", "schedule.txt", "records.jsonl", "table.csv",
                                       "metadata.txt"};
  auto tmp = [&](const std::string& name) { return dir / (name + ".tmp"); };
  try {
    auto open = [&](const std::string& name) {
      std::ofstream out(tmp(name));
      require(static_cast<bool>(out), "cannot write " + tmp(name).string());
      return out;
    };
    {
      auto out = open("graph.txt");
      write_graph(out, instance.objective.graph());
    }
    {
      auto out = open("schedule.txt");
      write_levels(out, result.levels);
    }
    {
      auto out = open("records.jsonl");
      write_records_jsonl(out, result);
    }
    {
      auto out = open("table.csv");
      write_table_csv(out, result.table, cfg.k, cfg.density);
    }
    {
      auto out = open("metadata.txt");
      write_metadata(out, cfg);
    }
    for (const auto& name : names) fs::rename(tmp(name), dir / name);
  } catch (...) {
    std::error_code ec;
    for (const auto& name : names) fs::remove(tmp(name), ec);
    throw;
  }
  return result;
}

const char* to_string(TheoryObjective o) {
  switch (o) {
    case TheoryObjective::kModular:
      return "modular";
    case TheoryObjective::kCoverage:
      return "coverage";
    case TheoryObjective::kCut:
      return "cut";
  }
  return "?";
}

TheoryObjective parse_theory_objective(const std::string& name) {
  if (name == "modular") return TheoryObjective::kModular;
  if (name == "coverage") return TheoryObjective::kCoverage;
  if (name == "cut") return TheoryObjective::kCut;
  throw ContractError("unknown objective: " + name);
}

std::uint64_t static_budget(double factor, int d_bar, std::size_t n, int d) {
  return static_cast<std::uint64_t>(
      std::ceil(factor * std::numbers::e * d_bar * static_cast<double>(n) * (d + 1)));
}

std::uint64_t adapt_budget(double factor, int d_bar, int d_bar_star, std::size_t n, int d_star) {
  if (d_bar_star <= d_bar) return 0;
  return static_cast<std::uint64_t>(std::ceil(factor * std::numbers::e * (d_bar_star - d_bar) *
                                              static_cast<double>(n) * (d_star + 1)));
}

TheoryInstance make_theory_instance(const TheoryConfig& cfg) {
  require(cfg.k >= 1 && cfg.n % cfg.k == 0, "k must divide n");
  const int block = static_cast<int>(cfg.n / cfg.k);
  require(cfg.threshold >= 1 && cfg.threshold <= cfg.raised_threshold &&
              cfg.raised_threshold <= block,
          "need 1 <= threshold <= raised_threshold <= n/k");
  std::mt19937_64 rng(cfg.instance_seed);
  TheoryInstance inst{nullptr, PartitionMatroid::uniform(cfg.n, 1), {}};
  switch (cfg.objective) {
    case TheoryObjective::kModular: {
      std::uniform_int_distribution<int> w(1, 20);
      std::vector<double> weights(cfg.n);
      for (double& x : weights) x = w(rng);
      inst.objective = std::make_unique<ModularFunction>(std::move(weights));
      inst.kinds = {ObjectiveKind::kSubmodular, ObjectiveKind::kMonotone};
      break;
    }
    case TheoryObjective::kCoverage: {
      const std::size_t items = 2 * cfg.n;
      std::uniform_int_distribution<int> w(1, 10);
      std::uniform_int_distribution<std::size_t> how_many(1, 4);
      std::uniform_int_distribution<std::size_t> which(0, items - 1);
      std::vector<double> item_weights(items);
      for (double& x : item_weights) x = w(rng);
      std::vector<std::vector<std::size_t>> covers(cfg.n);
      for (auto& c : covers) {
        const std::size_t count = how_many(rng);
        while (c.size() < count) {
          const std::size_t item = which(rng);
          if (std::find(c.begin(), c.end(), item) == c.end()) c.push_back(item);
        }
      }
      inst.objective =
          std::make_unique<CoverageFunction>(std::move(covers), std::move(item_weights));
      inst.kinds = {ObjectiveKind::kSubmodular, ObjectiveKind::kMonotone};
      break;
    }
    case TheoryObjective::kCut: {
      inst.objective = std::make_unique<MaxCut>(generate_graph(cfg.n, 0.3, rng));
      inst.kinds = {ObjectiveKind::kSubmodular};
      break;
    }
  }
  const auto order = shuffled_order(cfg.n, rng);
  inst.matroid = PartitionMatroid::equal_blocks(order, cfg.k,
                                                std::vector<int>(cfg.k, cfg.threshold));
  return inst;
}

std::size_t TheoryReport::static_passes(ObjectiveKind kind) const {
  std::size_t count = 0;
  for (const TheoryRun& r : runs) {
    for (const GuaranteeReport& g : r.static_reports) count += (g.kind == kind && g.pass);
  }
  return count;
}

std::size_t TheoryReport::adapted_passes(ObjectiveKind kind) const {
  std::size_t count = 0;
  for (const TheoryRun& r : runs) {
    for (const AdaptedCheck& a : r.adapted_checks) count += (a.kind == kind && a.pass);
  }
  return count;
}

TheoryReport run_theory_check(const TheoryConfig& cfg) {
  require(cfg.seeds >= 1, "need at least one seed");
  require(cfg.budget_factor > 0.0, "budget factor must be positive");
  const TheoryInstance inst = make_theory_instance(cfg);
  const SetFunction& f = *inst.objective;
  const PartitionMatroid& before = inst.matroid;
  PartitionMatroid after = before;
  after.set_thresholds(std::vector<int>(cfg.k, cfg.raised_threshold));

  const bool want_submodular =
      std::find(inst.kinds.begin(), inst.kinds.end(), ObjectiveKind::kSubmodular) !=
      inst.kinds.end();
  const bool want_monotone =
      std::find(inst.kinds.begin(), inst.kinds.end(), ObjectiveKind::kMonotone) !=
      inst.kinds.end();

  TheoryReport report;
  report.config = cfg;
  report.kinds = inst.kinds;
  report.opt_value = brute_force_opt(f, before).value;
  report.opt_star = brute_force_opt(f, after).value;

  InstanceParams params;
  params.d = before.total();
  params.d_bar = before.min_threshold();
  params.opt_value = report.opt_value;
  if (want_submodular) params.epsilon = monotonicity_terms(f);
  if (want_monotone) params.gamma = submodularity_ratio_table(f);

  const int d_star = after.total();
  const int d_bar_star = after.min_threshold();
  report.static_budget = static_budget(cfg.budget_factor, params.d_bar, cfg.n, params.d);
  report.adapt_budget = adapt_budget(cfg.budget_factor, params.d_bar, d_bar_star, cfg.n, d_star);

  report.runs.resize(cfg.seeds);
  parallel_for(cfg.seeds, thread_count(cfg.threads), [&](std::size_t s) {
    TheoryRun run;
    run.seed = cfg.run_seed_base + s;
    Pomc pomc(f, before, run.seed);
    pomc.run(report.static_budget);
    for (ObjectiveKind kind : inst.kinds) {
      run.static_reports.push_back(check_population_guarantee(pomc.population(), kind, params));
    }
    pomc.on_change(after.thresholds());
    pomc.run(report.adapt_budget);
    const double best = pomc.best_feasible().raw;
    for (ObjectiveKind kind : inst.kinds) {
      AdaptedCheck a;
      a.kind = kind;
      a.best_value = best;
      a.bound = kind == ObjectiveKind::kSubmodular
                    ? adapted_bound_submodular(d_bar_star, d_star, report.opt_star,
                                               epsilon_at(params.epsilon, d_star + d_bar_star))
                    : adapted_bound_monotone(d_bar_star, d_star,
                                             params.gamma.at(d_bar_star, d_star), report.opt_star);
      a.pass = meets_bound(best, a.bound);
      run.adapted_checks.push_back(a);
    }
    run.evaluations = pomc.eval_count();
    report.runs[s] = std::move(run);
  });
  return report;
}

std::string to_json(const TheoryReport& report) {
  const TheoryConfig& c = report.config;
  nlohmann::json runs = nlohmann::json::array();
  for (const TheoryRun& r : report.runs) {
    nlohmann::json statics = nlohmann::json::array();
    for (const GuaranteeReport& g : r.static_reports) statics.push_back(nlohmann::json::parse(to_json(g)));
    nlohmann::json adapted = nlohmann::json::array();
    for (const AdaptedCheck& a : r.adapted_checks) {
      adapted.push_back({{"kind", to_string(a.kind)},
                         {"best_value", a.best_value},
                         {"bound", a.bound},
                         {"pass", a.pass}});
    }
    runs.push_back({{"seed", r.seed},
                    {"evaluations", r.evaluations},
                    {"static", statics},
                    {"adapted", adapted}});
  }
  nlohmann::json summary = nlohmann::json::object();
  for (ObjectiveKind kind : report.kinds) {
    summary[to_string(kind)] = {{"static_passes", report.static_passes(kind)},
                                {"adapted_passes", report.adapted_passes(kind)},
                                {"runs", report.runs.size()}};
  }
  nlohmann::json out{{"objective", to_string(c.objective)},
                     {"n", c.n},
                     {"k", c.k},
                     {"threshold", c.threshold},
                     {"raised_threshold", c.raised_threshold},
                     {"instance_seed", c.instance_seed},
                     {"run_seed_base", c.run_seed_base},
                     {"budget_factor", c.budget_factor},
                     {"opt_value", report.opt_value},
                     {"opt_star", report.opt_star},
                     {"static_budget", report.static_budget},
                     {"adapt_budget", report.adapt_budget},
                     {"summary", summary},
                     {"runs", runs}};
  return out.dump(2);
}

}  // namespace pomc
