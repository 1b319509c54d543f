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

// Serial reference kernels against their OpenMP counterparts.

#include <random>

#include "benchmark/benchmark.h"
#include "pomc/experiment.hpp"
#include "pomc/maxcut.hpp"
#include "pomc/metrics.hpp"

namespace {

using namespace pomc;

MaxCut make_cut(std::size_t n) {
  std::mt19937_64 rng(7);
  return MaxCut(generate_graph(n, 0.3, rng));
}

void BM_BruteForceOptSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MaxCut f = make_cut(n);
  const PartitionMatroid m = PartitionMatroid::uniform(n, static_cast<int>(n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(serial::brute_force_opt(f, m));
}
BENCHMARK(BM_BruteForceOptSerial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_BruteForceOptParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MaxCut f = make_cut(n);
  const PartitionMatroid m = PartitionMatroid::uniform(n, static_cast<int>(n / 2));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_opt(f, m));
}
BENCHMARK(BM_BruteForceOptParallel)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_RatioTableSerial(benchmark::State& state) {
  const MaxCut f = make_cut(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::submodularity_ratio_table(f));
}
BENCHMARK(BM_RatioTableSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_RatioTableParallel(benchmark::State& state) {
  const MaxCut f = make_cut(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(submodularity_ratio_table(f));
}
BENCHMARK(BM_RatioTableParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_MonotonicitySerial(benchmark::State& state) {
  const MaxCut f = make_cut(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::monotonicity_terms(f));
}
BENCHMARK(BM_MonotonicitySerial)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_MonotonicityParallel(benchmark::State& state) {
  const MaxCut f = make_cut(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(monotonicity_terms(f));
}
BENCHMARK(BM_MonotonicityParallel)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_DynamicReplications(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.n = 50;
  cfg.density = 0.05;
  cfg.m_changes = 10;
  cfg.repetitions = 8;
  cfg.intervals = {2000};
  cfg.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_dynamic(cfg));
}
BENCHMARK(BM_DynamicReplications)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
