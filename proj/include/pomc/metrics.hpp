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
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pomc/matroid.hpp"
#include "pomc/objective.hpp"
#include "pomc/population.hpp"
#include "pomc/solution.hpp"

namespace pomc {

// Size guards for the exhaustive routines. Exceeding one throws GuardError.
inline constexpr std::size_t kMaxOptimumGround = 20;
inline constexpr std::size_t kMaxRatioGround = 12;
inline constexpr std::size_t kMaxMonotonicityGround = 16;

struct OptimumResult {
  Solution x;
  double value = 0.0;
};

// Submodularity ratio gamma_{i,j} for every i in [0, n+1], j in [1, n].
// Pairs (X, L) whose joint gain f(X ∪ L) - f(X) is not positive are skipped;
// a cell with no admissible pair reads 1.
class RatioTable {
 public:
  RatioTable() = default;
  RatioTable(std::size_t n, std::vector<double> cells) : n_(n), cells_(std::move(cells)) {}

  // Indices outside the stored range are clamped: i = 0 reads as i = 1, and
  // i > n+1 or j > n read as the last row / column.
  double at(long i, long j) const;
  std::size_t ground_size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> cells_;  // row-major, rows i = 1..n+1, columns j = 1..n
};

// Relative threshold below which a joint gain counts as zero.
inline constexpr double kDegenerateGain = 1e-12;

// f on every subset, indexed by bitmask (bit i = element i). n <= 20.
std::vector<double> tabulate(const SetFunction& f);

// Exhaustive feasible maximum; ties go to the lexicographically lowest set.
OptimumResult brute_force_opt(const SetFunction& f, const PartitionMatroid& m);

RatioTable submodularity_ratio_table(const SetFunction& f);
double submodularity_ratio(const SetFunction& f, long i, long j);

// epsilon_0 .. epsilon_{n+1}.
std::vector<double> monotonicity_terms(const SetFunction& f);
double monotonicity_term(const SetFunction& f, long j);

// Reads epsilon_j from a table produced by monotonicity_terms; j beyond n+1
// reads epsilon_{n+1}, which already ranges over every set.
double epsilon_at(std::span<const double> terms, long j);

// Single-threaded reference versions of the enumeration kernels. Same
// contracts and results as the parallel ones above.
namespace serial {
std::vector<double> tabulate(const SetFunction& f);
OptimumResult brute_force_opt(const SetFunction& f, const PartitionMatroid& m);
RatioTable submodularity_ratio_table(const SetFunction& f);
std::vector<double> monotonicity_terms(const SetFunction& f);
}  // namespace serial

// [1 - (1 - 1/d)^m] * [opt - (m - 1) * epsilon_{d+m}]
double static_bound_submodular(int m, int d, double opt, std::span<const double> epsilon);

// (1 - e^{-d_bar_star/d_star}) * [opt_star - (d_bar_star - 1) * eps]
// where eps is epsilon_{d_star + d_bar_star}.
double adapted_bound_submodular(int d_bar_star, int d_star, double opt_star, double eps);

// [1 - (1 - gamma/d)^m] * opt with gamma clamped to [0, 1].
double static_bound_monotone(int m, int d, double gamma, double opt);

// (1 - e^{-gamma * d_bar_star / d_star}) * opt_star with gamma clamped to [0, 1].
double adapted_bound_monotone(int d_bar_star, int d_star, double gamma, double opt_star);

enum class ObjectiveKind { kSubmodular, kMonotone };
const char* to_string(ObjectiveKind kind);

struct InstanceParams {
  int d = 0;
  int d_bar = 0;
  double opt_value = 0.0;
  std::vector<double> epsilon;  // monotonicity_terms, used for kSubmodular
  RatioTable gamma;             // used for kMonotone
};

InstanceParams instance_params(const SetFunction& f, const PartitionMatroid& m,
                               ObjectiveKind kind);

struct GuaranteeRow {
  int m = 0;
  double best_value = -std::numeric_limits<double>::infinity();  // -inf: no member with |X| <= m
  double bound = 0.0;
  bool pass = false;
};

struct GuaranteeReport {
  ObjectiveKind kind = ObjectiveKind::kSubmodular;
  std::vector<GuaranteeRow> rows;
  bool pass = false;
};

// Absolute slack allowed when comparing a value against a bound.
inline constexpr double kBoundSlack = 1e-9;
bool meets_bound(double value, double bound);

// For m = 0..d_bar: the best member with |X| <= m must reach the static bound.
GuaranteeReport check_population_guarantee(const Population& p, ObjectiveKind kind,
                                           const InstanceParams& params);

std::string to_json(const GuaranteeReport& report);

}  // namespace pomc
