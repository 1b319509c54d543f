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
#include <span>
#include <string>
#include <vector>

namespace pomc {

struct UTestResult {
  double u = 0.0;  // U statistic of the first sample
  double p = 1.0;  // two-sided
  bool exact = false;
};

// Largest pooled size for which the exact permutation distribution is used.
inline constexpr std::size_t kExactUTestLimit = 12;

// Two-sided Mann-Whitney U with midranks for ties. Exact (conditional on the
// tie pattern) for n1 + n2 <= 12, tie-corrected normal approximation with
// continuity correction otherwise.
UTestResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

// Exact two-sided sign test p-value for `plus` positive and `minus` negative
// differences.
double sign_test_p(std::size_t plus, std::size_t minus);

double mean(std::span<const double> v);
// Sample standard deviation (n - 1); 0 for fewer than two values.
double stddev(std::span<const double> v);
double median(std::vector<double> v);

enum class Outcome { kLoss, kWin, kTie };
const char* to_string(Outcome o);

struct ChangeRecord {
  std::size_t change_index = 0;  // 1-based
  std::uint64_t interval = 0;
  double greedy_value = 0.0;
  std::vector<double> pomc_values;  // one per repetition
};

// Sign test of the POMC runs against the single greedy value; significant
// results are signed by the median difference.
Outcome classify_change(const ChangeRecord& r, double alpha = 0.05);

struct IntervalSummary {
  std::uint64_t interval = 0;
  double mean = 0.0;
  double std = 0.0;
  int losses = 0;
  int wins = 0;
  int ties = 0;
};

struct BatchRow {
  std::size_t first_change = 0;
  std::size_t last_change = 0;
  double greedy_mean = 0.0;
  double greedy_std = 0.0;
  std::vector<IntervalSummary> intervals;  // ascending interval
};

// Groups records into consecutive batches of `batch_size` change indices.
// POMC statistics pool every run of every change in the batch.
std::vector<BatchRow> aggregate_batches(std::span<const ChangeRecord> records,
                                        std::size_t batch_size = 50, double alpha = 0.05);

// Columns: k, density, batch_range, greedy_mean, greedy_std, then per
// interval pomc<I>_mean, pomc<I>_std, pomc<I>_L, pomc<I>_W, pomc<I>_T.
void write_table_csv(std::ostream& out, std::span<const BatchRow> rows, std::size_t k,
                     double density);

}  // namespace pomc
