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

#include "pomc/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "pomc/error.hpp"
#include "pomc/text_io.hpp"

namespace pomc {

namespace {

// Midranks (1-based) of the pooled values, and the tie term sum(t^3 - t).
std::vector<double> midranks(const std::vector<double>& pooled, double* tie_term) {
  const std::size_t n = pooled.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
  std::vector<double> ranks(n);
  double ties = 0.0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t r = i; r <= j; ++r) ranks[order[r]] = rank;
    const double t = static_cast<double>(j - i + 1);
    ties += t * t * t - t;
    i = j + 1;
  }
  if (tie_term != nullptr) *tie_term = ties;
  return ranks;
}

}  // namespace

UTestResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  require(!a.empty() && !b.empty(), "Mann-Whitney U needs two non-empty samples");
  const std::size_t n1 = a.size();
  const std::size_t n2 = b.size();
  const std::size_t total = n1 + n2;
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  double tie_term = 0.0;
  const std::vector<double> ranks = midranks(pooled, &tie_term);

  const double offset = 0.5 * static_cast<double>(n1) * static_cast<double>(n1 + 1);
  const double rank_sum = std::accumulate(ranks.begin(), ranks.begin() + n1, 0.0);
  const double mu = 0.5 * static_cast<double>(n1) * static_cast<double>(n2);

  UTestResult result;
  result.u = rank_sum - offset;
  const double observed = std::abs(result.u - mu);

  if (total <= kExactUTestLimit) {
    // Every way of labelling n1 of the pooled ranks as the first sample.
    std::size_t extreme = 0;
    std::size_t labellings = 0;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != n1) continue;
      ++labellings;
      double s = 0.0;
      for (std::size_t i = 0; i < total; ++i) {
        if ((mask >> i) & 1u) s += ranks[i];
      }
      if (std::abs(s - offset - mu) >= observed - 1e-9) ++extreme;
    }
    result.p = static_cast<double>(extreme) / static_cast<double>(labellings);
    result.exact = true;
    return result;
  }

  const double nn = static_cast<double>(total);
  const double variance = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                          ((nn + 1.0) - tie_term / (nn * (nn - 1.0)));
  if (variance <= 0.0) {
    result.p = 1.0;
    return result;
  }
  const double z = std::max(0.0, observed - 0.5) / std::sqrt(variance);
  result.p = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return result;
}

double sign_test_p(std::size_t plus, std::size_t minus) {
  const std::size_t n = plus + minus;
  if (n == 0) return 1.0;
  const std::size_t k = std::min(plus, minus);
  long double pmf = std::ldexp(1.0L, -static_cast<int>(n));
  long double tail = 0.0L;
  for (std::size_t i = 0; i <= k; ++i) {
    tail += pmf;
    pmf = pmf * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
  }
  return static_cast<double>(std::min(1.0L, 2.0L * tail));
}

double mean(std::span<const double> v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

double median(std::vector<double> v) {
  require(!v.empty(), "median of an empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kLoss:
      return "L";
    case Outcome::kWin:
      return "W";
    case Outcome::kTie:
      return "T";
  }
  return "?";
}

Outcome classify_change(const ChangeRecord& r, double alpha) {
  require(!r.pomc_values.empty(), "change record without runs");
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::vector<double> diffs;
  diffs.reserve(r.pomc_values.size());
  for (double v : r.pomc_values) {
    if (v > r.greedy_value) ++plus;
    if (v < r.greedy_value) ++minus;
    diffs.push_back(v - r.greedy_value);
  }
  if (!(sign_test_p(plus, minus) < alpha)) return Outcome::kTie;
  const double med = median(std::move(diffs));
  if (med > 0.0) return Outcome::kWin;
  if (med < 0.0) return Outcome::kLoss;
  return Outcome::kTie;
}

std::vector<BatchRow> aggregate_batches(std::span<const ChangeRecord> records,
                                        std::size_t batch_size, double alpha) {
  require(batch_size >= 1, "batch size must be positive");
  std::set<std::uint64_t> intervals;
  for (const ChangeRecord& r : records) {
    require(r.change_index >= 1, "change indices are 1-based");
    intervals.insert(r.interval);
  }

  // batch -> (change -> greedy value), (interval -> records)
  std::map<std::size_t, std::map<std::size_t, double>> greedy;
  std::map<std::size_t, std::map<std::uint64_t, std::vector<const ChangeRecord*>>> runs;
  for (const ChangeRecord& r : records) {
    const std::size_t batch = (r.change_index - 1) / batch_size;
    greedy[batch].emplace(r.change_index, r.greedy_value);
    runs[batch][r.interval].push_back(&r);
  }

  std::vector<BatchRow> rows;
  for (const auto& [batch, by_change] : greedy) {
    BatchRow row;
    row.first_change = by_change.begin()->first;
    row.last_change = by_change.rbegin()->first;
    std::vector<double> g;
    for (const auto& [change, value] : by_change) g.push_back(value);
    row.greedy_mean = mean(g);
    row.greedy_std = stddev(g);
    for (std::uint64_t interval : intervals) {
      IntervalSummary s;
      s.interval = interval;
      std::vector<double> pooled;
      for (const ChangeRecord* r : runs[batch][interval]) {
        pooled.insert(pooled.end(), r->pomc_values.begin(), r->pomc_values.end());
        switch (classify_change(*r, alpha)) {
          case Outcome::kLoss:
            ++s.losses;
            break;
          case Outcome::kWin:
            ++s.wins;
            break;
          case Outcome::kTie:
            ++s.ties;
            break;
        }
      }
      s.mean = mean(pooled);
      s.std = stddev(pooled);
      row.intervals.push_back(s);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_table_csv(std::ostream& out, std::span<const BatchRow> rows, std::size_t k,
                     double density) {
  out << "k,density,batch_range,greedy_mean,greedy_std";
  if (!rows.empty()) {
    for (const IntervalSummary& s : rows.front().intervals) {
      const std::string p = "pomc" + std::to_string(s.interval);
      out << ',' << p << "_mean," << p << "_std," << p << "_L," << p << "_W," << p << "_T";
    }
  }
  out << '\n';
  for (const BatchRow& row : rows) {
    out << k << ',' << format_double(density) << ',' << row.first_change << '-'
        << row.last_change << ',' << format_double(row.greedy_mean) << ','
        << format_double(row.greedy_std);
    for (const IntervalSummary& s : row.intervals) {
      out << ',' << format_double(s.mean) << ',' << format_double(s.std) << ',' << s.losses
          << ',' << s.wins << ',' << s.ties;
    }
    out << '\n';
  }
}

}  // namespace pomc
