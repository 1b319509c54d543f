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

#include "pomc/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "enumeration_detail.hpp"
#include "json.hpp"
#include "pomc/error.hpp"

namespace pomc {

namespace detail {

std::vector<double> ratio_cells(std::size_t n, const std::vector<double>& group) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> cells((n + 1) * n, 1.0);
  // running[l] = min over s < i of group[s][l]
  std::vector<double> running(n + 1, inf);
  for (std::size_t i = 1; i <= n + 1; ++i) {
    for (std::size_t l = 1; l <= n; ++l) running[l] = std::min(running[l], group[(i - 1) * (n + 1) + l]);
    double acc = inf;
    for (std::size_t j = 1; j <= n; ++j) {
      acc = std::min(acc, running[j]);
      cells[(i - 1) * n + (j - 1)] = std::isinf(acc) ? 1.0 : acc;
    }
  }
  return cells;
}

std::vector<double> epsilon_prefix(std::size_t n, const std::vector<double>& by_size) {
  std::vector<double> eps(n + 2, 0.0);
  double acc = 0.0;
  for (std::size_t j = 1; j <= n + 1; ++j) {
    acc = std::max(acc, by_size[j - 1]);
    eps[j] = acc;
  }
  return eps;
}

}  // namespace detail

double RatioTable::at(long i, long j) const {
  require(i >= 0 && j >= 1, "submodularity ratio needs i >= 0 and j >= 1");
  if (n_ == 0) return 1.0;
  const auto n = static_cast<long>(n_);
  const long row = std::clamp(i, 1L, n + 1);
  const long col = std::min(j, n);
  return cells_[static_cast<std::size_t>((row - 1) * n + (col - 1))];
}

std::vector<double> tabulate(const SetFunction& f) {
  const std::size_t n = f.ground_size();
  detail::check_guard(n, kMaxOptimumGround, "tabulate");
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<double> table(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t mask = 0; mask < count; ++mask) {
    table[static_cast<std::size_t>(mask)] =
        f.value(Solution::from_mask(n, static_cast<std::uint64_t>(mask)));
  }
  return table;
}

OptimumResult brute_force_opt(const SetFunction& f, const PartitionMatroid& m) {
  const std::size_t n = f.ground_size();
  require(n == m.ground_size(), "objective and matroid sizes differ");
  detail::check_guard(n, kMaxOptimumGround, "brute_force_opt");
  const auto masks = detail::block_masks(m);
  const auto& thresholds = m.thresholds();
  const std::int64_t count = std::int64_t{1} << n;

  double best_value = -std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;
#pragma omp parallel
  {
    double local_value = -std::numeric_limits<double>::infinity();
    std::uint64_t local_mask = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const auto mask = static_cast<std::uint64_t>(i);
      if (!detail::mask_feasible(mask, masks, thresholds)) continue;
      const double v = f.value(Solution::from_mask(n, mask));
      if (detail::better_candidate(v, mask, local_value, local_mask)) {
        local_value = v;
        local_mask = mask;
      }
    }
#pragma omp critical(pomc_brute_force_opt)
    if (detail::better_candidate(local_value, local_mask, best_value, best_mask)) {
      best_value = local_value;
      best_mask = local_mask;
    }
  }
  return OptimumResult{Solution::from_mask(n, best_mask), best_value};
}

RatioTable submodularity_ratio_table(const SetFunction& f) {
  const std::size_t n = f.ground_size();
  detail::check_guard(n, kMaxRatioGround, "submodularity_ratio");
  const std::vector<double> t = tabulate(f);
  double scale = 0.0;
  for (double v : t) scale = std::max(scale, std::abs(v));
  const double tol = kDegenerateGain * (1.0 + scale);

  const std::size_t width = n + 1;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<double> group(width * width, std::numeric_limits<double>::infinity());
#pragma omp parallel
  {
    std::vector<double> local(width * width, std::numeric_limits<double>::infinity());
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t xi = 0; xi < count; ++xi) {
      const auto x = static_cast<std::uint64_t>(xi);
      const std::size_t s = static_cast<std::size_t>(std::popcount(x));
      const std::uint64_t rest = full & ~x;
      for (std::uint64_t l = rest; l != 0; l = (l - 1) & rest) {
        const double joint = t[x | l] - t[x];
        if (joint <= tol) continue;
        double singles = 0.0;
        for (std::uint64_t bits = l; bits != 0; bits &= bits - 1) {
          singles += t[x | (bits & (~bits + 1))] - t[x];
        }
        const std::size_t idx = s * width + static_cast<std::size_t>(std::popcount(l));
        local[idx] = std::min(local[idx], singles / joint);
      }
    }
#pragma omp critical(pomc_ratio_merge)
    for (std::size_t i = 0; i < group.size(); ++i) group[i] = std::min(group[i], local[i]);
  }
  return RatioTable(n, detail::ratio_cells(n, group));
}

double submodularity_ratio(const SetFunction& f, long i, long j) {
  require(i >= 0 && j >= 1, "submodularity ratio needs i >= 0 and j >= 1");
  return submodularity_ratio_table(f).at(i, j);
}

std::vector<double> monotonicity_terms(const SetFunction& f) {
  const std::size_t n = f.ground_size();
  detail::check_guard(n, kMaxMonotonicityGround, "monotonicity_term");
  const std::vector<double> t = tabulate(f);
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<double> by_size(n + 1, 0.0);
#pragma omp parallel
  {
    std::vector<double> local(n + 1, 0.0);
#pragma omp for schedule(static) nowait
    for (std::int64_t xi = 0; xi < count; ++xi) {
      const auto x = static_cast<std::uint64_t>(xi);
      const auto s = static_cast<std::size_t>(std::popcount(x));
      for (std::uint64_t bits = x; bits != 0; bits &= bits - 1) {
        const std::uint64_t v = bits & (~bits + 1);
        local[s] = std::max(local[s], t[x & ~v] - t[x]);
      }
    }
#pragma omp critical(pomc_epsilon_merge)
    for (std::size_t s = 0; s <= n; ++s) by_size[s] = std::max(by_size[s], local[s]);
  }
  return detail::epsilon_prefix(n, by_size);
}

double monotonicity_term(const SetFunction& f, long j) {
  require(j >= 0, "monotonicity term needs j >= 0");
  return epsilon_at(monotonicity_terms(f), j);
}

double epsilon_at(std::span<const double> terms, long j) {
  require(j >= 0 && !terms.empty(), "epsilon lookup needs j >= 0 and a non-empty table");
  const auto last = static_cast<long>(terms.size()) - 1;
  return terms[static_cast<std::size_t>(std::min(j, last))];
}

double static_bound_submodular(int m, int d, double opt, std::span<const double> epsilon) {
  require(d >= 1 && m >= 0, "bound needs d >= 1 and m >= 0");
  if (m == 0) return 0.0;
  const double factor = 1.0 - std::pow(1.0 - 1.0 / d, m);
  return factor * (opt - (m - 1) * epsilon_at(epsilon, static_cast<long>(d) + m));
}

double adapted_bound_submodular(int d_bar_star, int d_star, double opt_star, double eps) {
  require(d_bar_star >= 1 && d_bar_star <= d_star, "bound needs 1 <= d_bar_star <= d_star");
  const double factor = 1.0 - std::exp(-static_cast<double>(d_bar_star) / d_star);
  return factor * (opt_star - (d_bar_star - 1) * eps);
}

double static_bound_monotone(int m, int d, double gamma, double opt) {
  require(d >= 1 && m >= 0, "bound needs d >= 1 and m >= 0");
  if (m == 0) return 0.0;
  const double g = std::clamp(gamma, 0.0, 1.0);
  return (1.0 - std::pow(1.0 - g / d, m)) * opt;
}

double adapted_bound_monotone(int d_bar_star, int d_star, double gamma, double opt_star) {
  require(d_bar_star >= 1 && d_bar_star <= d_star, "bound needs 1 <= d_bar_star <= d_star");
  const double g = std::clamp(gamma, 0.0, 1.0);
  return (1.0 - std::exp(-g * d_bar_star / d_star)) * opt_star;
}

const char* to_string(ObjectiveKind kind) {
  return kind == ObjectiveKind::kSubmodular ? "submodular" : "monotone";
}

InstanceParams instance_params(const SetFunction& f, const PartitionMatroid& m,
                               ObjectiveKind kind) {
  InstanceParams p;
  p.d = m.total();
  p.d_bar = m.min_threshold();
  p.opt_value = brute_force_opt(f, m).value;
  if (kind == ObjectiveKind::kSubmodular) {
    p.epsilon = monotonicity_terms(f);
  } else {
    p.gamma = submodularity_ratio_table(f);
  }
  return p;
}

bool meets_bound(double value, double bound) {
  return value >= bound - kBoundSlack * std::max(1.0, std::abs(bound));
}

GuaranteeReport check_population_guarantee(const Population& p, ObjectiveKind kind,
                                           const InstanceParams& params) {
  GuaranteeReport report;
  report.kind = kind;
  report.pass = true;
  for (int m = 0; m <= params.d_bar; ++m) {
    GuaranteeRow row;
    row.m = m;
    row.bound = kind == ObjectiveKind::kSubmodular
                    ? static_bound_submodular(m, params.d, params.opt_value, params.epsilon)
                    : static_bound_monotone(m, params.d, params.gamma.at(m, params.d),
                                            params.opt_value);
    if (const Member* best = p.best_within(static_cast<std::size_t>(m))) {
      row.best_value = best->raw;
      row.pass = meets_bound(row.best_value, row.bound);
    }
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

std::string to_json(const GuaranteeReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const GuaranteeRow& r : report.rows) {
    nlohmann::json row{{"m", r.m}, {"bound", r.bound}, {"pass", r.pass}};
    row["best_value"] = std::isfinite(r.best_value) ? nlohmann::json(r.best_value) : nlohmann::json();
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"kind", to_string(report.kind)}, {"pass", report.pass}, {"rows", rows}}
      .dump();
}

}  // namespace pomc
