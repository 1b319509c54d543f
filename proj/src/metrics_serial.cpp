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

// Straight-line reference versions of the enumeration kernels. They call the
// objective directly instead of going through a lookup table.

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "enumeration_detail.hpp"
#include "pomc/metrics.hpp"

namespace pomc::serial {

std::vector<double> tabulate(const SetFunction& f) {
  const std::size_t n = f.ground_size();
  detail::check_guard(n, kMaxOptimumGround, "tabulate");
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f.value(Solution::from_mask(n, mask));
  }
  return table;
}

OptimumResult brute_force_opt(const SetFunction& f, const PartitionMatroid& m) {
  const std::size_t n = f.ground_size();
  require(n == m.ground_size(), "objective and matroid sizes differ");
  detail::check_guard(n, kMaxOptimumGround, "brute_force_opt");
  OptimumResult best{Solution(n), -std::numeric_limits<double>::infinity()};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Solution x = Solution::from_mask(n, mask);
    if (!m.feasible(x)) continue;
    const double v = f.value(x);
    if (v > best.value || (v == best.value && lex_less(x, best.x))) best = {std::move(x), v};
  }
  return best;
}

RatioTable submodularity_ratio_table(const SetFunction& f) {
  const std::size_t n = f.ground_size();
  detail::check_guard(n, kMaxRatioGround, "submodularity_ratio");
  const std::uint64_t count = std::uint64_t{1} << n;
  double scale = 0.0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    scale = std::max(scale, std::abs(f.value(Solution::from_mask(n, mask))));
  }
  const double tol = kDegenerateGain * (1.0 + scale);

  const std::size_t width = n + 1;
  std::vector<double> group(width * width, std::numeric_limits<double>::infinity());
  for (std::uint64_t xm = 0; xm < count; ++xm) {
    const Solution x = Solution::from_mask(n, xm);
    const double fx = f.value(x);
    for (std::uint64_t lm = 1; lm < count; ++lm) {
      if (lm & xm) continue;
      const double joint = f.value(Solution::from_mask(n, xm | lm)) - fx;
      if (joint <= tol) continue;
      double singles = 0.0;
      for (std::size_t v = 0; v < n; ++v) {
        if ((lm >> v) & 1u) {
          Solution xv = x;
          xv.set(v, true);
          singles += f.value(xv) - fx;
        }
      }
      double& cell = group[x.cardinality() * width + static_cast<std::size_t>(std::popcount(lm))];
      cell = std::min(cell, singles / joint);
    }
  }
  return RatioTable(n, detail::ratio_cells(n, group));
}

std::vector<double> monotonicity_terms(const SetFunction& f) {
  const std::size_t n = f.ground_size();
  detail::check_guard(n, kMaxMonotonicityGround, "monotonicity_term");
  std::vector<double> by_size(n + 1, 0.0);
  for (std::uint64_t xm = 0; xm < (std::uint64_t{1} << n); ++xm) {
    const Solution x = Solution::from_mask(n, xm);
    const double fx = f.value(x);
    for (std::size_t v : x.elements()) {
      Solution without = x;
      without.set(v, false);
      by_size[x.cardinality()] = std::max(by_size[x.cardinality()], f.value(without) - fx);
    }
  }
  return detail::epsilon_prefix(n, by_size);
}

}  // namespace pomc::serial
