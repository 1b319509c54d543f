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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "pomc/error.hpp"
#include "pomc/maxcut.hpp"
#include "pomc/metrics.hpp"
#include "pomc/pomc.hpp"

namespace pomc {
namespace {

// f(X) = |X|^2: monotone, supermodular. For i >= 1 the worst pair is X = ∅,
// |L| = min(j, n), which gives gamma_{i,j} = 1 / min(j, n).
class SquaredCardinality final : public SetFunction {
 public:
  explicit SquaredCardinality(std::size_t n) : n_(n) {}
  std::size_t ground_size() const override { return n_; }
  double value(const Solution& x) const override {
    const auto c = static_cast<double>(x.cardinality());
    return c * c;
  }

 private:
  std::size_t n_;
};

const WeightedGraph& triangle() {
  static const WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  return g;
}

TEST(BruteForceTest, Examples) {
  ModularFunction f({3, 2, 1});
  const OptimumResult r = brute_force_opt(f, PartitionMatroid::uniform(3, 2));
  EXPECT_EQ(r.value, 5.0);
  EXPECT_EQ(r.x, Solution(3, {0, 1}));

  // Six subsets reach 2; {2} is the lexicographically lowest.
  MaxCut cut(triangle());
  const OptimumResult t = brute_force_opt(cut, PartitionMatroid::uniform(3, 3));
  EXPECT_EQ(t.value, 2.0);
  EXPECT_EQ(t.x, Solution(3, {2}));

  std::mt19937_64 rng(1);
  const auto cov = testing::random_coverage(9, rng);
  PartitionMatroid full(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}, {3, 3, 3});
  const Solution all = Solution::from_mask(9, 511);
  EXPECT_EQ(brute_force_opt(cov, full).value, cov.value(all));
}

TEST(BruteForceTest, GuardsAreHardErrors) {
  ModularFunction big(std::vector<double>(21, 1.0));
  EXPECT_THROW(brute_force_opt(big, PartitionMatroid::uniform(21, 3)), GuardError);
  EXPECT_THROW(serial::brute_force_opt(big, PartitionMatroid::uniform(21, 3)), GuardError);
  ModularFunction mid(std::vector<double>(13, 1.0));
  EXPECT_THROW(submodularity_ratio_table(mid), GuardError);
  EXPECT_THROW(submodularity_ratio(mid, 1, 1), GuardError);
  ModularFunction wide(std::vector<double>(17, 1.0));
  EXPECT_THROW(monotonicity_terms(wide), GuardError);
  EXPECT_NO_THROW(monotonicity_terms(mid));
}

TEST(BruteForceTest, MatchesNaiveEnumeration) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    MaxCut f(generate_graph(10, 0.3, rng));
    const PartitionMatroid m = testing::random_partition(10, 3, rng);
    const OptimumResult r = brute_force_opt(f, m);
    EXPECT_EQ(r.value, testing::naive_opt(testing::as_mask_fn(f), 10, m));
    EXPECT_TRUE(m.feasible(r.x));
    EXPECT_EQ(f.value(r.x), r.value);
  }
}

TEST(KernelTest, ParallelAndSerialAgreeExactly) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    MaxCut cut(generate_graph(10, 0.25, rng));
    const auto cov = testing::random_coverage(10, rng);
    const PartitionMatroid m = testing::random_partition(10, 2, rng);
    for (const SetFunction* f : {static_cast<const SetFunction*>(&cut),
                                 static_cast<const SetFunction*>(&cov)}) {
      EXPECT_EQ(tabulate(*f), serial::tabulate(*f));
      const auto a = brute_force_opt(*f, m);
      const auto b = serial::brute_force_opt(*f, m);
      EXPECT_EQ(a.value, b.value);
      EXPECT_EQ(a.x, b.x);
      EXPECT_EQ(monotonicity_terms(*f), serial::monotonicity_terms(*f));
      const RatioTable ra = submodularity_ratio_table(*f);
      const RatioTable rb = serial::submodularity_ratio_table(*f);
      for (long i = 0; i <= 11; ++i) {
        for (long j = 1; j <= 10; ++j) EXPECT_EQ(ra.at(i, j), rb.at(i, j));
      }
    }
  }
}

TEST(RatioTest, ModularIsExactlyOne) {
  ModularFunction f({3, 0, 5, 1, 2, 7});
  const RatioTable t = submodularity_ratio_table(f);
  for (long i = 0; i <= 7; ++i) {
    for (long j = 1; j <= 6; ++j) EXPECT_EQ(t.at(i, j), 1.0);
  }
}

TEST(RatioTest, SquaredCardinalityClosedForm) {
  SquaredCardinality f(6);
  const RatioTable t = submodularity_ratio_table(f);
  for (long i = 1; i <= 7; ++i) {
    for (long j = 1; j <= 6; ++j) {
      EXPECT_DOUBLE_EQ(t.at(i, j), 1.0 / static_cast<double>(j));
      EXPECT_DOUBLE_EQ(t.at(i, j), testing::naive_gamma(testing::as_mask_fn(f), 6, i, j));
    }
  }
  EXPECT_EQ(t.at(0, 3), t.at(1, 3));
  EXPECT_DOUBLE_EQ(submodularity_ratio(f, 2, 9), 1.0 / 6.0);
}

// Coverage is submodular, so every cell is >= 1, and the |L| = 1 pairs pin it
// at exactly 1. Cross-checked cell by cell with the definition.
TEST(RatioTest, CoverageCellByCell) {
  std::mt19937_64 rng(4);
  const auto f = testing::random_coverage(6, rng);
  const RatioTable t = submodularity_ratio_table(f);
  for (long i = 0; i <= 7; ++i) {
    for (long j = 1; j <= 6; ++j) {
      EXPECT_DOUBLE_EQ(t.at(i, j), testing::naive_gamma(testing::as_mask_fn(f), 6, i, j));
      EXPECT_GE(t.at(i, j), 1.0 - 1e-12);
    }
  }
}

TEST(RatioTest, NonIncreasingInBothIndices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    MaxCut f(generate_graph(7, 0.4, rng));
    const RatioTable t = submodularity_ratio_table(f);
    for (long i = 1; i <= 8; ++i) {
      for (long j = 1; j <= 7; ++j) {
        EXPECT_GE(t.at(i, j), 1.0 - 1e-9);
        if (i > 1) EXPECT_LE(t.at(i, j), t.at(i - 1, j));
        if (j > 1) EXPECT_LE(t.at(i, j), t.at(i, j - 1));
      }
    }
  }
}

TEST(MonotonicityTest, MonotoneFunctionsGiveZero) {
  ModularFunction f({1, 2, 3, 4});
  for (double e : monotonicity_terms(f)) EXPECT_EQ(e, 0.0);
  std::mt19937_64 rng(6);
  const auto cov = testing::random_coverage(8, rng);
  for (double e : monotonicity_terms(cov)) EXPECT_EQ(e, 0.0);
  EXPECT_EQ(monotonicity_term(cov, 0), 0.0);
}

// Unit triangle: cuts are 0, 2, 2, 0 by size. Removing a vertex from V gains
// 2; no other removal gains anything.
TEST(MonotonicityTest, TriangleCut) {
  MaxCut f(triangle());
  const auto eps = monotonicity_terms(f);
  ASSERT_EQ(eps.size(), 5u);
  EXPECT_EQ(eps, (std::vector<double>{0, 0, 0, 0, 2}));
  EXPECT_EQ(monotonicity_term(f, 4), 2.0);
  EXPECT_EQ(monotonicity_term(f, 100), 2.0);
  for (long j = 0; j <= 4; ++j) {
    EXPECT_EQ(eps[j], testing::naive_epsilon(testing::as_mask_fn(f), 3, j));
  }
}

TEST(MonotonicityTest, NonDecreasingAndMatchesDefinition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    MaxCut f(generate_graph(8, 0.3, rng));
    const auto eps = monotonicity_terms(f);
    EXPECT_EQ(eps[0], 0.0);
    for (long j = 1; j <= 9; ++j) {
      EXPECT_GE(eps[j], eps[j - 1]);
      EXPECT_DOUBLE_EQ(eps[j], testing::naive_epsilon(testing::as_mask_fn(f), 8, j));
    }
  }
}

TEST(BoundTest, StaticSubmodularExamples) {
  const std::vector<double> no_eps{0, 0, 0};
  EXPECT_EQ(static_bound_submodular(0, 4, 10.0, no_eps), 0.0);
  EXPECT_DOUBLE_EQ(static_bound_submodular(1, 1, 10.0, no_eps), 10.0);
  // [1 - (3/4)^2] * [10 - 1 * eps_6], eps table clamps to its last entry
  const std::vector<double> eps{0, 0, 0.5};
  EXPECT_DOUBLE_EQ(static_bound_submodular(2, 4, 10.0, eps), (1 - 0.5625) * 9.5);
}

TEST(BoundTest, StaticDominatesExponentialForm) {
  const std::vector<double> eps{0, 0.1, 0.2, 0.3};
  for (int d = 1; d <= 30; ++d) {
    for (int m = 1; m <= d; ++m) {
      const double opt = 50.0;
      const double tail = opt - (m - 1) * epsilon_at(eps, d + m);
      EXPECT_GE(static_bound_submodular(m, d, opt, eps) + 1e-12,
                (1 - std::exp(-static_cast<double>(m) / d)) * tail);
    }
  }
}

TEST(BoundTest, AdaptedSubmodularExamples) {
  EXPECT_DOUBLE_EQ(adapted_bound_submodular(3, 3, 10.0, 0.0), (1 - std::exp(-1.0)) * 10.0);
  EXPECT_EQ(adapted_bound_submodular(2, 5, 0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(adapted_bound_submodular(2, 4, 10.0, 1.0), (1 - std::exp(-0.5)) * 9.0);
  EXPECT_THROW(adapted_bound_submodular(5, 4, 1.0, 0.0), ContractError);
}

TEST(BoundTest, MonotoneExamples) {
  EXPECT_EQ(static_bound_monotone(0, 3, 1.0, 7.0), 0.0);
  EXPECT_DOUBLE_EQ(static_bound_monotone(1, 1, 1.0, 7.0), 7.0);
  EXPECT_DOUBLE_EQ(static_bound_monotone(2, 4, 0.5, 8.0), (1 - 0.875 * 0.875) * 8.0);
  EXPECT_DOUBLE_EQ(static_bound_monotone(2, 4, 3.0, 8.0), static_bound_monotone(2, 4, 1.0, 8.0));
  EXPECT_EQ(adapted_bound_monotone(3, 5, 0.0, 9.0), 0.0);
  EXPECT_DOUBLE_EQ(adapted_bound_monotone(4, 4, 1.0, 9.0), (1 - std::exp(-1.0)) * 9.0);
}

TEST(GuaranteeTest, EmptyPopulationFailsAtOne) {
  ModularFunction f({4, 3, 2, 1});
  const PartitionMatroid m = PartitionMatroid::uniform(4, 2);
  const InstanceParams params = instance_params(f, m, ObjectiveKind::kMonotone);
  EXPECT_EQ(params.opt_value, 7.0);
  Pomc pomc(f, m, 1);
  const GuaranteeReport r = check_population_guarantee(pomc.population(), ObjectiveKind::kMonotone,
                                                       params);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_TRUE(r.rows[0].pass);
  EXPECT_EQ(r.rows[0].bound, 0.0);
  EXPECT_FALSE(r.rows[1].pass);
  EXPECT_FALSE(r.pass);
}

TEST(GuaranteeTest, ConvergedModularRunPasses) {
  ModularFunction f({4, 3, 2, 1, 6, 5});
  const PartitionMatroid m(6, {{0, 1, 2}, {3, 4, 5}}, {2, 2});
  Pomc pomc(f, m, 5);
  pomc.run(20000);
  for (ObjectiveKind kind : {ObjectiveKind::kSubmodular, ObjectiveKind::kMonotone}) {
    const GuaranteeReport r =
        check_population_guarantee(pomc.population(), kind, instance_params(f, m, kind));
    EXPECT_TRUE(r.pass) << to_json(r);
  }
}

TEST(GuaranteeTest, JsonRows) {
  ModularFunction f({1, 1});
  const PartitionMatroid m = PartitionMatroid::uniform(2, 1);
  Pomc pomc(f, m, 1);
  const auto r = check_population_guarantee(pomc.population(), ObjectiveKind::kSubmodular,
                                            instance_params(f, m, ObjectiveKind::kSubmodular));
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["kind"], "submodular");
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["m"], 0);
  EXPECT_EQ(j["rows"][0]["pass"], true);
  EXPECT_EQ(j["rows"][1]["pass"], false);
}

}  // namespace
}  // namespace pomc
