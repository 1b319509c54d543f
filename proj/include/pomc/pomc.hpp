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

#include <cstdint>
#include <random>
#include <vector>

#include "pomc/matroid.hpp"
#include "pomc/objective.hpp"
#include "pomc/population.hpp"

namespace pomc {

using Rng = std::mt19937_64;

// Flips each of the n bits independently with probability 1/n.
Solution mutate(const Solution& parent, Rng& rng);

// Pareto optimization over (f1, -|X|) with change handling for partition
// matroid thresholds. One oracle call per iteration; the initial empty set
// evaluation counts as the first one.
class Pomc {
 public:
  Pomc(const SetFunction& f, PartitionMatroid matroid, std::uint64_t seed);

  // Select a parent uniformly, mutate, evaluate, insert.
  void step();
  void run(std::uint64_t iterations);

  // Evaluates y and applies survivor selection. Exposed so that a fixed
  // offspring sequence can drive the archive deterministically.
  bool offer(const Solution& y);

  // Installs new thresholds, re-derives f1 from cached raw values and prunes
  // dominated members. Costs no oracle calls.
  void on_change(std::vector<int> thresholds);

  const Population& population() const { return population_; }
  const PartitionMatroid& matroid() const { return matroid_; }
  const Member& best_feasible() const { return population_.best_feasible(); }

  std::uint64_t iteration() const { return oracle_.eval_count(); }
  std::uint64_t eval_count() const { return oracle_.eval_count(); }

 private:
  Oracle oracle_;
  PartitionMatroid matroid_;
  Rng rng_;
  Population population_;
};

}  // namespace pomc
