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

#include "pomc/pomc.hpp"

#include "pomc/error.hpp"

namespace pomc {

Solution mutate(const Solution& parent, Rng& rng) {
  Solution child = parent;
  const std::size_t n = parent.size();
  std::bernoulli_distribution flip(1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (flip(rng)) child.flip(i);
  }
  return child;
}

Pomc::Pomc(const SetFunction& f, PartitionMatroid matroid, std::uint64_t seed)
    : oracle_(f), matroid_(std::move(matroid)), rng_(seed) {
  require(f.ground_size() == matroid_.ground_size(),
          "objective and matroid disagree on the ground set size");
  population_ = Population(eval_bi(Solution(f.ground_size()), oracle_, matroid_));
}

bool Pomc::offer(const Solution& y) {
  return population_.insert(eval_bi(y, oracle_, matroid_));
}

void Pomc::step() {
  std::uniform_int_distribution<std::size_t> pick(0, population_.size() - 1);
  const Solution& parent = population_[pick(rng_)].x;
  offer(mutate(parent, rng_));
}

void Pomc::run(std::uint64_t iterations) {
  for (std::uint64_t t = 0; t < iterations; ++t) step();
}

void Pomc::on_change(std::vector<int> thresholds) {
  matroid_.set_thresholds(std::move(thresholds));
  population_.refresh(matroid_);
  population_.prune_dominated();
}

}  // namespace pomc
