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

#include "pomc/population.hpp"

#include <algorithm>
#include <string>

namespace pomc {

BiFitness derive_fitness(const Solution& x, double raw, const PartitionMatroid& m) {
  BiFitness fit;
  fit.f1 = m.feasible(x) ? PrimaryValue::feasible(raw) : PrimaryValue::infeasible();
  fit.f2 = -static_cast<long>(x.cardinality());
  return fit;
}

Member eval_bi(const Solution& x, Oracle& oracle, const PartitionMatroid& m) {
  const double raw = oracle.evaluate(x);
  return Member{x, raw, derive_fitness(x, raw, m)};
}

bool Population::insert(Member y) {
  for (const Member& x : members_) {
    if (strictly_dominates(x.fitness, y.fitness)) return false;
  }
  std::erase_if(members_,
                [&](const Member& x) { return weakly_dominates(y.fitness, x.fitness); });
  members_.push_back(std::move(y));
  return true;
}

void Population::refresh(const PartitionMatroid& m) {
  for (Member& x : members_) x.fitness = derive_fitness(x.x, x.raw, m);
}

void Population::prune_dominated() {
  std::vector<char> drop(members_.size(), 0);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = 0; j < members_.size(); ++j) {
      if (i != j && weakly_dominates(members_[j].fitness, members_[i].fitness)) {
        drop[i] = 1;
        break;
      }
    }
  }
  std::vector<Member> kept;
  kept.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!drop[i]) kept.push_back(std::move(members_[i]));
  }
  members_ = std::move(kept);
}

namespace {

// True when a should be preferred over b as the returned solution.
bool better_output(const Member& a, const Member& b) {
  const auto c = a.fitness.f1 <=> b.fitness.f1;
  if (c != 0) return c > 0;
  if (a.fitness.f2 != b.fitness.f2) return a.fitness.f2 > b.fitness.f2;
  return lex_less(a.x, b.x);
}

}  // namespace

const Member& Population::best_feasible() const {
  return *std::min_element(members_.begin(), members_.end(),
                           [](const Member& a, const Member& b) { return better_output(a, b); });
}

const Member* Population::best_within(std::size_t m) const {
  const Member* best = nullptr;
  for (const Member& x : members_) {
    if (x.x.cardinality() > m || !x.fitness.f1.is_feasible()) continue;
    if (best == nullptr || better_output(x, *best)) best = &x;
  }
  return best;
}

std::optional<std::string> Population::invariant_violation(const PartitionMatroid& m) const {
  if (members_.size() > static_cast<std::size_t>(m.total()) + 1) {
    return "population size " + std::to_string(members_.size()) + " exceeds d+1";
  }
  bool has_empty = false;
  std::vector<char> seen(m.ground_size() + 1, 0);
  for (const Member& x : members_) {
    if (x.fitness.f2 != -static_cast<long>(x.x.cardinality())) return "f2 != -|X|";
    if (x.fitness.f1.is_feasible() != m.feasible(x.x)) return "f1 feasibility out of date";
    if (x.x.empty_set()) has_empty = true;
    if (seen[x.x.cardinality()]++) {
      return "two members with cardinality " + std::to_string(x.x.cardinality());
    }
  }
  if (!has_empty) return "empty set missing";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (std::size_t j = 0; j < members_.size(); ++j) {
      if (i != j && strictly_dominates(members_[i].fitness, members_[j].fitness)) {
        return "member " + std::to_string(i) + " dominates member " + std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

}  // namespace pomc
