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
#include <optional>
#include <string>
#include <vector>

#include "pomc/fitness.hpp"
#include "pomc/matroid.hpp"
#include "pomc/objective.hpp"
#include "pomc/solution.hpp"

namespace pomc {

// An evaluated solution. `raw` is f(X) regardless of feasibility so that a
// threshold change can re-derive f1 without calling the oracle again.
struct Member {
  Solution x;
  double raw = 0.0;
  BiFitness fitness;
};

// Derives the bi-objective fitness of x from an already known f(x).
BiFitness derive_fitness(const Solution& x, double raw, const PartitionMatroid& m);

// One oracle call.
Member eval_bi(const Solution& x, Oracle& oracle, const PartitionMatroid& m);

// Mutually non-dominated archive holding at most one member per cardinality.
class Population {
 public:
  Population() = default;
  explicit Population(Member seed) { members_.push_back(std::move(seed)); }

  // Rejects y if some member strictly dominates it; otherwise drops every
  // member that y weakly dominates and adds y. Returns whether y was added.
  bool insert(Member y);

  // Recomputes f1 of every member from its cached raw value under m.
  void refresh(const PartitionMatroid& m);

  // Removes every member weakly dominated by a different member.
  void prune_dominated();

  std::size_t size() const { return members_.size(); }
  const Member& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Member>& members() const { return members_; }

  // Largest f1, then larger f2, then lexicographically lowest bit vector.
  const Member& best_feasible() const;

  // Best feasible member with |X| <= m, if any.
  const Member* best_within(std::size_t m) const;

  // Description of the first broken archive invariant, or nullopt.
  std::optional<std::string> invariant_violation(const PartitionMatroid& m) const;

 private:
  std::vector<Member> members_;
};

}  // namespace pomc
