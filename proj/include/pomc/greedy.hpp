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

#include <string>

#include "pomc/matroid.hpp"
#include "pomc/objective.hpp"
#include "pomc/solution.hpp"

namespace pomc {

enum class GreedyStop {
  // Stop once no feasible addition has a strictly positive marginal gain.
  kPositiveGain,
  // Keep adding the best feasible element until none can be added.
  kFillBudget,
};

struct GreedyResult {
  Solution x;
  double value = 0.0;
};

// Starts from the empty set and repeatedly adds the feasible element with the
// largest marginal gain, ties to the lowest index. Evaluations are charged to
// `oracle` without limit.
GreedyResult greedy_solve(Oracle& oracle, const PartitionMatroid& m,
                          GreedyStop stop = GreedyStop::kPositiveGain);

const char* to_string(GreedyStop stop);
GreedyStop parse_greedy_stop(const std::string& name);

}  // namespace pomc
