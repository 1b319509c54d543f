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

#include "pomc/greedy.hpp"

#include "pomc/error.hpp"

namespace pomc {

GreedyResult greedy_solve(Oracle& oracle, const PartitionMatroid& m, GreedyStop stop) {
  const std::size_t n = m.ground_size();
  require(oracle.function().ground_size() == n, "objective and matroid sizes differ");
  Solution x(n);
  double value = oracle.evaluate(x);
  std::vector<int> counts(m.block_count(), 0);
  while (true) {
    bool found = false;
    std::size_t best_v = 0;
    double best_value = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (x.contains(v) || !m.can_add(counts, v)) continue;
      x.set(v, true);
      const double candidate = oracle.evaluate(x);
      x.set(v, false);
      if (!found || candidate > best_value) {
        found = true;
        best_v = v;
        best_value = candidate;
      }
    }
    if (!found) break;
    if (stop == GreedyStop::kPositiveGain && !(best_value > value)) break;
    x.set(best_v, true);
    ++counts[m.block_of(best_v)];
    value = best_value;
  }
  return GreedyResult{std::move(x), value};
}

const char* to_string(GreedyStop stop) {
  switch (stop) {
    case GreedyStop::kPositiveGain:
      return "positive-gain";
    case GreedyStop::kFillBudget:
      return "fill-budget";
  }
  return "?";
}

GreedyStop parse_greedy_stop(const std::string& name) {
  if (name == "positive-gain") return GreedyStop::kPositiveGain;
  if (name == "fill-budget") return GreedyStop::kFillBudget;
  throw ContractError("unknown greedy stop policy: " + name);
}

}  // namespace pomc
