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
#include <span>
#include <vector>

#include "pomc/solution.hpp"

namespace pomc {

// Partition {B_1..B_k} of the ground set with one integer threshold per block.
// A set is independent iff it takes at most d_i elements from block B_i.
class PartitionMatroid {
 public:
  // Throws ContractError unless the blocks partition {0..n-1} and
  // 1 <= d_i <= |B_i| holds for every block.
  PartitionMatroid(std::size_t n, std::vector<std::vector<std::size_t>> blocks,
                   std::vector<int> thresholds);

  // Single block covering {0..n-1}: a cardinality constraint.
  static PartitionMatroid uniform(std::size_t n, int threshold);

  // Blocks of the listed elements, sliced consecutively into k equal parts.
  static PartitionMatroid equal_blocks(std::span<const std::size_t> order, std::size_t k,
                                       std::vector<int> thresholds);

  std::size_t ground_size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t element) const { return block_of_[element]; }
  std::size_t block_size(std::size_t i) const { return blocks_[i].size(); }
  const std::vector<int>& thresholds() const { return thresholds_; }

  // Sum of thresholds (d) and smallest threshold (d-bar).
  int total() const { return total_; }
  int min_threshold() const { return min_; }

  // Replaces every d_i; the same validity rule as the constructor applies.
  void set_thresholds(std::vector<int> thresholds);

  // |X ∩ B_i| for every block.
  std::vector<int> block_counts(const Solution& x) const;

  bool feasible(const Solution& x) const;

  // Whether x stays feasible after adding element v (v must be absent from x).
  bool can_add(const std::vector<int>& counts, std::size_t v) const {
    return counts[block_of_[v]] < thresholds_[block_of_[v]];
  }

 private:
  void validate_thresholds(const std::vector<int>& thresholds) const;

  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<int> thresholds_;
  int total_ = 0;
  int min_ = 0;
};

}  // namespace pomc
