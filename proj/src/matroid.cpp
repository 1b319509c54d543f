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

#include "pomc/matroid.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "pomc/error.hpp"

namespace pomc {

PartitionMatroid::PartitionMatroid(std::size_t n, std::vector<std::vector<std::size_t>> blocks,
                                   std::vector<int> thresholds)
    : blocks_(std::move(blocks)), block_of_(n, std::numeric_limits<std::size_t>::max()) {
  require(!blocks_.empty(), "partition needs at least one block");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    require(!blocks_[b].empty(), "partition block " + std::to_string(b) + " is empty");
    for (std::size_t e : blocks_[b]) {
      require(e < n, "partition element " + std::to_string(e) + " out of range");
      require(block_of_[e] == std::numeric_limits<std::size_t>::max(),
              "element " + std::to_string(e) + " appears in two blocks");
      block_of_[e] = b;
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    require(block_of_[e] != std::numeric_limits<std::size_t>::max(),
            "element " + std::to_string(e) + " is in no block");
  }
  set_thresholds(std::move(thresholds));
}

PartitionMatroid PartitionMatroid::uniform(std::size_t n, int threshold) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return PartitionMatroid(n, {std::move(all)}, {threshold});
}

PartitionMatroid PartitionMatroid::equal_blocks(std::span<const std::size_t> order, std::size_t k,
                                                std::vector<int> thresholds) {
  require(k >= 1 && order.size() % k == 0, "k must divide n for equal blocks");
  const std::size_t per = order.size() / k;
  std::vector<std::vector<std::size_t>> blocks(k);
  for (std::size_t b = 0; b < k; ++b) {
    blocks[b].assign(order.begin() + b * per, order.begin() + (b + 1) * per);
    std::sort(blocks[b].begin(), blocks[b].end());
  }
  return PartitionMatroid(order.size(), std::move(blocks), std::move(thresholds));
}

void PartitionMatroid::validate_thresholds(const std::vector<int>& thresholds) const {
  require(thresholds.size() == blocks_.size(), "need exactly one threshold per block");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    require(thresholds[b] >= 1 && static_cast<std::size_t>(thresholds[b]) <= blocks_[b].size(),
            "threshold " + std::to_string(thresholds[b]) + " for block " + std::to_string(b) +
                " outside [1, " + std::to_string(blocks_[b].size()) + "]");
  }
}

void PartitionMatroid::set_thresholds(std::vector<int> thresholds) {
  validate_thresholds(thresholds);
  thresholds_ = std::move(thresholds);
  total_ = 0;
  min_ = std::numeric_limits<int>::max();
  for (int d : thresholds_) {
    total_ += d;
    min_ = std::min(min_, d);
  }
}

std::vector<int> PartitionMatroid::block_counts(const Solution& x) const {
  require(x.size() == ground_size(), "solution length does not match the ground set");
  std::vector<int> counts(blocks_.size(), 0);
  const auto& bits = x.bits();
  for (std::size_t e = 0; e < bits.size(); ++e) {
    if (bits[e]) ++counts[block_of_[e]];
  }
  return counts;
}

bool PartitionMatroid::feasible(const Solution& x) const {
  require(x.size() == ground_size(), "solution length does not match the ground set");
  // Anything within the smallest threshold is feasible regardless of blocks.
  if (x.cardinality() <= static_cast<std::size_t>(min_)) return true;
  if (x.cardinality() > static_cast<std::size_t>(total_)) return false;
  const auto counts = block_counts(x);
  for (std::size_t b = 0; b < counts.size(); ++b) {
    if (counts[b] > thresholds_[b]) return false;
  }
  return true;
}

}  // namespace pomc
