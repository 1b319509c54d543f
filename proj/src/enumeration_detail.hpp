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

// Mask helpers shared by the parallel and serial enumeration kernels.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "pomc/error.hpp"
#include "pomc/matroid.hpp"

namespace pomc::detail {

inline void check_guard(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw GuardError(std::string(what) + ": ground set of " + std::to_string(n) +
                     " exceeds the exhaustive limit of " + std::to_string(limit));
  }
}

// Bit-vector lexicographic order (element 0 first, absent before present).
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);
  return (a & low) == 0;
}

inline std::vector<std::uint64_t> block_masks(const PartitionMatroid& m) {
  std::vector<std::uint64_t> masks(m.block_count(), 0);
  for (std::size_t b = 0; b < m.block_count(); ++b) {
    for (std::size_t e : m.blocks()[b]) masks[b] |= std::uint64_t{1} << e;
  }
  return masks;
}

inline bool mask_feasible(std::uint64_t x, const std::vector<std::uint64_t>& masks,
                          const std::vector<int>& thresholds) {
  for (std::size_t b = 0; b < masks.size(); ++b) {
    if (std::popcount(x & masks[b]) > thresholds[b]) return false;
  }
  return true;
}

// Better optimum candidate: larger value, then lexicographically lower set.
inline bool better_candidate(double va, std::uint64_t a, double vb, std::uint64_t b) {
  if (va != vb) return va > vb;
  return mask_lex_less(a, b);
}

// Turns per-(|X|, |L|) minima into the cumulative gamma table, rows
// i = 1..n+1, columns j = 1..n. `group` is (n+1) x (n+1) indexed [s][l].
std::vector<double> ratio_cells(std::size_t n, const std::vector<double>& group);

// epsilon_0..epsilon_{n+1} from per-|X| maxima of f(X \ {v}) - f(X).
std::vector<double> epsilon_prefix(std::size_t n, const std::vector<double>& by_size);

}  // namespace pomc::detail
