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
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "pomc/matroid.hpp"

namespace pomc {

struct ChangeSchedule {
  std::vector<double> levels;  // b_1..b_m, each in [0, 1]
  std::uint64_t interval = 0;  // evaluations between changes
};

// b_1 ~ U(0,1); b_{i+1} = clamp(b_i + N(0, sigma^2), 0, 1).
std::vector<double> generate_levels(std::size_t m, double sigma, std::mt19937_64& rng);

// One clamped random-walk step, split out so a known Gaussian draw can be fed in.
double next_level(double previous, double gaussian_draw);

// d_i = round_half_up(max(b * |B_i|, 1)), capped at |B_i|.
std::vector<int> thresholds_at(double level, const PartitionMatroid& m);
int threshold_for(double level, std::size_t block_size);

// One level per line, shortest round-trip decimal form.
void write_levels(std::ostream& out, const std::vector<double>& levels);
std::vector<double> read_levels(std::istream& in);
void save_levels(const std::string& path, const std::vector<double>& levels);
std::vector<double> load_levels(const std::string& path);

}  // namespace pomc
