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

#include "pomc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "pomc/error.hpp"
#include "pomc/text_io.hpp"

namespace pomc {

double next_level(double previous, double gaussian_draw) {
  return std::max(std::min(previous + gaussian_draw, 1.0), 0.0);
}

std::vector<double> generate_levels(std::size_t m, double sigma, std::mt19937_64& rng) {
  require(m >= 1, "need at least one level");
  require(sigma > 0.0, "sigma must be positive");
  std::uniform_real_distribution<double> first(0.0, 1.0);
  std::normal_distribution<double> step(0.0, sigma);
  std::vector<double> levels;
  levels.reserve(m);
  levels.push_back(first(rng));
  while (levels.size() < m) levels.push_back(next_level(levels.back(), step(rng)));
  return levels;
}

int threshold_for(double level, std::size_t block_size) {
  require(level >= 0.0 && level <= 1.0, "level outside [0, 1]");
  const double raw = std::max(level * static_cast<double>(block_size), 1.0);
  const int rounded = static_cast<int>(std::floor(raw + 0.5));
  return std::min(rounded, static_cast<int>(block_size));
}

std::vector<int> thresholds_at(double level, const PartitionMatroid& m) {
  std::vector<int> d(m.block_count());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = threshold_for(level, m.block_size(i));
  return d;
}

void write_levels(std::ostream& out, const std::vector<double>& levels) {
  for (double b : levels) out << format_double(b) << '\n';
}

std::vector<double> read_levels(std::istream& in) {
  std::vector<double> levels;
  std::string token;
  while (in >> token) {
    const double b = parse_double(token);
    require(b >= 0.0 && b <= 1.0, "schedule level outside [0, 1]: " + token);
    levels.push_back(b);
  }
  require(!levels.empty(), "schedule file holds no levels");
  return levels;
}

void save_levels(const std::string& path, const std::vector<double>& levels) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot open " + path);
  write_levels(out, levels);
  require(static_cast<bool>(out), "write failed: " + path);
}

std::vector<double> load_levels(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open " + path);
  return read_levels(in);
}

}  // namespace pomc
