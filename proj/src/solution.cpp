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

#include "pomc/solution.hpp"

#include "pomc/error.hpp"

namespace pomc {

Solution::Solution(std::size_t n, std::initializer_list<std::size_t> members) : bits_(n, 0) {
  for (std::size_t i : members) {
    require(i < n, "element index out of range");
    set(i, true);
  }
}

Solution Solution::from_mask(std::size_t n, std::uint64_t mask) {
  require(n <= 64, "from_mask needs n <= 64");
  Solution x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) x.set(i, true);
  }
  return x;
}

void Solution::set(std::size_t i, bool value) {
  const std::uint8_t b = value ? 1 : 0;
  if (bits_[i] == b) return;
  bits_[i] = b;
  if (value) {
    ++count_;
  } else {
    --count_;
  }
}

void Solution::flip(std::size_t i) { set(i, bits_[i] == 0); }

std::vector<std::size_t> Solution::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t Solution::to_mask() const {
  require(bits_.size() <= 64, "to_mask needs n <= 64");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::string Solution::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

bool lex_less(const Solution& a, const Solution& b) { return a.bits() < b.bits(); }

}  // namespace pomc
