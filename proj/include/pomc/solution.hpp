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
#include <initializer_list>
#include <string>
#include <vector>

namespace pomc {

// A subset of the ground set {0, ..., n-1} stored as one byte per element.
// The length is fixed at construction; the cardinality is kept in sync.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::size_t n) : bits_(n, 0) {}
  Solution(std::size_t n, std::initializer_list<std::size_t> members);

  // Bit i of `mask` is element i. Requires n <= 64.
  static Solution from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const { return bits_.size(); }
  std::size_t cardinality() const { return count_; }
  bool empty_set() const { return count_ == 0; }

  bool contains(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  std::vector<std::size_t> elements() const;
  std::uint64_t to_mask() const;

  // "0110..." with element 0 first.
  std::string to_string() const;

  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const Solution& a, const Solution& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

// Lexicographic order on the bit vector, element 0 most significant,
// absent (0) before present (1).
bool lex_less(const Solution& a, const Solution& b);

}  // namespace pomc
