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

#include <compare>

namespace pomc {

// First objective: f(X) when X is feasible, otherwise a sentinel ordered
// strictly below every real value. All infeasible values compare equal.
class PrimaryValue {
 public:
  static PrimaryValue feasible(double v) { return PrimaryValue(true, v); }
  static PrimaryValue infeasible() { return PrimaryValue(false, 0.0); }

  bool is_feasible() const { return feasible_; }
  // Only meaningful for feasible values.
  double value() const { return value_; }

  friend std::partial_ordering operator<=>(const PrimaryValue& a, const PrimaryValue& b) {
    if (a.feasible_ != b.feasible_) return a.feasible_ <=> b.feasible_;
    if (!a.feasible_) return std::partial_ordering::equivalent;
    return a.value_ <=> b.value_;
  }
  friend bool operator==(const PrimaryValue& a, const PrimaryValue& b) {
    return (a <=> b) == 0;
  }

 private:
  PrimaryValue(bool feasible, double v) : feasible_(feasible), value_(v) {}
  bool feasible_ = false;
  double value_ = 0.0;
};

// (f1, f2) with f2 = -|X|; both maximized.
struct BiFitness {
  PrimaryValue f1 = PrimaryValue::infeasible();
  long f2 = 0;

  friend bool operator==(const BiFitness&, const BiFitness&) = default;
};

enum class Dominance {
  kStrict,    // a >= b in both objectives and > in at least one
  kWeakOnly,  // equal in both objectives
  kNone,      // a does not weakly dominate b
};

inline Dominance dominance(const BiFitness& a, const BiFitness& b) {
  const auto c1 = a.f1 <=> b.f1;
  if (c1 < 0 || a.f2 < b.f2) return Dominance::kNone;
  if (c1 == 0 && a.f2 == b.f2) return Dominance::kWeakOnly;
  return Dominance::kStrict;
}

inline bool weakly_dominates(const BiFitness& a, const BiFitness& b) {
  return dominance(a, b) != Dominance::kNone;
}

inline bool strictly_dominates(const BiFitness& a, const BiFitness& b) {
  return dominance(a, b) == Dominance::kStrict;
}

}  // namespace pomc
