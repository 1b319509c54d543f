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

#include "pomc/objective.hpp"

#include <cmath>

#include "pomc/error.hpp"

namespace pomc {

double Oracle::evaluate(const Solution& x) {
  require(x.size() == f_->ground_size(), "solution length does not match the objective");
  ++count_;
  const double v = f_->value(x);
  require(v >= 0.0, "objective returned a negative or NaN value");
  return v;
}

ModularFunction::ModularFunction(std::vector<double> weights) : weights_(std::move(weights)) {
  for (double w : weights_) require(w >= 0.0, "modular weights must be non-negative");
}

double ModularFunction::value(const Solution& x) const {
  double sum = 0.0;
  const auto& bits = x.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) sum += weights_[i];
  }
  return sum;
}

CoverageFunction::CoverageFunction(std::vector<std::vector<std::size_t>> covers,
                                   std::vector<double> item_weights)
    : covers_(std::move(covers)), item_weights_(std::move(item_weights)) {
  for (double w : item_weights_) require(w >= 0.0, "item weights must be non-negative");
  for (const auto& c : covers_) {
    for (std::size_t item : c) require(item < item_weights_.size(), "covered item out of range");
  }
}

double CoverageFunction::value(const Solution& x) const {
  std::vector<char> covered(item_weights_.size(), 0);
  const auto& bits = x.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits[i]) continue;
    for (std::size_t item : covers_[i]) covered[item] = 1;
  }
  double sum = 0.0;
  for (std::size_t item = 0; item < covered.size(); ++item) {
    if (covered[item]) sum += item_weights_[item];
  }
  return sum;
}

}  // namespace pomc
