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
#include <vector>

#include "pomc/solution.hpp"

namespace pomc {

// A set function f: 2^V -> R+. Implementations must be pure so that one
// instance can be shared by concurrent optimizers and enumeration kernels.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual std::size_t ground_size() const = 0;
  virtual double value(const Solution& x) const = 0;
};

// Counting front end to a SetFunction. Every evaluate() is one unit of time.
class Oracle {
 public:
  explicit Oracle(const SetFunction& f) : f_(&f) {}

  // Throws ContractError on a length mismatch or a negative / NaN value.
  double evaluate(const Solution& x);

  std::uint64_t eval_count() const { return count_; }
  const SetFunction& function() const { return *f_; }

 private:
  const SetFunction* f_;
  std::uint64_t count_ = 0;
};

// f(X) = sum of w_i over i in X. Weights must be non-negative.
class ModularFunction final : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights);
  std::size_t ground_size() const override { return weights_.size(); }
  double value(const Solution& x) const override;
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// Weighted coverage: element i covers a set of items; f(X) is the total weight
// of items covered by X. Monotone and submodular.
class CoverageFunction final : public SetFunction {
 public:
  CoverageFunction(std::vector<std::vector<std::size_t>> covers, std::vector<double> item_weights);
  std::size_t ground_size() const override { return covers_.size(); }
  double value(const Solution& x) const override;

 private:
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<double> item_weights_;
};

}  // namespace pomc
