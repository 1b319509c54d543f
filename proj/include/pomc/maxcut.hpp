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
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "pomc/objective.hpp"
#include "pomc/solution.hpp"

namespace pomc {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0.0;
};

// Undirected weighted graph, one entry per unordered pair, weights in [0, 1].
class WeightedGraph {
 public:
  // Throws ContractError on self-loops, duplicate pairs, out-of-range
  // vertices or weights outside [0, 1].
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

// Samples floor(density * n^2) distinct unordered vertex pairs without
// replacement and gives each a Uniform[0, 1) weight.
WeightedGraph generate_graph(std::size_t n, double density, std::mt19937_64& rng);

// Number of edges generate_graph produces for (n, density).
std::size_t edge_target(std::size_t n, double density);

// Sum of weights of edges with exactly one endpoint in x.
double cut_value(const WeightedGraph& g, const Solution& x);

class MaxCut final : public SetFunction {
 public:
  explicit MaxCut(WeightedGraph g) : graph_(std::move(g)) {}
  std::size_t ground_size() const override { return graph_.vertex_count(); }
  double value(const Solution& x) const override { return cut_value(graph_, x); }
  const WeightedGraph& graph() const { return graph_; }

 private:
  WeightedGraph graph_;
};

// Text format: "n m" then m lines "u v w"; weights use shortest round-trip
// decimal form so that write/read is bit exact.
void write_graph(std::ostream& out, const WeightedGraph& g);
WeightedGraph read_graph(std::istream& in);
void save_graph(const std::string& path, const WeightedGraph& g);
WeightedGraph load_graph(const std::string& path);

}  // namespace pomc
