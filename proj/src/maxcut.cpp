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

#include "pomc/maxcut.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "pomc/error.hpp"
#include "pomc/text_io.hpp"

namespace pomc {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : edges_) {
    require(e.u < n_ && e.v < n_, "edge endpoint out of range");
    require(e.u != e.v, "self-loops are not allowed");
    require(e.weight >= 0.0 && e.weight <= 1.0, "edge weight outside [0, 1]");
    const auto key = std::minmax(e.u, e.v);
    require(seen.insert(key).second, "duplicate edge");
  }
}

std::size_t edge_target(std::size_t n, double density) {
  require(density > 0.0 && density <= 1.0, "density must lie in (0, 1]");
  const double nn = static_cast<double>(n) * static_cast<double>(n);
  return static_cast<std::size_t>(std::floor(density * nn));
}

WeightedGraph generate_graph(std::size_t n, double density, std::mt19937_64& rng) {
  const std::size_t m = edge_target(n, density);
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  require(m <= pairs, "density too large: floor(density*n^2) exceeds n(n-1)/2 distinct pairs");

  // Pair index p enumerates (u, v), u < v, row by row.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
  all.reserve(pairs);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      all.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
  }

  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pairs - 1);
    std::swap(all[i], all[pick(rng)]);
    edges.push_back(Edge{all[i].first, all[i].second, weight(rng)});
  }
  return WeightedGraph(n, std::move(edges));
}

double cut_value(const WeightedGraph& g, const Solution& x) {
  require(x.size() == g.vertex_count(), "solution length does not match the graph");
  const auto& bits = x.bits();
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    if (bits[e.u] != bits[e.v]) sum += e.weight;
  }
  return sum;
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.vertex_count() << ' ' << g.edges().size() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
  }
}

WeightedGraph read_graph(std::istream& in) {
  std::string a, b, c;
  require(static_cast<bool>(in >> a >> b), "graph file: missing header 'n m'");
  const std::size_t n = parse_unsigned(a);
  const std::size_t m = parse_unsigned(b);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    require(static_cast<bool>(in >> a >> b >> c),
            "graph file: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    edges.push_back(Edge{parse_unsigned(a), parse_unsigned(b), parse_double(c)});
  }
  require(!(in >> a), "graph file: trailing data after the last edge");
  return WeightedGraph(n, std::move(edges));
}

void save_graph(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot open " + path);
  write_graph(out, g);
  require(static_cast<bool>(out), "write failed: " + path);
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open " + path);
  return read_graph(in);
}

}  // namespace pomc
