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

#include <random>
#include <set>
#include <sstream>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pomc/error.hpp"
#include "pomc/maxcut.hpp"

namespace pomc {
namespace {

TEST(GenerateGraphTest, EdgeCountsFromDensity) {
  EXPECT_EQ(edge_target(200, 0.01), 400u);
  EXPECT_EQ(edge_target(200, 0.2), 8000u);
  std::mt19937_64 rng(1);
  EXPECT_EQ(generate_graph(200, 0.01, rng).edges().size(), 400u);
  EXPECT_EQ(generate_graph(200, 0.2, rng).edges().size(), 8000u);
}

TEST(GenerateGraphTest, SmallGraphInvariants) {
  std::mt19937_64 rng(2);
  const WeightedGraph g = generate_graph(10, 0.05, rng);
  ASSERT_EQ(g.edges().size(), 5u);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& e : g.edges()) {
    EXPECT_NE(e.u, e.v);
    EXPECT_GE(e.weight, 0.0);
    EXPECT_LE(e.weight, 1.0);
    EXPECT_TRUE(pairs.insert(std::minmax(e.u, e.v)).second);
  }
}

TEST(GenerateGraphTest, CompleteGraphWhenAllPairsRequested) {
  std::mt19937_64 rng(3);
  // floor(0.45 * 100) = 45 = 10 * 9 / 2
  EXPECT_EQ(generate_graph(10, 0.45, rng).edges().size(), 45u);
  EXPECT_THROW(generate_graph(10, 0.46, rng), ContractError);
  EXPECT_THROW(generate_graph(10, 0.0, rng), ContractError);
}

TEST(GenerateGraphTest, DeterministicGivenSeed) {
  std::mt19937_64 a(9), b(9);
  const auto ga = generate_graph(30, 0.1, a);
  const auto gb = generate_graph(30, 0.1, b);
  std::ostringstream sa, sb;
  write_graph(sa, ga);
  write_graph(sb, gb);
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(WeightedGraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(WeightedGraph(3, {{0, 0, 0.5}}), ContractError);
  EXPECT_THROW(WeightedGraph(3, {{0, 1, 0.5}, {1, 0, 0.2}}), ContractError);
  EXPECT_THROW(WeightedGraph(3, {{0, 3, 0.5}}), ContractError);
  EXPECT_THROW(WeightedGraph(3, {{0, 1, 1.5}}), ContractError);
}

TEST(CutValueTest, Examples) {
  const WeightedGraph triangle(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  EXPECT_EQ(cut_value(triangle, Solution(3)), 0.0);
  EXPECT_EQ(cut_value(triangle, Solution(3, {0, 1, 2})), 0.0);
  EXPECT_EQ(cut_value(triangle, Solution(3, {0})), 2.0);
  EXPECT_THROW(cut_value(triangle, Solution(4)), ContractError);
}

TEST(CutValueTest, MatchesAdjacencyOracleAndIsSymmetric) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = generate_graph(8, 0.3, rng);
    const auto adj = testing::adjacency(g);
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      const double v = cut_value(g, Solution::from_mask(8, mask));
      EXPECT_NEAR(v, testing::naive_cut(adj, mask), 1e-12);
      EXPECT_NEAR(v, cut_value(g, Solution::from_mask(8, ~mask & 255u)), 1e-12);
    }
  }
}

// f(Y + v) - f(Y) <= f(X + v) - f(X) for all X ⊆ Y, v ∉ Y.
TEST(CutValueTest, SubmodularOnSmallGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const WeightedGraph g = generate_graph(7, 0.35, rng);
    const auto adj = testing::adjacency(g);
    for (std::uint64_t y = 0; y < 128; ++y) {
      for (std::uint64_t x = y;; x = (x - 1) & y) {
        for (std::size_t v = 0; v < 7; ++v) {
          const std::uint64_t bit = std::uint64_t{1} << v;
          if (y & bit) continue;
          const double gy = testing::naive_cut(adj, y | bit) - testing::naive_cut(adj, y);
          const double gx = testing::naive_cut(adj, x | bit) - testing::naive_cut(adj, x);
          ASSERT_LE(gy, gx + 1e-9);
        }
        if (x == 0) break;
      }
    }
  }
}

TEST(GraphIoTest, RoundTripIsBitExact) {
  std::mt19937_64 rng(6);
  const WeightedGraph g = generate_graph(40, 0.1, rng);
  std::stringstream ss;
  write_graph(ss, g);
  const WeightedGraph back = read_graph(ss);
  ASSERT_EQ(back.vertex_count(), g.vertex_count());
  ASSERT_EQ(back.edges().size(), g.edges().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    EXPECT_EQ(back.edges()[i].u, g.edges()[i].u);
    EXPECT_EQ(back.edges()[i].v, g.edges()[i].v);
    EXPECT_EQ(back.edges()[i].weight, g.edges()[i].weight);
  }
  std::ostringstream again;
  write_graph(again, back);
  EXPECT_EQ(again.str(), ss.str());
}

TEST(GraphIoTest, HeaderAndLines) {
  std::ostringstream out;
  write_graph(out, WeightedGraph(3, {{0, 2, 0.5}, {1, 2, 0.1}}));
  EXPECT_EQ(out.str(), "3 2\n0 2 0.5\n1 2 0.1\n");
}

TEST(GraphIoTest, MalformedInputRejected) {
  std::istringstream short_file("3 2\n0 1 0.5\n");
  EXPECT_THROW(read_graph(short_file), ContractError);
  std::istringstream bad_number("3 1\n0 1 abc\n");
  EXPECT_THROW(read_graph(bad_number), ContractError);
  std::istringstream trailing("3 1\n0 1 0.5\n1 2 0.5\n");
  EXPECT_THROW(read_graph(trailing), ContractError);
}

}  // namespace
}  // namespace pomc
