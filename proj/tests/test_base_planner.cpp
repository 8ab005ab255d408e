// Copyright (c) 2026 The actopt Authors. All rights reserved.
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "actopt/base_planner.hpp"
#include "actopt/costmap.hpp"
#include "oracles.hpp"

using namespace actopt;

namespace
{

CostMap flat_map(int w, int h, double res = 1.0)
{
  CostMap m;
  m.geometry = {w, h, res, 0.0, 0.0};
  m.cost = ScalarField(m.geometry, 0.0);
  m.hard_threshold = 1000.0;
  return m;
}

void expect_connected(const CostMap & m, const CellPath & p)
{
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    EXPECT_FALSE(m.lethal(p.cells[i].col, p.cells[i].row));
    if (i > 0) {
      EXPECT_LE(std::abs(p.cells[i].col - p.cells[i - 1].col), 1);
      EXPECT_LE(std::abs(p.cells[i].row - p.cells[i - 1].row), 1);
      EXPECT_FALSE(p.cells[i] == p.cells[i - 1]);
    }
  }
}

/// Random costs in [0, 40) with about 25% lethal cells.
CostMap random_map(std::mt19937_64 & rng, int w, int h)
{
  CostMap m = flat_map(w, h, 0.2);
  std::uniform_real_distribution<double> cost(0.0, 40.0);
  std::bernoulli_distribution wall(0.25);
  for (auto & v : m.cost.data()) {
    v = wall(rng) ? 1000.0 + cost(rng) : cost(rng);
  }
  return m;
}

}  // namespace

TEST(ClipGoal, InsideMap)
{
  const GridGeometry g{10, 6, 0.5, 0.0, 0.0};
  EXPECT_EQ(clip_goal({2.1, 1.4}, g), (CellIndex{4, 3}));
}

TEST(ClipGoal, BeyondPlusX)
{
  const GridGeometry g{10, 7, 0.5, 0.0, 0.0};
  EXPECT_EQ(clip_goal({40.0, 1.5}, g), (CellIndex{9, 3}));
}

TEST(ClipGoal, BeyondCorner)
{
  const GridGeometry g{10, 7, 0.5, 0.0, 0.0};
  EXPECT_EQ(clip_goal({40.0, 40.0}, g), (CellIndex{9, 6}));
  EXPECT_EQ(clip_goal({-4.0, -9.0}, g), (CellIndex{0, 0}));
}

TEST(Astar, EmptyMapDiagonal)
{
  const CostMap m = flat_map(8, 8, 0.5);
  const CellPath p = astar(m, {0, 0}, {5, 5}, 1.0);
  ASSERT_EQ(p.cells.size(), 6u);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(p.cells[i], (CellIndex{i, i}));
  }
  EXPECT_NEAR(cell_path_cost(m, p, 1.0), 5.0 * std::sqrt(2.0) * 0.5, 1e-12);
}

TEST(Astar, SingleRow)
{
  const CostMap m = flat_map(9, 1);
  const CellPath p = astar(m, {1, 0}, {7, 0}, 1.0);
  ASSERT_EQ(p.cells.size(), 7u);
  for (int i = 0; i < 7; ++i) {
    EXPECT_EQ(p.cells[i], (CellIndex{1 + i, 0}));
  }
}

TEST(Astar, WallWithGapMatchesDijkstra)
{
  CostMap m = flat_map(32, 32, 0.2);
  for (int r = 0; r < 32; ++r) {
    if (r != 21) {
      m.cost(16, r) = 1500.0;
    }
  }
  const CellPath p = astar(m, {3, 4}, {28, 6}, 1.0);
  expect_connected(m, p);
  bool through_gap = false;
  for (const auto & c : p.cells) {
    through_gap |= c == CellIndex{16, 21};
  }
  EXPECT_TRUE(through_gap);
  const auto dist = oracle::dijkstra(m, 3, 4, 1.0);
  EXPECT_NEAR(cell_path_cost(m, p, 1.0), dist[m.geometry.index(28, 6)], 1e-9);
}

TEST(Astar, NoDiagonalSqueeze)
{
  CostMap m = flat_map(2, 2);
  m.cost(1, 0) = 2000.0;
  m.cost(0, 1) = 2000.0;
  EXPECT_THROW(astar(m, {0, 0}, {1, 1}, 1.0), NoPathError);
}

TEST(Astar, Unreachable)
{
  CostMap m = flat_map(10, 10);
  for (int r = 0; r < 10; ++r) {
    m.cost(5, r) = 1000.0;
  }
  EXPECT_THROW(astar(m, {1, 1}, {8, 8}, 1.0), NoPathError);
}

TEST(Astar, InvalidEndpoints)
{
  CostMap m = flat_map(6, 6);
  m.cost(2, 2) = 1000.0;
  EXPECT_THROW(astar(m, {2, 2}, {5, 5}, 1.0), InvalidEndpointError);
  EXPECT_THROW(astar(m, {0, 0}, {2, 2}, 1.0), InvalidEndpointError);
  EXPECT_THROW(astar(m, {0, 0}, {6, 0}, 1.0), InvalidEndpointError);
  EXPECT_THROW(astar(m, {-1, 0}, {3, 3}, 1.0), InvalidEndpointError);
  EXPECT_THROW(astar(m, {0, 0}, {3, 3}, -1.0), std::invalid_argument);
}

TEST(Astar, OptimalOnRandomMaps)
{
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> cell(0, 39);
  int solved = 0;
  for (int t = 0; t < 40; ++t) {
    CostMap m = random_map(rng, 40, 40);
    const CellIndex s{cell(rng), cell(rng)};
    const CellIndex g{cell(rng), cell(rng)};
    m.cost(s.col, s.row) = 0.0;
    m.cost(g.col, g.row) = 0.0;
    const auto dist = oracle::dijkstra(m, s.col, s.row, 1.0);
    const double want = dist[m.geometry.index(g.col, g.row)];
    if (std::isinf(want)) {
      EXPECT_THROW(astar(m, s, g, 1.0), NoPathError);
      continue;
    }
    const CellPath p = astar(m, s, g, 1.0);
    expect_connected(m, p);
    EXPECT_EQ(p.cells.front(), s);
    EXPECT_EQ(p.cells.back(), g);
    EXPECT_NEAR(cell_path_cost(m, p, 1.0), want, 1e-9 * std::max(1.0, want));
    ++solved;
  }
  EXPECT_GT(solved, 20);
}

TEST(Astar, HeuristicAdmissible)
{
  std::mt19937_64 rng(102);
  for (int t = 0; t < 10; ++t) {
    CostMap m = random_map(rng, 30, 30);
    m.cost(29, 29) = 0.0;
    const auto to_go = oracle::dijkstra_to(m, 29, 29, 1.0);
    for (int r = 0; r < 30; ++r) {
      for (int c = 0; c < 30; ++c) {
        const double h = std::hypot(29 - c, 29 - r) * m.geometry.resolution;
        ASSERT_LE(h, to_go[m.geometry.index(c, r)] + 1e-12);
      }
    }
  }
}

TEST(Astar, Deterministic)
{
  const CostMap m = flat_map(30, 30);
  const CellPath a = astar(m, {0, 0}, {29, 13}, 1.0);
  const CellPath b = astar(m, {0, 0}, {29, 13}, 1.0);
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    EXPECT_EQ(a.cells[i], b.cells[i]);
  }
}

TEST(Astar, TraversalWeightChangesRoute)
{
  CostMap m = flat_map(21, 11);
  // a soft band across the straight line
  for (int r = 0; r < 8; ++r) {
    m.cost(10, r) = 50.0;
  }
  const CellPath cheap = astar(m, {0, 2}, {20, 2}, 0.0);
  const CellPath costly = astar(m, {0, 2}, {20, 2}, 1.0);
  EXPECT_EQ(cheap.cells.size(), 21u);
  bool detour = false;
  for (const auto & c : costly.cells) {
    detour |= c.row >= 8;
  }
  EXPECT_TRUE(detour);
}

TEST(PlanBasePath, GoalClippedToBoundary)
{
  const CostMap m = flat_map(12, 8, 0.5);
  const CellPath p = plan_base_path(m, {1.0, 1.0, 0.0}, {50.0, 2.0}, 1.0);
  EXPECT_EQ(p.cells.front(), (CellIndex{2, 2}));
  EXPECT_EQ(p.cells.back(), (CellIndex{11, 4}));
}

TEST(PlanBasePath, StartEqualsGoal)
{
  const CostMap m = flat_map(5, 5);
  const CellPath p = plan_base_path(m, {2.0, 2.0, 0.3}, {2.2, 1.9}, 1.0);
  ASSERT_EQ(p.cells.size(), 1u);
  EXPECT_EQ(p.cells[0], (CellIndex{2, 2}));
}

TEST(PlanBasePath, StartOutsideMap)
{
  const CostMap m = flat_map(5, 5);
  EXPECT_THROW(plan_base_path(m, {-3.0, 2.0, 0.0}, {2.0, 2.0}, 1.0), InvalidEndpointError);
}

TEST(PlanBasePath, RoutesAroundBlob)
{
  OccupancyGrid g({80, 60, 0.2, 0.0, 0.0});
  for (int r = 0; r < 60; ++r) {
    for (int c = 0; c < 80; ++c) {
      if (std::hypot(c - 40, r - 30) < 12.0) {
        g.hard(c, r) = 1;
      }
    }
  }
  const CostMap m = build_costmap(g, {});
  const CellPath p = plan_base_path(m, {1.0, 6.0, 0.0}, {15.0, 6.0}, 1.0);
  expect_connected(m, p);
  const auto dist = oracle::dijkstra(m, 5, 30, 1.0);
  EXPECT_NEAR(cell_path_cost(m, p, 1.0), dist[m.geometry.index(75, 30)], 1e-6);
}
