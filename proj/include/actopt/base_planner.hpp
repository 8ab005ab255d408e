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

#ifndef ACTOPT__BASE_PLANNER_HPP_
#define ACTOPT__BASE_PLANNER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "actopt/costmap.hpp"
#include "actopt/errors.hpp"
#include "actopt/pose.hpp"

namespace actopt
{

struct CellIndex
{
  int col{0};
  int row{0};

  bool operator==(const CellIndex &) const = default;
};

/// Consecutive cells are 8-adjacent.
struct CellPath
{
  std::vector<CellIndex> cells;
};

struct SearchStats
{
  std::size_t expansions{0};
};

/// Cell containing the goal, or the cell holding the closest in-map point.
inline CellIndex clip_goal(const Point2 & goal, const GridGeometry & g)
{
  return {
    std::clamp(g.cell_col(goal.x), 0, g.width - 1),
    std::clamp(g.cell_row(goal.y), 0, g.height - 1)};
}

/// Cost of moving into `to`: metric length scaled by (1 + w * cost(to)).
inline double edge_cost(const CostMap & map, CellIndex from, CellIndex to, double traversal_weight)
{
  const bool diagonal = from.col != to.col && from.row != to.row;
  const double len = map.geometry.resolution * (diagonal ? std::numbers::sqrt2 : 1.0);
  return len * (1.0 + traversal_weight * map.cost(to.col, to.row));
}

/// Moves allowed from `from`: 8-connected, in-map, non-lethal, and no diagonal
/// squeeze between two lethal cells.
template<typename Fn>
void for_each_neighbor(const CostMap & map, CellIndex from, Fn && fn)
{
  const GridGeometry & g = map.geometry;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) {
        continue;
      }
      const CellIndex to{from.col + dc, from.row + dr};
      if (!g.contains(to.col, to.row) || map.lethal(to.col, to.row)) {
        continue;
      }
      if (dr != 0 && dc != 0 &&
        map.lethal(from.col + dc, from.row) && map.lethal(from.col, from.row + dr))
      {
        continue;
      }
      fn(to);
    }
  }
}

inline double cell_path_cost(const CostMap & map, const CellPath & path, double traversal_weight)
{
  double total = 0.0;
  for (std::size_t i = 1; i < path.cells.size(); ++i) {
    total += edge_cost(map, path.cells[i - 1], path.cells[i], traversal_weight);
  }
  return total;
}

/// A* over the costmap with a Euclidean (meters) heuristic. Equal f-scores
/// expand in (row, col) order.
inline CellPath astar(
  const CostMap & map, CellIndex start, CellIndex goal, double traversal_weight,
  SearchStats * stats = nullptr)
{
  const GridGeometry & g = map.geometry;
  if (traversal_weight < 0.0) {
    throw std::invalid_argument("traversal_weight must be non-negative");
  }
  for (const CellIndex & c : {start, goal}) {
    if (!g.contains(c.col, c.row)) {
      throw InvalidEndpointError("endpoint (" + std::to_string(c.col) + ", " +
              std::to_string(c.row) + ") is outside the map");
    }
    if (map.lethal(c.col, c.row)) {
      throw InvalidEndpointError("endpoint (" + std::to_string(c.col) + ", " +
              std::to_string(c.row) + ") is on a lethal cell");
    }
  }

  struct Entry
  {
    double f;
    double g;
    int row;
    int col;
  };
  struct Later
  {
    bool operator()(const Entry & a, const Entry & b) const
    {
      if (a.f != b.f) {return a.f > b.f;}
      if (a.row != b.row) {return a.row > b.row;}
      return a.col > b.col;
    }
  };

  const auto heuristic = [&](CellIndex c) {
      const double dx = double(c.col - goal.col);
      const double dy = double(c.row - goal.row);
      return std::sqrt(dx * dx + dy * dy) * g.resolution;
    };

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(g.size(), inf);
  std::vector<std::int64_t> parent(g.size(), -1);
  std::vector<std::uint8_t> expanded(g.size(), 0);
  std::priority_queue<Entry, std::vector<Entry>, Later> open;

  best[g.index(start.col, start.row)] = 0.0;
  open.push({heuristic(start), 0.0, start.row, start.col});
  std::size_t n_expanded = 0;
  bool found = false;

  while (!open.empty()) {
    const Entry e = open.top();
    open.pop();
    const std::size_t idx = g.index(e.col, e.row);
    if (e.g > best[idx] || (expanded[idx] && e.g == best[idx])) {
      continue;
    }
    expanded[idx] = 1;
    ++n_expanded;
    const CellIndex cur{e.col, e.row};
    if (cur == goal) {
      found = true;
      break;
    }
    for_each_neighbor(map, cur, [&](CellIndex nb) {
        const double ng = e.g + edge_cost(map, cur, nb, traversal_weight);
        const std::size_t nidx = g.index(nb.col, nb.row);
        if (ng < best[nidx]) {
          best[nidx] = ng;
          parent[nidx] = static_cast<std::int64_t>(idx);
          open.push({ng + heuristic(nb), ng, nb.row, nb.col});
        }
      });
  }
  if (stats) {
    stats->expansions = n_expanded;
  }
  if (!found) {
    throw NoPathError("goal (" + std::to_string(goal.col) + ", " + std::to_string(goal.row) +
            ") is unreachable");
  }

  CellPath path;
  for (std::int64_t i = static_cast<std::int64_t>(g.index(goal.col, goal.row)); i >= 0;
    i = parent[static_cast<std::size_t>(i)])
  {
    path.cells.push_back({static_cast<int>(i % g.width), static_cast<int>(i / g.width)});
  }
  std::reverse(path.cells.begin(), path.cells.end());
  return path;
}

/// Plans from the vehicle's cell to the (clipped) goal cell.
inline CellPath plan_base_path(
  const CostMap & map, const WorldPose & start, const Point2 & goal, double traversal_weight,
  SearchStats * stats = nullptr)
{
  const GridGeometry & g = map.geometry;
  if (!g.contains_point(start.x, start.y)) {
    throw InvalidEndpointError("start pose lies outside the map");
  }
  const CellIndex s{g.cell_col(start.x), g.cell_row(start.y)};
  return astar(map, s, clip_goal(goal, g), traversal_weight, stats);
}

}  // namespace actopt

#endif  // ACTOPT__BASE_PLANNER_HPP_
