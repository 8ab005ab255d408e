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

#ifndef ACTOPT__COSTMAP_HPP_
#define ACTOPT__COSTMAP_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "actopt/distance_transform.hpp"
#include "actopt/errors.hpp"
#include "actopt/grid.hpp"

namespace actopt
{

/// Pre-segmented obstacle layers. A cell may be both hard and soft.
struct OccupancyGrid
{
  GridGeometry geometry;
  Layer hard;
  Layer soft;

  OccupancyGrid() = default;

  explicit OccupancyGrid(const GridGeometry & g)
  : geometry(g), hard(g, 0), soft(g, 0) {}
};

struct CostMapParams
{
  double robot_radius{0.6};
  double halo_radius{2.0};
  double hard_base{1000.0};
  double hard_distance_gain{500.0};
  double soft_base{50.0};
  double soft_distance_gain{25.0};
  double halo_gain_hard{100.0};
  double halo_gain_soft{10.0};

  void validate() const
  {
    if (!(robot_radius >= 0.0) || !(halo_radius >= 0.0)) {
      throw std::invalid_argument("costmap radii must be non-negative");
    }
    if (!(hard_base > soft_base)) {
      throw std::invalid_argument("hard_base must exceed soft_base");
    }
    if (hard_distance_gain < 0.0 || soft_distance_gain < 0.0 || halo_gain_hard < 0.0 ||
      halo_gain_soft < 0.0)
    {
      throw std::invalid_argument("costmap gains must be non-negative");
    }
  }
};

struct CostMap
{
  GridGeometry geometry;
  ScalarField cost;
  /// Cells at or above this value are lethal.
  double hard_threshold{0.0};

  bool lethal(int col, int row) const {return cost(col, row) >= hard_threshold;}
};

// ---------------------------------------------------------------------------
// ASCII grid format
//
//   grid <width> <height> <resolution_m> <origin_x_m> <origin_y_m>
//   <height lines of width chars from '.', 's', 'h'>
//
// The first cell line is row 0 (minimum y). Lines starting with '#' are
// comments.

namespace detail
{

inline bool next_content_line(std::istream & in, std::string & line, std::size_t & line_no)
{
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty() && line.front() == '#') {
      continue;
    }
    return true;
  }
  return false;
}

inline GridGeometry parse_grid_header(
  const std::string & line, std::size_t line_no, const std::string & keyword)
{
  std::istringstream hs(line);
  std::string kw;
  GridGeometry g;
  hs >> kw;
  if (kw != keyword) {
    throw ParseError(line_no, 1, "expected '" + keyword + "' header");
  }
  if (!(hs >> g.width >> g.height >> g.resolution >> g.origin_x >> g.origin_y)) {
    throw ParseError(line_no, 0, "malformed " + keyword + " header");
  }
  std::string extra;
  if (hs >> extra) {
    throw ParseError(line_no, 0, "trailing tokens in " + keyword + " header");
  }
  if (!g.valid()) {
    throw ParseError(line_no, 0, "width, height and resolution must be positive");
  }
  return g;
}

}  // namespace detail

/// Reads an obstacle grid. When `expected` is given the header geometry must
/// match it.
inline OccupancyGrid load_obstacle_grid(
  std::istream & in, const std::optional<GridGeometry> & expected = std::nullopt)
{
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_content_line(in, line, line_no)) {
    throw ParseError(line_no + 1, 0, "missing grid header");
  }
  const GridGeometry g = detail::parse_grid_header(line, line_no, "grid");
  if (expected && !(*expected == g)) {
    throw ParseError(line_no, 0, "grid header does not match the expected geometry");
  }

  OccupancyGrid grid(g);
  for (int row = 0; row < g.height; ++row) {
    if (!detail::next_content_line(in, line, line_no)) {
      throw ParseError(line_no + 1, 0,
              "expected " + std::to_string(g.height) + " grid rows, got " + std::to_string(row));
    }
    if (static_cast<int>(line.size()) != g.width) {
      throw ParseError(line_no, 0,
              "row has " + std::to_string(line.size()) + " cells, expected " +
              std::to_string(g.width));
    }
    for (int col = 0; col < g.width; ++col) {
      switch (line[col]) {
        case '.':
          break;
        case 'h':
          grid.hard(col, row) = 1;
          break;
        case 's':
          grid.soft(col, row) = 1;
          break;
        default:
          throw ParseError(line_no, col + 1,
                  std::string("unknown cell character '") + line[col] + "'");
      }
    }
  }
  while (detail::next_content_line(in, line, line_no)) {
    if (!line.empty()) {
      throw ParseError(line_no, 0, "unexpected content after the last grid row");
    }
  }
  return grid;
}

/// Shortest decimal text that parses back to the same double.
inline std::string format_double(double v)
{
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline void write_obstacle_grid(const OccupancyGrid & grid, std::ostream & out)
{
  const GridGeometry & g = grid.geometry;
  out << "grid " << g.width << ' ' << g.height << ' ' << format_double(g.resolution) << ' ' <<
    format_double(g.origin_x) << ' ' << format_double(g.origin_y) << '\n';
  std::string row_text(static_cast<std::size_t>(g.width), '.');
  for (int row = 0; row < g.height; ++row) {
    for (int col = 0; col < g.width; ++col) {
      row_text[col] = grid.hard(col, row) ? 'h' : (grid.soft(col, row) ? 's' : '.');
    }
    out << row_text << '\n';
  }
}

// ---------------------------------------------------------------------------
// Field operations. Distances are exact Euclidean, measured between cell
// centers in meters.

/// Disk dilation: a cell is set iff some set cell lies within `radius`.
inline Layer dilate(const Layer & layer, double radius)
{
  if (radius < 0.0) {
    throw std::invalid_argument("dilation radius must be non-negative");
  }
  if (radius == 0.0) {
    return layer;
  }
  const GridGeometry & g = layer.geometry();
  const auto d2 = detail::squared_distance_to_sites(layer.data(), g.width, g.height);
  // 1e-9 cell of slack so that radius = k * resolution includes the k-th ring
  const double limit = radius + 1e-9 * g.resolution;
  Layer out(g, 0);
  for (std::size_t i = 0; i < d2.size(); ++i) {
    out.data()[i] = std::sqrt(d2[i]) * g.resolution <= limit ? 1 : 0;
  }
  return out;
}

/// Distance from each set cell to the nearest unset cell (cells beyond the
/// border count as unset); 0 on unset cells.
inline ScalarField interior_distance(const Layer & layer)
{
  const GridGeometry & g = layer.geometry();
  const int pw = g.width + 2;
  const int ph = g.height + 2;
  std::vector<std::uint8_t> free_sites(static_cast<std::size_t>(pw) * ph, 1);
  for (int row = 0; row < g.height; ++row) {
    for (int col = 0; col < g.width; ++col) {
      free_sites[static_cast<std::size_t>(row + 1) * pw + col + 1] = layer(col, row) ? 0 : 1;
    }
  }
  const auto d2 = detail::squared_distance_to_sites(free_sites, pw, ph);

  ScalarField out(g, 0.0);
  for (int row = 0; row < g.height; ++row) {
    for (int col = 0; col < g.width; ++col) {
      if (layer(col, row)) {
        out(col, row) = std::sqrt(d2[static_cast<std::size_t>(row + 1) * pw + col + 1]) *
          g.resolution;
      }
    }
  }
  return out;
}

/// Linear repulsive halo: 1 on set cells, 1 - d / halo_radius on unset cells
/// closer than halo_radius to a set cell, 0 beyond.
inline ScalarField halo_field(const Layer & layer, double halo_radius)
{
  if (halo_radius < 0.0) {
    throw std::invalid_argument("halo radius must be non-negative");
  }
  const GridGeometry & g = layer.geometry();
  ScalarField out(g, 0.0);
  const auto d2 = detail::squared_distance_to_sites(layer.data(), g.width, g.height);
  for (std::size_t i = 0; i < d2.size(); ++i) {
    if (layer.data()[i]) {
      out.data()[i] = 1.0;
    } else if (halo_radius > 0.0 && d2[i] != detail::kInfDistance) {
      const double d = std::sqrt(d2[i]) * g.resolution;
      out.data()[i] = d < halo_radius ? 1.0 - d / halo_radius : 0.0;
    }
  }
  return out;
}

namespace detail
{

inline void add_obstacle_submap(
  ScalarField & cost, const Layer & layer, double robot_radius, double halo_radius,
  double base, double distance_gain, double halo_gain)
{
  const Layer expanded = dilate(layer, robot_radius);
  const ScalarField depth = interior_distance(expanded);
  const ScalarField halo = halo_field(expanded, halo_radius);
  for (std::size_t i = 0; i < cost.data().size(); ++i) {
    cost.data()[i] += expanded.data()[i] ?
      base + distance_gain * depth.data()[i] :
      halo_gain * halo.data()[i];
  }
}

}  // namespace detail

/// Per-cell sum of the hard and soft sub-maps. Each sub-map is
/// `base + gain * depth` inside the dilated region and `halo_gain * halo`
/// around it.
inline CostMap build_costmap(const OccupancyGrid & grid, const CostMapParams & params)
{
  params.validate();
  if (!(grid.hard.geometry() == grid.geometry) || !(grid.soft.geometry() == grid.geometry)) {
    throw std::invalid_argument("obstacle layers do not match the grid geometry");
  }
  CostMap map;
  map.geometry = grid.geometry;
  map.cost = ScalarField(grid.geometry, 0.0);
  map.hard_threshold = params.hard_base;
  detail::add_obstacle_submap(
    map.cost, grid.hard, params.robot_radius, params.halo_radius,
    params.hard_base, params.hard_distance_gain, params.halo_gain_hard);
  detail::add_obstacle_submap(
    map.cost, grid.soft, params.robot_radius, params.halo_radius,
    params.soft_base, params.soft_distance_gain, params.halo_gain_soft);
  return map;
}

inline void write_costmap(const CostMap & map, std::ostream & out)
{
  const GridGeometry & g = map.geometry;
  out << "costmap " << g.width << ' ' << g.height << ' ' << format_double(g.resolution) << ' ' <<
    format_double(g.origin_x) << ' ' << format_double(g.origin_y) << '\n';
  for (int row = 0; row < g.height; ++row) {
    for (int col = 0; col < g.width; ++col) {
      if (col > 0) {
        out << ' ';
      }
      out << format_double(map.cost(col, row));
    }
    out << '\n';
  }
}

/// Reads the export written by write_costmap. The lethal threshold is not part
/// of the format and must be supplied.
inline CostMap read_costmap(std::istream & in, double hard_threshold)
{
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_content_line(in, line, line_no)) {
    throw ParseError(line_no + 1, 0, "missing costmap header");
  }
  CostMap map;
  map.geometry = detail::parse_grid_header(line, line_no, "costmap");
  map.cost = ScalarField(map.geometry, 0.0);
  map.hard_threshold = hard_threshold;
  for (int row = 0; row < map.geometry.height; ++row) {
    if (!detail::next_content_line(in, line, line_no)) {
      throw ParseError(line_no + 1, 0, "missing costmap row");
    }
    std::istringstream ls(line);
    for (int col = 0; col < map.geometry.width; ++col) {
      double v = 0.0;
      if (!(ls >> v) || !std::isfinite(v) || v < 0.0) {
        throw ParseError(line_no, 0, "bad cost value at column " + std::to_string(col));
      }
      map.cost(col, row) = v;
    }
    std::string extra;
    if (ls >> extra) {
      throw ParseError(line_no, 0, "too many values in costmap row");
    }
  }
  return map;
}

}  // namespace actopt

#endif  // ACTOPT__COSTMAP_HPP_
