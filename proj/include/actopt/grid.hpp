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

#ifndef ACTOPT__GRID_HPP_
#define ACTOPT__GRID_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace actopt
{

struct Point2
{
  double x{0.0};
  double y{0.0};
};

/// Metric placement of a row-major grid. `origin_x/origin_y` is the world
/// position of the center of cell (0, 0); row index grows with +y.
struct GridGeometry
{
  int width{0};
  int height{0};
  double resolution{1.0};
  double origin_x{0.0};
  double origin_y{0.0};

  bool valid() const {return width > 0 && height > 0 && resolution > 0.0;}
  std::size_t size() const {return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);}

  bool contains(int col, int row) const
  {
    return col >= 0 && row >= 0 && col < width && row < height;
  }

  std::size_t index(int col, int row) const
  {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(col);
  }

  Point2 cell_center(int col, int row) const
  {
    return {origin_x + col * resolution, origin_y + row * resolution};
  }

  /// Continuous cell coordinates: integer values land on cell centers.
  double to_cell_x(double x) const {return (x - origin_x) / resolution;}
  double to_cell_y(double y) const {return (y - origin_y) / resolution;}

  /// Index of the cell whose square contains the point (may be out of range).
  int cell_col(double x) const {return static_cast<int>(std::floor(to_cell_x(x) + 0.5));}
  int cell_row(double y) const {return static_cast<int>(std::floor(to_cell_y(y) + 0.5));}

  /// True if the point lies inside the union of cell squares.
  bool contains_point(double x, double y) const {return contains(cell_col(x), cell_row(y));}

  bool operator==(const GridGeometry &) const = default;
};

/// Dense row-major field with the dimensions of a GridGeometry.
template<typename T>
class Grid
{
public:
  Grid() = default;

  explicit Grid(const GridGeometry & geometry, T fill = T{})
  : geometry_(geometry), data_(geometry.size(), fill)
  {
    if (!geometry.valid()) {
      throw std::invalid_argument("grid geometry must have positive size and resolution");
    }
  }

  const GridGeometry & geometry() const {return geometry_;}
  int width() const {return geometry_.width;}
  int height() const {return geometry_.height;}

  T & operator()(int col, int row) {return data_[geometry_.index(col, row)];}
  const T & operator()(int col, int row) const {return data_[geometry_.index(col, row)];}

  std::vector<T> & data() {return data_;}
  const std::vector<T> & data() const {return data_;}

  bool operator==(const Grid &) const = default;

private:
  GridGeometry geometry_{};
  std::vector<T> data_;
};

// std::vector<bool> proxies get in the way of spans and bit-exact compares.
using Layer = Grid<std::uint8_t>;
using ScalarField = Grid<double>;

}  // namespace actopt

#endif  // ACTOPT__GRID_HPP_
