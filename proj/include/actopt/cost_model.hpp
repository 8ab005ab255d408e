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

#ifndef ACTOPT__COST_MODEL_HPP_
#define ACTOPT__COST_MODEL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>

#include "actopt/actuator_path.hpp"
#include "actopt/costmap.hpp"

namespace actopt
{

/// Per-step steering bounds and the in-bounds (alpha) / out-of-bounds (beta)
/// slopes of their penalties. Rates are first differences of phi.
struct KinematicConstraints
{
  double phi_max{0.15};
  double phi_rate_max{0.05};
  double alpha_phi{1.0};
  double beta_phi{100.0};
  double alpha_rate{2.0};
  double beta_rate{200.0};

  void validate() const
  {
    if (!(phi_max > 0.0) || !(phi_rate_max > 0.0)) {
      throw std::invalid_argument("phi_max and phi_rate_max must be positive");
    }
    if (!(alpha_phi >= 0.0) || !(beta_phi > alpha_phi) ||
      !(alpha_rate >= 0.0) || !(beta_rate > alpha_rate))
    {
      throw std::invalid_argument("constraint slopes need beta > alpha >= 0");
    }
  }
};

struct CostBreakdown
{
  double map_cost{0.0};
  double kinematic_cost{0.0};
  double total{0.0};
};

/// Piecewise-linear soft wall: alpha|v| inside the bound, slope beta outside.
inline double penalty(double value, double bound, double alpha, double beta)
{
  const double a = std::abs(value);
  if (a < bound) {
    return alpha * a;
  }
  return alpha * bound + beta * (a - bound);
}

/// Bilinear lookup in cell-center coordinates. Points off the map read
/// `out_of_map_cost`; the half-cell rim inside the map clamps to the edge.
inline double sample_cost(const CostMap & map, double x, double y, double out_of_map_cost)
{
  const GridGeometry & g = map.geometry;
  if (!g.contains_point(x, y)) {
    return out_of_map_cost;
  }
  const double cx = std::clamp(g.to_cell_x(x), 0.0, double(g.width - 1));
  const double cy = std::clamp(g.to_cell_y(y), 0.0, double(g.height - 1));
  const int c0 = std::min(static_cast<int>(cx), std::max(g.width - 2, 0));
  const int r0 = std::min(static_cast<int>(cy), std::max(g.height - 2, 0));
  const int c1 = std::min(c0 + 1, g.width - 1);
  const int r1 = std::min(r0 + 1, g.height - 1);
  const double fx = cx - c0;
  const double fy = cy - r0;
  const double v00 = map.cost(c0, r0);
  const double v10 = map.cost(c1, r0);
  const double v01 = map.cost(c0, r1);
  const double v11 = map.cost(c1, r1);
  return (1.0 - fy) * ((1.0 - fx) * v00 + fx * v10) + fy * ((1.0 - fx) * v01 + fx * v11);
}

struct MapCostOptions
{
  /// Defaults to the map's lethal threshold.
  std::optional<double> out_of_map_cost;
  /// Maximum spacing between samples along a step, as a fraction of the
  /// map resolution.
  double spacing_fraction{0.5};
};

namespace detail
{

/// Number of equal sub-intervals a step of length `len` is cut into.
inline std::size_t sub_intervals(double len, double spacing)
{
  if (!(len > spacing)) {
    return 1;
  }
  return static_cast<std::size_t>(std::ceil(len / spacing - 1e-12));
}

/// Mean of the samples on [a, b), starting at a.
inline double step_samples_mean(
  const CostMap & map, const WorldPose & a, const WorldPose & b, double spacing, double oom)
{
  const double len = std::hypot(b.x - a.x, b.y - a.y);
  const std::size_t m = sub_intervals(len, spacing);
  double sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double t = double(k) / double(m);
    sum += sample_cost(map, a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), oom);
  }
  return sum / double(m);
}

}  // namespace detail

/// Map cost of a pose sequence: each step contributes the mean of its samples
/// (the pose plus sub-samples at <= spacing), the final pose its own sample.
/// With steps shorter than the spacing this is the plain sum over poses.
inline double map_cost(
  std::span<const WorldPose> poses, const CostMap & map, const MapCostOptions & opt = {})
{
  if (poses.empty()) {
    return 0.0;
  }
  const double oom = opt.out_of_map_cost.value_or(map.hard_threshold);
  const double spacing = opt.spacing_fraction * map.geometry.resolution;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < poses.size(); ++i) {
    total += detail::step_samples_mean(map, poses[i], poses[i + 1], spacing, oom);
  }
  total += sample_cost(map, poses.back().x, poses.back().y, oom);
  return total;
}

inline double map_cost(
  const ActuatorPath & path, const CostMap & map, const MapCostOptions & opt = {})
{
  return map_cost(actuator_to_world(path).poses, map, opt);
}

inline double kinematic_cost(std::span<const ActuatorStep> steps, const KinematicConstraints & k)
{
  double total = 0.0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    total += penalty(steps[i].phi, k.phi_max, k.alpha_phi, k.beta_phi);
    if (i > 0) {
      total += penalty(steps[i].phi - steps[i - 1].phi, k.phi_rate_max, k.alpha_rate, k.beta_rate);
    }
  }
  return total;
}

inline double kinematic_cost(const ActuatorPath & path, const KinematicConstraints & k)
{
  return kinematic_cost(path.steps, k);
}

inline CostBreakdown total_cost(
  const ActuatorPath & path, const CostMap & map, const KinematicConstraints & k,
  const MapCostOptions & opt = {})
{
  CostBreakdown c;
  c.map_cost = map_cost(path, map, opt);
  c.kinematic_cost = kinematic_cost(path, k);
  c.total = c.map_cost + c.kinematic_cost;
  return c;
}

/// Cost terms that depend on steps [first, last) of a rolled-out path:
/// their map contributions (plus the final pose when last == n), their phi
/// penalties, and the rate terms that read any of them.
inline double window_cost(
  std::span<const WorldPose> poses, std::span<const ActuatorStep> steps,
  std::size_t first, std::size_t last,
  const CostMap & map, const KinematicConstraints & k, const MapCostOptions & opt = {})
{
  const std::size_t n = steps.size();
  last = std::min(last, n);
  const double oom = opt.out_of_map_cost.value_or(map.hard_threshold);
  const double spacing = opt.spacing_fraction * map.geometry.resolution;
  double total = 0.0;
  for (std::size_t i = first; i < last; ++i) {
    total += detail::step_samples_mean(map, poses[i], poses[i + 1], spacing, oom);
    total += penalty(steps[i].phi, k.phi_max, k.alpha_phi, k.beta_phi);
  }
  if (last == n) {
    total += sample_cost(map, poses[n].x, poses[n].y, oom);
  }
  for (std::size_t i = std::max<std::size_t>(first, 1); i < std::min(last + 1, n); ++i) {
    total += penalty(steps[i].phi - steps[i - 1].phi, k.phi_rate_max, k.alpha_rate, k.beta_rate);
  }
  return total;
}

}  // namespace actopt

#endif  // ACTOPT__COST_MODEL_HPP_
