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

#ifndef ACTOPT__ACTUATOR_PATH_HPP_
#define ACTOPT__ACTUATOR_PATH_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "actopt/base_planner.hpp"
#include "actopt/errors.hpp"
#include "actopt/grid.hpp"
#include "actopt/pose.hpp"

namespace actopt
{

/// Sequence of planar poses, at least two.
struct WorldPath
{
  std::vector<WorldPose> poses;
};

/// phi is the heading change over the step (rad/step); dr the step length.
struct ActuatorStep
{
  double phi{0.0};
  double dr{0.0};

  bool operator==(const ActuatorStep &) const = default;
};

/// Control-space path: an origin pose plus one (phi, dr) per step.
struct ActuatorPath
{
  WorldPose origin;
  std::vector<ActuatorStep> steps;

  std::size_t size() const {return steps.size();}

  double length() const
  {
    double total = 0.0;
    for (const auto & s : steps) {
      total += s.dr;
    }
    return total;
  }

  /// Shared step length if every dr agrees within `rel_tol`.
  std::optional<double> uniform_dr(double rel_tol = 1e-9) const
  {
    if (steps.empty()) {
      return std::nullopt;
    }
    const double ref = steps.front().dr;
    for (const auto & s : steps) {
      if (std::abs(s.dr - ref) > rel_tol * ref) {
        return std::nullopt;
      }
    }
    return ref;
  }

  bool operator==(const ActuatorPath &) const = default;
};

/// theta_i = atan2 of segment i; the last point repeats the previous heading.
inline std::vector<double> headings_from_positions(std::span<const Point2> points)
{
  if (points.size() < 2) {
    throw PathError("at least two points are needed to compute headings");
  }
  std::vector<double> theta(points.size());
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double dx = points[i + 1].x - points[i].x;
    const double dy = points[i + 1].y - points[i].y;
    if (dx == 0.0 && dy == 0.0) {
      throw PathError("degenerate segment at point " + std::to_string(i));
    }
    theta[i] = std::atan2(dy, dx);
  }
  theta.back() = theta[points.size() - 2];
  return theta;
}

inline WorldPath with_headings(std::span<const Point2> points)
{
  const auto theta = headings_from_positions(points);
  WorldPath path;
  path.poses.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    path.poses.push_back({points[i].x, points[i].y, theta[i]});
  }
  return path;
}

/// Inverse model: phi_i = wrap(theta_{i+1} - theta_i), dr_i = |p_{i+1} - p_i|.
inline ActuatorPath world_to_actuator(const WorldPath & path)
{
  if (path.poses.size() < 2) {
    throw PathError("a world path needs at least two poses");
  }
  ActuatorPath out;
  out.origin = path.poses.front();
  out.origin.theta = wrap_angle(out.origin.theta);
  out.steps.reserve(path.poses.size() - 1);
  for (std::size_t i = 0; i + 1 < path.poses.size(); ++i) {
    const WorldPose & a = path.poses[i];
    const WorldPose & b = path.poses[i + 1];
    const double dr = std::hypot(b.x - a.x, b.y - a.y);
    if (!(dr > 0.0)) {
      throw PathError("degenerate segment at pose " + std::to_string(i));
    }
    out.steps.push_back({wrap_angle(b.theta - a.theta), dr});
  }
  return out;
}

/// Forward model. Position i+1 uses heading i; the heading then advances.
inline WorldPath actuator_to_world(const ActuatorPath & path)
{
  WorldPath out;
  out.poses.reserve(path.steps.size() + 1);
  WorldPose p = path.origin;
  p.theta = wrap_angle(p.theta);
  out.poses.push_back(p);
  for (const ActuatorStep & s : path.steps) {
    p.x += std::cos(p.theta) * s.dr;
    p.y += std::sin(p.theta) * s.dr;
    p.theta = wrap_angle(p.theta + s.phi);
    out.poses.push_back(p);
  }
  return out;
}

inline std::vector<Point2> positions(const WorldPath & path)
{
  std::vector<Point2> pts;
  pts.reserve(path.poses.size());
  for (const auto & p : path.poses) {
    pts.push_back({p.x, p.y});
  }
  return pts;
}

inline double polyline_length(std::span<const Point2> pts)
{
  double total = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    total += std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
  }
  return total;
}

namespace detail
{

/// Walks `n` chords of length `c` along the polyline starting at its first
/// vertex. Returns the arc-length position reached (past the end the walk
/// continues along the last segment's direction) and optionally the points.
inline double chord_walk(
  std::span<const Point2> pts, std::span<const double> stations, double c, std::size_t n,
  std::vector<Point2> * out)
{
  std::size_t seg = 0;
  double t = 0.0;  // parameter on segment `seg`
  Point2 cur = pts[0];
  double extra = 0.0;  // arc length beyond the polyline end
  const std::size_t n_seg = pts.size() - 1;
  if (out) {
    out->assign(1, cur);
  }
  for (std::size_t k = 0; k < n; ++k) {
    bool placed = false;
    if (extra == 0.0) {
      while (seg < n_seg) {
        const Point2 a = pts[seg];
        const Point2 b = pts[seg + 1];
        const double bx = b.x - cur.x;
        const double by = b.y - cur.y;
        if (bx * bx + by * by >= c * c) {
          // |a + t d - cur| = c, larger root
          const double dx = b.x - a.x;
          const double dy = b.y - a.y;
          const double ax = a.x - cur.x;
          const double ay = a.y - cur.y;
          const double qa = dx * dx + dy * dy;
          const double qb = 2.0 * (ax * dx + ay * dy);
          const double qc = ax * ax + ay * ay - c * c;
          const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
          const double root = (-qb + std::sqrt(disc)) / (2.0 * qa);
          t = std::clamp(root, t, 1.0);
          cur = {a.x + t * dx, a.y + t * dy};
          placed = true;
          break;
        }
        ++seg;
        t = 0.0;
      }
    }
    if (!placed) {
      // ran off the end: continue straight along the last segment
      const Point2 a = pts[n_seg - 1];
      const Point2 b = pts[n_seg];
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      const double ux = (b.x - a.x) / len;
      const double uy = (b.y - a.y) / len;
      if (extra == 0.0) {
        // first point past the end lies on the ray from b, at distance c from cur
        const double wx = b.x - cur.x;
        const double wy = b.y - cur.y;
        const double proj = wx * ux + wy * uy;
        const double perp2 = std::max(0.0, wx * wx + wy * wy - proj * proj);
        const double s = -proj + std::sqrt(std::max(0.0, c * c - perp2));
        extra = std::max(s, 1e-300);
        cur = {b.x + ux * s, b.y + uy * s};
      } else {
        extra += c;
        cur = {cur.x + ux * c, cur.y + uy * c};
      }
      seg = n_seg;
    }
    if (out) {
      out->push_back(cur);
    }
  }
  if (extra > 0.0) {
    return stations.back() + extra;
  }
  const double seg_len = stations[seg + 1] - stations[seg];
  return stations[seg] + t * seg_len;
}

}  // namespace detail

/// Resamples a polyline into equal chords that end exactly at its last
/// vertex. The step count is ceil(length / dr); the common chord is then
/// re-fit so the last sample lands on the endpoint.
inline std::vector<Point2> resample_polyline(std::span<const Point2> input, double dr)
{
  if (!(dr > 0.0)) {
    throw std::invalid_argument("dr must be positive");
  }
  std::vector<Point2> pts;
  for (const Point2 & p : input) {
    if (pts.empty() || p.x != pts.back().x || p.y != pts.back().y) {
      pts.push_back(p);
    }
  }
  if (pts.size() < 2) {
    throw PathError("degenerate polyline: all points coincide");
  }
  std::vector<double> stations(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    stations[i] = stations[i - 1] + std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
  }
  const double total = stations.back();
  const auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(total / dr - 1e-9)));

  // End position of the walk grows with the chord length; bisect for it.
  double lo = 0.0;
  double hi = total / double(n);
  while (detail::chord_walk(pts, stations, hi, n, nullptr) < total) {
    lo = hi;
    hi *= 1.5;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (detail::chord_walk(pts, stations, mid, n, nullptr) < total) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  std::vector<Point2> out;
  detail::chord_walk(pts, stations, hi, n, &out);
  out.back() = pts.back();
  return out;
}

/// Cell centers -> world polyline -> equal-chord poses with back-calculated
/// headings.
inline WorldPath resample_cell_path(const CellPath & cells, const GridGeometry & g, double dr)
{
  if (cells.cells.size() < 2) {
    throw PathError("cell path needs at least two cells");
  }
  std::vector<Point2> pts;
  pts.reserve(cells.cells.size());
  for (const CellIndex & c : cells.cells) {
    pts.push_back(g.cell_center(c.col, c.row));
  }
  const auto samples = resample_polyline(pts, dr);
  return with_headings(samples);
}

}  // namespace actopt

#endif  // ACTOPT__ACTUATOR_PATH_HPP_
