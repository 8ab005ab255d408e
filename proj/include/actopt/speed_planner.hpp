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

#ifndef ACTOPT__SPEED_PLANNER_HPP_
#define ACTOPT__SPEED_PLANNER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "actopt/actuator_path.hpp"

namespace actopt
{

struct SpeedParams
{
  double v_min{2.0};
  double v_max{5.0};
  /// |phi| (rad/step) at which the planner drops to v_min.
  double gamma{0.1};
  double a_max{2.0};
  double d_max{3.0};

  void validate() const
  {
    if (!(v_min > 0.0) || !(v_max >= v_min) || !(gamma > 0.0) || !(a_max > 0.0) ||
      !(d_max > 0.0))
    {
      throw std::invalid_argument(
              "speed params need 0 < v_min <= v_max and positive gamma, a_max, d_max");
    }
  }
};

/// One speed per pose; the last entry (the goal) is 0.
struct SpeedProfile
{
  std::vector<double> speeds;
};

/// Steering-limited speed v_min + (v_max - v_min)(1 - min(|phi| / gamma, 1)).
inline double steering_speed(double phi, const SpeedParams & p)
{
  return p.v_min + (p.v_max - p.v_min) * (1.0 - std::min(std::abs(phi) / p.gamma, 1.0));
}

/// Pose i takes the speed of its outgoing step; the goal pose gets 0.
inline std::vector<double> curvature_speeds(const ActuatorPath & path, const SpeedParams & p)
{
  std::vector<double> v;
  v.reserve(path.steps.size() + 1);
  for (const ActuatorStep & s : path.steps) {
    v.push_back(steering_speed(s.phi, p));
  }
  v.push_back(0.0);
  return v;
}

namespace detail
{

/// Largest w <= sqrt(v^2 + 2 a ds) with w*w - v*v <= 2 a ds in floating point.
inline double reachable_speed(double v, double accel, double ds)
{
  const double budget = 2.0 * accel * ds;
  double w = std::sqrt(v * v + budget);
  while (w > 0.0 && w * w - v * v > budget) {
    w = std::nextafter(w, 0.0);
  }
  return w;
}

}  // namespace detail

/// Backward pass (deceleration into the end), then forward pass
/// (acceleration from the first entry). `ds[i]` is the distance between
/// entries i and i+1.
inline std::vector<double> accel_limit(
  std::vector<double> v, std::span<const double> ds, const SpeedParams & p)
{
  if (v.size() != ds.size() + 1) {
    throw std::invalid_argument("accel_limit needs one more speed than segment lengths");
  }
  for (double d : ds) {
    if (!(d > 0.0)) {
      throw std::invalid_argument("segment lengths must be positive");
    }
  }
  for (std::size_t i = v.size() - 1; i-- > 0; ) {
    v[i] = std::min(v[i], detail::reachable_speed(v[i + 1], p.d_max, ds[i]));
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    v[i + 1] = std::min(v[i + 1], detail::reachable_speed(v[i], p.a_max, ds[i]));
  }
  return v;
}

inline std::vector<double> accel_limit(std::vector<double> v, double dr, const SpeedParams & p)
{
  if (v.empty()) {
    return v;
  }
  const std::vector<double> ds(v.size() - 1, dr);
  return accel_limit(std::move(v), std::span<const double>(ds), p);
}

/// Steering-limited speeds, then acceleration passes. When `current_speed` is
/// given it replaces the first entry.
inline SpeedProfile plan_speeds(
  const ActuatorPath & path, const SpeedParams & p,
  std::optional<double> current_speed = std::nullopt)
{
  p.validate();
  auto v = curvature_speeds(path, p);
  if (current_speed) {
    v.front() = std::max(0.0, *current_speed);
  }
  std::vector<double> ds;
  ds.reserve(path.steps.size());
  for (const auto & s : path.steps) {
    ds.push_back(s.dr);
  }
  return {accel_limit(std::move(v), std::span<const double>(ds), p)};
}

}  // namespace actopt

#endif  // ACTOPT__SPEED_PLANNER_HPP_
