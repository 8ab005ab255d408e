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

#ifndef ACTOPT__OPTIMIZER_HPP_
#define ACTOPT__OPTIMIZER_HPP_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "actopt/actuator_path.hpp"
#include "actopt/cost_model.hpp"

namespace actopt
{

struct PerturbationParams
{
  /// Probe size used to test left/right (rad).
  double probe_delta{0.01};
  /// Steps over which a perturbation is blended back into the original path.
  int damping_length{25};
  /// Applied step = step_scale * (cost improvement of the probe), clamped.
  double step_scale{0.01};
  double max_phi_step{0.1};

  void validate() const
  {
    if (!(probe_delta > 0.0) || damping_length < 1 || !(step_scale > 0.0) ||
      !(max_phi_step >= probe_delta))
    {
      throw std::invalid_argument(
              "perturbation params need probe_delta > 0, N >= 1, step_scale > 0, "
              "max_phi_step >= probe_delta");
    }
  }
};

struct SolverConfig
{
  int max_iterations{50};
  double improvement_tolerance{1e-3};
  /// Score probes by the cost of the damped window only. Accept/reject
  /// decisions match the full-path evaluation.
  bool windowed_cost{false};

  void validate() const
  {
    if (max_iterations < 1 || !(improvement_tolerance >= 0.0)) {
      throw std::invalid_argument("solver config needs max_iterations >= 1, tolerance >= 0");
    }
  }
};

struct SolveReport
{
  CostBreakdown initial_cost;
  CostBreakdown final_cost;
  int iterations{0};
  int accepted_perturbations{0};
  std::size_t cost_evaluations{0};
  double wall_time{0.0};
  /// Total cost after each sweep, starting with the initial cost.
  std::vector<double> sweep_costs;
};

/// Cubic S-curve 3t^2 - 2t^3 on [0, 1].
inline double smoothstep(double t)
{
  t = std::clamp(t, 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

namespace detail
{

/// perturb() with the original path's rollout supplied by the caller.
inline ActuatorPath perturb_rolled(
  const ActuatorPath & path, std::span<const WorldPose> original,
  std::size_t index, double delta, int damping)
{
  const std::size_t n = path.steps.size();
  const std::size_t reach = index + static_cast<std::size_t>(damping);
  const std::size_t end = std::min(reach, n);

  ActuatorPath out = path;
  out.steps[index].phi += delta;

  // Perturbed rollout from pose `index` on; earlier poses are unchanged.
  std::vector<Point2> blended(end - index + 1);
  {
    WorldPose q = original[index];
    for (std::size_t k = index; k <= end; ++k) {
      const WorldPose & p = original[k];
      const double s = smoothstep(double(k - index) / double(damping));
      blended[k - index] = {(1.0 - s) * q.x + s * p.x, (1.0 - s) * q.y + s * p.y};
      if (k < end) {
        q.x += std::cos(q.theta) * out.steps[k].dr;
        q.y += std::sin(q.theta) * out.steps[k].dr;
        q.theta = wrap_angle(q.theta + out.steps[k].phi);
      }
    }
  }
  if (end == reach) {
    blended.back() = {original[end].x, original[end].y};
  }

  // Back to actuator space over the window. The heading into the window is
  // the original one; the heading out of it is the original one when the
  // window closes before the path end, else the last segment heading plus
  // the (perturbed) final phi.
  const std::size_t m = end - index;  // steps in the window
  std::vector<double> heading(m + 1);
  heading[0] = original[index].theta;
  for (std::size_t j = 1; j < m; ++j) {
    const Point2 & a = blended[j];
    const Point2 & b = blended[j + 1];
    if (a.x == b.x && a.y == b.y) {
      throw PathError("perturbation collapsed segment " + std::to_string(index + j));
    }
    heading[j] = std::atan2(b.y - a.y, b.x - a.x);
  }
  if (end == reach) {
    heading[m] = original[end].theta;
  } else {
    heading[m] = wrap_angle(heading[m - 1] + out.steps[n - 1].phi);
  }
  for (std::size_t j = 0; j < m; ++j) {
    ActuatorStep & st = out.steps[index + j];
    st.phi = wrap_angle(heading[j + 1] - heading[j]);
    if (j > 0) {
      st.dr = std::hypot(blended[j + 1].x - blended[j].x, blended[j + 1].y - blended[j].y);
    }
  }
  return out;
}

}  // namespace detail

/// Adds `delta` to phi[index], then blends the perturbed world path back into
/// the original with an S-curve over the next `damping` poses (weight 0 on the
/// perturbed path at `index`, 1 at index + damping) and converts the blend
/// back to actuator space. Poses from index + damping on are the original ones.
inline ActuatorPath perturb(
  const ActuatorPath & path, std::size_t index, double delta, int damping)
{
  if (index >= path.steps.size()) {
    throw std::out_of_range("perturbation index " + std::to_string(index) + " out of range");
  }
  if (damping < 1) {
    throw std::invalid_argument("damping length must be at least 1");
  }
  if (!std::isfinite(delta)) {
    throw std::invalid_argument("perturbation must be finite");
  }
  const WorldPath original = actuator_to_world(path);
  return detail::perturb_rolled(path, original.poses, index, delta, damping);
}

/// Damped coordinate descent over the per-step phi values.
///
/// Each sweep visits every step: probe +/- probe_delta; when a probe beats the
/// current cost, apply a step of step_scale * improvement (clamped to
/// [probe_delta, max_phi_step]) in that direction and keep it only if the cost
/// strictly drops. Sweeps repeat until one improves by no more than
/// improvement_tolerance or max_iterations is reached.
///
/// Perturbations that move the path end farther than damping_length * dr
/// from the input end point are rejected.
inline ActuatorPath solve(
  const ActuatorPath & input, const CostMap & map, const KinematicConstraints & constraints,
  const PerturbationParams & pparams, const SolverConfig & config,
  SolveReport * report_out = nullptr, const MapCostOptions & map_opt = {})
{
  constraints.validate();
  pparams.validate();
  config.validate();
  if (input.steps.size() < 2) {
    throw std::invalid_argument("solve needs a path with at least two steps");
  }
  const auto t0 = std::chrono::steady_clock::now();

  SolveReport report;
  ActuatorPath path = input;
  WorldPath rolled = actuator_to_world(path);
  const WorldPose input_end = rolled.poses.back();
  const double end_radius = pparams.damping_length * input.length() / double(input.steps.size());

  report.initial_cost = total_cost(path, map, constraints, map_opt);
  double current = report.initial_cost.total;
  report.sweep_costs.push_back(current);
  report.cost_evaluations = 1;

  const std::size_t n = path.steps.size();
  const int damping = pparams.damping_length;
  const auto margin = [](double c) {return 1e-12 * std::max(1.0, std::abs(c));};

  // Cost of a candidate derived from `path` by a perturbation at `index`.
  const auto evaluate = [&](const ActuatorPath & cand, const WorldPath & cand_rolled,
      std::size_t index) {
      ++report.cost_evaluations;
      if (config.windowed_cost) {
        const std::size_t last = std::min(index + static_cast<std::size_t>(damping), n);
        return current -
               window_cost(rolled.poses, path.steps, index, last, map, constraints, map_opt) +
               window_cost(cand_rolled.poses, cand.steps, index, last, map, constraints, map_opt);
      }
      return map_cost(cand_rolled.poses, map, map_opt) + kinematic_cost(cand, constraints);
    };

  struct Candidate
  {
    ActuatorPath path;
    WorldPath rolled;
    double cost{std::numeric_limits<double>::infinity()};
    bool ok{false};
  };
  const auto make = [&](std::size_t index, double delta) {
      Candidate c;
      try {
        c.path = detail::perturb_rolled(path, rolled.poses, index, delta, damping);
      } catch (const PathError &) {
        return c;
      }
      c.rolled = actuator_to_world(c.path);
      const WorldPose & e = c.rolled.poses.back();
      if (std::hypot(e.x - input_end.x, e.y - input_end.y) > end_radius) {
        return c;
      }
      c.cost = evaluate(c.path, c.rolled, index);
      c.ok = std::isfinite(c.cost);
      return c;
    };

  double last = std::numeric_limits<double>::infinity();
  while (report.iterations < config.max_iterations &&
    (report.iterations == 0 || last - current > config.improvement_tolerance))
  {
    last = current;
    ++report.iterations;
    for (std::size_t index = 0; index < n; ++index) {
      const Candidate left = make(index, +pparams.probe_delta);
      const Candidate right = make(index, -pparams.probe_delta);
      for (const Candidate * probe : {&left, &right}) {
        if (!probe->ok || !(probe->cost < current - margin(current))) {
          continue;
        }
        const double dir = probe == &left ? 1.0 : -1.0;
        const double magnitude = std::clamp(
          pparams.step_scale * (current - probe->cost), pparams.probe_delta, pparams.max_phi_step);
        Candidate applied = make(index, dir * magnitude);
        if (applied.ok && applied.cost < current - margin(current)) {
          path = std::move(applied.path);
          rolled = std::move(applied.rolled);
          current = applied.cost;
          ++report.accepted_perturbations;
        }
      }
    }
    if (config.windowed_cost) {
      // drop accumulated round-off from the incremental updates
      current = map_cost(rolled.poses, map, map_opt) + kinematic_cost(path, constraints);
    }
    report.sweep_costs.push_back(current);
  }

  report.final_cost = total_cost(path, map, constraints, map_opt);
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (report_out) {
    *report_out = std::move(report);
  }
  return path;
}

}  // namespace actopt

#endif  // ACTOPT__OPTIMIZER_HPP_
