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

#ifndef ACTOPT__SCENARIO_HPP_
#define ACTOPT__SCENARIO_HPP_

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "actopt/actuator_path.hpp"
#include "actopt/base_planner.hpp"
#include "actopt/cost_model.hpp"
#include "actopt/costmap.hpp"
#include "actopt/errors.hpp"
#include "actopt/optimizer.hpp"
#include "actopt/speed_planner.hpp"

namespace actopt
{

enum class CompareOp { kLessEqual, kGreaterEqual, kEqual };

/// One `[assert]` line, e.g. `max_phi <= 0.15` or `collision == false`.
struct Assertion
{
  std::string key;
  CompareOp op{CompareOp::kLessEqual};
  double value{0.0};
};

struct Scenario
{
  std::string name;
  std::filesystem::path file;
  std::filesystem::path grid_source;
  WorldPose start;
  Point2 goal;
  double dr{0.4};
  double traversal_weight{1.0};
  std::optional<double> current_speed;
  /// Distance driven along the plan before each re-plan.
  double replan_advance{5.0};
  CostMapParams costmap_params;
  KinematicConstraints constraints;
  PerturbationParams pparams;
  SolverConfig solver;
  SpeedParams speed;
  std::vector<Assertion> assertions;
};

// ---------------------------------------------------------------------------
// Scenario file: `key = value` lines grouped by [section]. `#` starts a
// comment. Keys before the first section: name. Paths are relative to the
// scenario file.

namespace detail
{

inline std::string trim(const std::string & s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<double> parse_numbers(
  const std::string & text, std::size_t count, std::size_t line_no, const std::string & key)
{
  std::istringstream in(text);
  std::vector<double> out;
  double v = 0.0;
  while (in >> v) {
    out.push_back(v);
  }
  if (!in.eof() || out.size() != count) {
    throw ParseError(line_no, 0, "'" + key + "' expects " + std::to_string(count) + " number(s)");
  }
  for (double x : out) {
    if (!std::isfinite(x)) {
      throw ParseError(line_no, 0, "'" + key + "' must be finite");
    }
  }
  return out;
}

inline bool parse_bool(const std::string & text, std::size_t line_no, const std::string & key)
{
  if (text == "true" || text == "1") {
    return true;
  }
  if (text == "false" || text == "0") {
    return false;
  }
  throw ParseError(line_no, 0, "'" + key + "' expects true or false");
}

inline const std::vector<std::string> & assertion_keys()
{
  static const std::vector<std::string> keys = {
    "max_phi", "max_phi_rate", "collision", "min_clearance", "final_cost"};
  return keys;
}

}  // namespace detail

inline Scenario parse_scenario(std::istream & in, const std::filesystem::path & file = {})
{
  using detail::parse_numbers;
  Scenario sc;
  sc.file = file;
  sc.name = file.stem().string();
  const std::filesystem::path base = file.parent_path();
  bool have_grid = false;
  bool have_start = false;
  bool have_goal = false;

  // key -> setter, per section
  using Setter = std::function<void(const std::string &, std::size_t, const std::string &)>;
  const auto num = [](double & target) -> Setter {
      return [&target](const std::string & v, std::size_t ln, const std::string & k) {
               target = parse_numbers(v, 1, ln, k)[0];
             };
    };
  const auto integer = [](int & target) -> Setter {
      return [&target](const std::string & v, std::size_t ln, const std::string & k) {
               const double d = parse_numbers(v, 1, ln, k)[0];
               if (d != std::floor(d)) {
                 throw ParseError(ln, 0, "'" + k + "' expects an integer");
               }
               target = static_cast<int>(d);
             };
    };
  std::map<std::string, std::map<std::string, Setter>> table;
  table[""]["name"] = [&](const std::string & v, std::size_t, const std::string &) {sc.name = v;};
  table["map"]["grid"] = [&](const std::string & v, std::size_t, const std::string &) {
      sc.grid_source = base / v;
      have_grid = true;
    };
  table["map"]["traversal_weight"] = num(sc.traversal_weight);
  table["vehicle"]["start"] = [&](const std::string & v, std::size_t ln, const std::string & k) {
      const auto s = parse_numbers(v, 3, ln, k);
      sc.start = {s[0], s[1], wrap_angle(s[2])};
      have_start = true;
    };
  table["vehicle"]["goal"] = [&](const std::string & v, std::size_t ln, const std::string & k) {
      const auto g = parse_numbers(v, 2, ln, k);
      sc.goal = {g[0], g[1]};
      have_goal = true;
    };
  table["vehicle"]["dr"] = num(sc.dr);
  table["vehicle"]["current_speed"] = [&](const std::string & v, std::size_t ln,
      const std::string & k) {
      sc.current_speed = parse_numbers(v, 1, ln, k)[0];
    };
  table["vehicle"]["replan_advance"] = num(sc.replan_advance);
  auto & cm = table["costmap"];
  cm["robot_radius"] = num(sc.costmap_params.robot_radius);
  cm["halo_radius"] = num(sc.costmap_params.halo_radius);
  cm["hard_base"] = num(sc.costmap_params.hard_base);
  cm["hard_distance_gain"] = num(sc.costmap_params.hard_distance_gain);
  cm["soft_base"] = num(sc.costmap_params.soft_base);
  cm["soft_distance_gain"] = num(sc.costmap_params.soft_distance_gain);
  cm["halo_gain_hard"] = num(sc.costmap_params.halo_gain_hard);
  cm["halo_gain_soft"] = num(sc.costmap_params.halo_gain_soft);
  auto & kc = table["constraints"];
  kc["phi_max"] = num(sc.constraints.phi_max);
  kc["phi_rate_max"] = num(sc.constraints.phi_rate_max);
  kc["alpha_phi"] = num(sc.constraints.alpha_phi);
  kc["beta_phi"] = num(sc.constraints.beta_phi);
  kc["alpha_rate"] = num(sc.constraints.alpha_rate);
  kc["beta_rate"] = num(sc.constraints.beta_rate);
  auto & op = table["optimizer"];
  op["probe_delta"] = num(sc.pparams.probe_delta);
  op["damping_length"] = integer(sc.pparams.damping_length);
  op["step_scale"] = num(sc.pparams.step_scale);
  op["max_phi_step"] = num(sc.pparams.max_phi_step);
  op["max_iterations"] = integer(sc.solver.max_iterations);
  op["improvement_tolerance"] = num(sc.solver.improvement_tolerance);
  op["windowed_cost"] = [&](const std::string & v, std::size_t ln, const std::string & k) {
      sc.solver.windowed_cost = detail::parse_bool(v, ln, k);
    };
  auto & sp = table["speed"];
  sp["v_min"] = num(sc.speed.v_min);
  sp["v_max"] = num(sc.speed.v_max);
  sp["gamma"] = num(sc.speed.gamma);
  sp["a_max"] = num(sc.speed.a_max);
  sp["d_max"] = num(sc.speed.d_max);

  std::string section;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(line_no, 1, "unterminated section header");
      }
      section = detail::trim(line.substr(1, line.size() - 2));
      if (section != "assert" && !table.count(section)) {
        throw ParseError(line_no, 2, "unknown section [" + section + "]");
      }
      continue;
    }
    if (section == "assert") {
      std::istringstream as(line);
      std::string key;
      std::string op_text;
      std::string value;
      as >> key >> op_text >> value;
      std::string extra;
      if (value.empty() || (as >> extra)) {
        throw ParseError(line_no, 0, "assertion must read '<metric> <op> <value>'");
      }
      const auto & keys = detail::assertion_keys();
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        throw ParseError(line_no, 1, "unknown assertion metric '" + key + "'");
      }
      Assertion a;
      a.key = key;
      if (op_text == "<=") {
        a.op = CompareOp::kLessEqual;
      } else if (op_text == ">=") {
        a.op = CompareOp::kGreaterEqual;
      } else if (op_text == "==") {
        a.op = CompareOp::kEqual;
      } else {
        throw ParseError(line_no, 0, "unknown comparison '" + op_text + "'");
      }
      if (key == "collision") {
        if (a.op != CompareOp::kEqual) {
          throw ParseError(line_no, 0, "collision only supports ==");
        }
        a.value = detail::parse_bool(value, line_no, key) ? 1.0 : 0.0;
      } else {
        a.value = detail::parse_numbers(value, 1, line_no, key)[0];
      }
      sc.assertions.push_back(a);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, 0, "expected 'key = value'");
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    const auto & keys = table[section];
    const auto it = keys.find(key);
    if (it == keys.end()) {
      throw ParseError(line_no, 1,
              "unknown key '" + key + "'" + (section.empty() ? "" : " in [" + section + "]"));
    }
    it->second(value, line_no, key);
  }

  if (!have_grid || !have_start || !have_goal) {
    throw ParseError(line_no, 0, "scenario needs [map] grid, [vehicle] start and goal");
  }
  if (!(sc.dr > 0.0) || sc.traversal_weight < 0.0 || !(sc.replan_advance > 0.0)) {
    throw ParseError(line_no, 0, "dr and replan_advance must be positive, traversal_weight >= 0");
  }
  try {
    sc.costmap_params.validate();
    sc.constraints.validate();
    sc.pparams.validate();
    sc.solver.validate();
    sc.speed.validate();
  } catch (const std::invalid_argument & e) {
    throw ParseError(line_no, 0, e.what());
  }
  return sc;
}

inline Scenario load_scenario(const std::filesystem::path & file)
{
  std::ifstream in(file);
  if (!in) {
    throw Error("cannot open scenario " + file.string());
  }
  return parse_scenario(in, file);
}

inline OccupancyGrid load_grid_file(const std::filesystem::path & file)
{
  std::ifstream in(file);
  if (!in) {
    throw Error("cannot open grid " + file.string());
  }
  return load_obstacle_grid(in);
}

// ---------------------------------------------------------------------------
// Pipeline

struct PathMetrics
{
  double max_phi{0.0};
  double max_phi_rate{0.0};
  /// Distance from the nearest sample's cell to a hard obstacle cell; empty
  /// when the map has no hard cells.
  std::optional<double> min_clearance;
  double path_length{0.0};
  bool collision{false};
};

struct ReplanRecord
{
  WorldPose start;
  WorldPath optimized_path;
  PathMetrics metrics;
};

struct RunResult
{
  std::string scenario;
  std::filesystem::path scenario_file;
  WorldPose start;
  Point2 goal;
  CellPath base_cells;
  WorldPath base_path;
  WorldPath optimized_path;
  ActuatorPath optimized_actuator;
  SpeedProfile profile;
  SolveReport report;
  PathMetrics metrics;
  PathMetrics base_metrics;
  std::vector<ReplanRecord> replans;
};

struct RunFailure
{
  std::string stage;
  std::string message;
};

using RunOutcome = std::variant<RunResult, RunFailure>;

struct RunOptions
{
  int replan{0};
  /// Overrides the scenario's optimizer flag when set.
  std::optional<bool> windowed_cost;
};

/// Meters from each cell center to the nearest hard cell center (+inf when
/// there is none).
inline ScalarField hard_clearance_field(const OccupancyGrid & grid)
{
  const GridGeometry & g = grid.geometry;
  const auto d2 = detail::squared_distance_to_sites(grid.hard.data(), g.width, g.height);
  ScalarField out(g, 0.0);
  for (std::size_t i = 0; i < d2.size(); ++i) {
    out.data()[i] = std::sqrt(d2[i]) * g.resolution;
  }
  return out;
}

/// Points checked for collision: every pose plus sub-samples at spacing
/// <= resolution / 2 along each step.
inline std::vector<Point2> validation_samples(const WorldPath & path, double resolution)
{
  std::vector<Point2> out;
  const auto & p = path.poses;
  const double spacing = 0.5 * resolution;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double len = std::hypot(p[i + 1].x - p[i].x, p[i + 1].y - p[i].y);
    const std::size_t m = detail::sub_intervals(len, spacing);
    for (std::size_t k = 0; k < m; ++k) {
      const double t = double(k) / double(m);
      out.push_back({p[i].x + t * (p[i + 1].x - p[i].x), p[i].y + t * (p[i + 1].y - p[i].y)});
    }
  }
  if (!p.empty()) {
    out.push_back({p.back().x, p.back().y});
  }
  return out;
}

/// Metrics read only from the stored poses: phi from consecutive headings,
/// rate from consecutive phi.
inline PathMetrics compute_metrics(
  const WorldPath & path, const CostMap & map, const ScalarField & clearance)
{
  PathMetrics m;
  const auto & p = path.poses;
  double prev_phi = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double phi = wrap_angle(p[i + 1].theta - p[i].theta);
    m.max_phi = std::max(m.max_phi, std::abs(phi));
    if (i > 0) {
      m.max_phi_rate = std::max(m.max_phi_rate, std::abs(phi - prev_phi));
    }
    prev_phi = phi;
    m.path_length += std::hypot(p[i + 1].x - p[i].x, p[i + 1].y - p[i].y);
  }
  const GridGeometry & g = map.geometry;
  double best = std::numeric_limits<double>::infinity();
  for (const Point2 & s : validation_samples(path, g.resolution)) {
    const int col = g.cell_col(s.x);
    const int row = g.cell_row(s.y);
    if (!g.contains(col, row)) {
      m.collision = true;
      continue;
    }
    if (map.lethal(col, row)) {
      m.collision = true;
    }
    best = std::min(best, clearance(col, row));
  }
  if (std::isfinite(best)) {
    m.min_clearance = best;
  }
  return m;
}

namespace detail
{

struct PlanStage
{
  CellPath cells;
  WorldPath base;
  ActuatorPath optimized;
  SolveReport report;
};

/// A* -> resample -> optimize. Returns a failure description instead of
/// throwing when the planner finds no usable path.
inline std::variant<PlanStage, RunFailure> plan_once(
  const Scenario & sc, const CostMap & map, const WorldPose & start, const SolverConfig & solver)
{
  PlanStage st;
  try {
    st.cells = plan_base_path(map, start, sc.goal, sc.traversal_weight);
  } catch (const NoPathError & e) {
    return RunFailure{"base_planner", e.what()};
  } catch (const InvalidEndpointError & e) {
    return RunFailure{"base_planner", e.what()};
  }
  if (st.cells.cells.size() < 2) {
    return RunFailure{"base_planner", "start and goal share a cell"};
  }
  st.base = resample_cell_path(st.cells, map.geometry, sc.dr);
  const ActuatorPath seed = world_to_actuator(st.base);
  if (seed.steps.size() < 2) {
    st.optimized = seed;
    st.report.initial_cost = st.report.final_cost = total_cost(seed, map, sc.constraints);
    st.report.sweep_costs = {st.report.initial_cost.total};
    return st;
  }
  st.optimized = solve(seed, map, sc.constraints, sc.pparams, solver, &st.report);
  return st;
}

/// Pose reached after driving `distance` along the path (linear between poses).
inline std::pair<WorldPose, std::size_t> advance_along(const WorldPath & path, double distance)
{
  const auto & p = path.poses;
  double travelled = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const double len = std::hypot(p[i + 1].x - p[i].x, p[i + 1].y - p[i].y);
    if (travelled + len >= distance) {
      const double t = (distance - travelled) / len;
      return {{p[i].x + t * (p[i + 1].x - p[i].x), p[i].y + t * (p[i + 1].y - p[i].y),
          p[i].theta}, i};
    }
    travelled += len;
  }
  return {p.back(), p.size() - 1};
}

}  // namespace detail

/// Runs the pipeline on a prepared map: base path, optimization, speeds,
/// validation, optional re-plans.
inline RunOutcome run_pipeline(
  const Scenario & sc, const OccupancyGrid & grid, const CostMap & map,
  const RunOptions & options = {})
{
  SolverConfig solver = sc.solver;
  if (options.windowed_cost) {
    solver.windowed_cost = *options.windowed_cost;
  }
  const ScalarField clearance = hard_clearance_field(grid);

  auto first = detail::plan_once(sc, map, sc.start, solver);
  if (auto * f = std::get_if<RunFailure>(&first)) {
    return *f;
  }
  auto & st = std::get<detail::PlanStage>(first);

  RunResult r;
  r.scenario = sc.name;
  r.scenario_file = sc.file;
  r.start = sc.start;
  r.goal = sc.goal;
  r.base_cells = std::move(st.cells);
  r.base_path = std::move(st.base);
  r.optimized_actuator = std::move(st.optimized);
  r.optimized_path = actuator_to_world(r.optimized_actuator);
  r.report = std::move(st.report);
  r.profile = plan_speeds(r.optimized_actuator, sc.speed, sc.current_speed);
  r.metrics = compute_metrics(r.optimized_path, map, clearance);
  r.base_metrics = compute_metrics(r.base_path, map, clearance);

  // Re-planning: drive replan_advance meters along the latest plan, then plan
  // again from there.
  WorldPath latest = r.optimized_path;
  for (int k = 0; k < options.replan; ++k) {
    if (detail::advance_along(latest, sc.replan_advance).second + 1 >= latest.poses.size()) {
      break;
    }
    const WorldPose next = detail::advance_along(latest, sc.replan_advance).first;
    auto again = detail::plan_once(sc, map, next, solver);
    if (std::holds_alternative<RunFailure>(again)) {
      break;
    }
    auto & s2 = std::get<detail::PlanStage>(again);
    ReplanRecord rec;
    rec.start = next;
    rec.optimized_path = actuator_to_world(s2.optimized);
    rec.metrics = compute_metrics(rec.optimized_path, map, clearance);
    latest = rec.optimized_path;
    r.replans.push_back(std::move(rec));
  }
  return r;
}

struct PreparedScenario
{
  OccupancyGrid grid;
  CostMap map;
};

inline PreparedScenario prepare_scenario(const Scenario & sc)
{
  PreparedScenario p;
  p.grid = load_grid_file(sc.grid_source);
  p.map = build_costmap(p.grid, sc.costmap_params);
  return p;
}

inline RunOutcome run_scenario(const Scenario & sc, const RunOptions & options = {})
{
  const PreparedScenario p = prepare_scenario(sc);
  return run_pipeline(sc, p.grid, p.map, options);
}

// ---------------------------------------------------------------------------
// Assertions

struct AssertionResult
{
  Assertion assertion;
  std::optional<double> actual;
  bool pass{false};
};

inline std::optional<double> metric_value(const RunResult & r, const std::string & key)
{
  if (key == "max_phi") {return r.metrics.max_phi;}
  if (key == "max_phi_rate") {return r.metrics.max_phi_rate;}
  if (key == "collision") {return r.metrics.collision ? 1.0 : 0.0;}
  if (key == "min_clearance") {return r.metrics.min_clearance;}
  if (key == "final_cost") {return r.report.final_cost.total;}
  return std::nullopt;
}

inline std::vector<AssertionResult> check_assertions(const Scenario & sc, const RunResult & r)
{
  std::vector<AssertionResult> out;
  for (const Assertion & a : sc.assertions) {
    AssertionResult ar;
    ar.assertion = a;
    ar.actual = metric_value(r, a.key);
    if (!ar.actual) {
      // no hard obstacles: clearance is unbounded
      ar.pass = a.key == "min_clearance" && a.op == CompareOp::kGreaterEqual;
    } else {
      switch (a.op) {
        case CompareOp::kLessEqual: ar.pass = *ar.actual <= a.value; break;
        case CompareOp::kGreaterEqual: ar.pass = *ar.actual >= a.value; break;
        case CompareOp::kEqual: ar.pass = *ar.actual == a.value; break;
      }
    }
    out.push_back(ar);
  }
  return out;
}

inline bool all_pass(const std::vector<AssertionResult> & results)
{
  return std::all_of(results.begin(), results.end(), [](const auto & a) {return a.pass;});
}

// ---------------------------------------------------------------------------
// JSON

using Json = nlohmann::ordered_json;

inline Json poses_to_json(const WorldPath & p)
{
  Json arr = Json::array();
  for (const auto & q : p.poses) {
    arr.push_back({q.x, q.y, q.theta});
  }
  return arr;
}

inline WorldPath poses_from_json(const Json & arr)
{
  WorldPath p;
  for (const auto & q : arr) {
    p.poses.push_back({q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>()});
  }
  return p;
}

/// `{"origin": [x, y, theta], "dr": v, "phi": [...]}`; dr becomes an array
/// when the steps do not share one length.
inline Json actuator_to_json(const ActuatorPath & a)
{
  Json j;
  j["origin"] = {a.origin.x, a.origin.y, a.origin.theta};
  if (auto dr = a.uniform_dr(0.0)) {
    j["dr"] = *dr;
  } else {
    Json drs = Json::array();
    for (const auto & s : a.steps) {
      drs.push_back(s.dr);
    }
    j["dr"] = drs;
  }
  Json phi = Json::array();
  for (const auto & s : a.steps) {
    phi.push_back(s.phi);
  }
  j["phi"] = phi;
  return j;
}

inline ActuatorPath actuator_from_json(const Json & j)
{
  ActuatorPath a;
  const auto & o = j.at("origin");
  a.origin = {o.at(0).get<double>(), o.at(1).get<double>(), o.at(2).get<double>()};
  const auto & phi = j.at("phi");
  const auto & dr = j.at("dr");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double d = dr.is_array() ? dr.at(i).get<double>() : dr.get<double>();
    a.steps.push_back({phi.at(i).get<double>(), d});
  }
  return a;
}

inline Json metrics_to_json(const PathMetrics & m)
{
  Json j;
  j["max_phi"] = m.max_phi;
  j["max_phi_rate"] = m.max_phi_rate;
  j["min_clearance"] = m.min_clearance ? Json(*m.min_clearance) : Json(nullptr);
  j["path_length"] = m.path_length;
  j["collision"] = m.collision;
  return j;
}

inline Json cost_to_json(const CostBreakdown & c)
{
  return Json{{"map_cost", c.map_cost}, {"kinematic_cost", c.kinematic_cost}, {"total", c.total}};
}

inline Json report_to_json(const SolveReport & r, bool include_timing)
{
  Json j;
  j["initial_cost"] = cost_to_json(r.initial_cost);
  j["final_cost"] = cost_to_json(r.final_cost);
  j["iterations"] = r.iterations;
  j["accepted_perturbations"] = r.accepted_perturbations;
  j["cost_evaluations"] = r.cost_evaluations;
  j["sweep_costs"] = r.sweep_costs;
  if (include_timing) {
    j["wall_time"] = r.wall_time;
  }
  return j;
}

/// Result document. Wall time is left out unless asked for so identical runs
/// serialize to identical bytes.
inline Json result_to_json(const RunResult & r, bool include_timing = false)
{
  Json j;
  j["scenario"] = {{"name", r.scenario}, {"file", r.scenario_file.generic_string()}};
  j["start"] = {r.start.x, r.start.y, r.start.theta};
  j["goal"] = {r.goal.x, r.goal.y};
  Json cells = Json::array();
  for (const auto & c : r.base_cells.cells) {
    cells.push_back({c.col, c.row});
  }
  j["base_path"] = {{"poses", poses_to_json(r.base_path)}, {"cells", cells}};
  j["optimized_path"] = {
    {"poses", poses_to_json(r.optimized_path)},
    {"actuator", actuator_to_json(r.optimized_actuator)}};
  j["speeds"] = r.profile.speeds;
  j["report"] = report_to_json(r.report, include_timing);
  j["metrics"] = metrics_to_json(r.metrics);
  j["base_metrics"] = metrics_to_json(r.base_metrics);
  Json replans = Json::array();
  for (const auto & rp : r.replans) {
    replans.push_back({
        {"start", {rp.start.x, rp.start.y, rp.start.theta}},
        {"optimized_path", {{"poses", poses_to_json(rp.optimized_path)}}},
        {"metrics", metrics_to_json(rp.metrics)}});
  }
  j["replans"] = replans;
  return j;
}

/// Rebuilds the parts of a RunResult that rendering needs.
inline RunResult result_from_json(const Json & j)
{
  RunResult r;
  r.scenario = j.at("scenario").at("name").get<std::string>();
  r.scenario_file = j.at("scenario").at("file").get<std::string>();
  const auto & s = j.at("start");
  r.start = {s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>()};
  r.goal = {j.at("goal").at(0).get<double>(), j.at("goal").at(1).get<double>()};
  r.base_path = poses_from_json(j.at("base_path").at("poses"));
  for (const auto & c : j.at("base_path").at("cells")) {
    r.base_cells.cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
  }
  r.optimized_path = poses_from_json(j.at("optimized_path").at("poses"));
  r.optimized_actuator = actuator_from_json(j.at("optimized_path").at("actuator"));
  r.profile.speeds = j.at("speeds").get<std::vector<double>>();
  for (const auto & rp : j.at("replans")) {
    ReplanRecord rec;
    const auto & st = rp.at("start");
    rec.start = {st.at(0).get<double>(), st.at(1).get<double>(), st.at(2).get<double>()};
    rec.optimized_path = poses_from_json(rp.at("optimized_path").at("poses"));
    r.replans.push_back(std::move(rec));
  }
  return r;
}

}  // namespace actopt

#endif  // ACTOPT__SCENARIO_HPP_
