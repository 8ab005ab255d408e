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

// Scenario runner.
//
//   actopt plan <scenario.scn> [--out DIR] [--replan N] [--windowed-cost] [--timing]
//   actopt suite <dir> [--out DIR] [--windowed-cost]
//   actopt render <result.json> [--out FILE]
//
// Exit codes: 0 success, 1 scenario failure, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "actopt/actopt.hpp"

namespace
{

constexpr int kOk = 0;
constexpr int kScenarioFailure = 1;
constexpr int kInputError = 2;

namespace fs = std::filesystem;

int cmd_plan(const fs::path & file, const std::string & out_dir, int replan, bool windowed,
  bool timing)
{
  const actopt::Scenario sc = actopt::load_scenario(file);
  const actopt::PreparedScenario prep = actopt::prepare_scenario(sc);
  actopt::RunOptions opts;
  opts.replan = replan;
  if (windowed) {
    opts.windowed_cost = true;
  }
  const actopt::RunOutcome outcome = actopt::run_pipeline(sc, prep.grid, prep.map, opts);
  if (const auto * f = std::get_if<actopt::RunFailure>(&outcome)) {
    std::cerr << sc.name << ": " << f->stage << " failed: " << f->message << '\n';
    return kScenarioFailure;
  }
  const auto & r = std::get<actopt::RunResult>(outcome);
  const auto checks = actopt::check_assertions(sc, r);

  const auto doc = actopt::result_to_json(r, timing);
  if (out_dir.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    fs::create_directories(out_dir);
    actopt::write_file_atomic(fs::path(out_dir) / (sc.name + ".json"), doc.dump(2) + "\n");
    std::ostringstream svg;
    actopt::render_svg(r, prep.map, svg);
    actopt::write_file_atomic(fs::path(out_dir) / (sc.name + ".svg"), svg.str());
  }

  std::cerr << sc.name << ": cost " << r.report.initial_cost.total << " -> " <<
    r.report.final_cost.total << " in " << r.report.iterations << " sweeps, max|phi| " <<
    r.metrics.max_phi << ", max|phi rate| " << r.metrics.max_phi_rate << ", collision " <<
    (r.metrics.collision ? "yes" : "no") << '\n';
  for (const auto & c : checks) {
    std::cerr << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.assertion.key << '\n';
  }
  return actopt::all_pass(checks) ? kOk : kScenarioFailure;
}

int cmd_suite(const fs::path & dir, const std::string & out_dir, bool windowed)
{
  actopt::SuiteOptions opts;
  if (!out_dir.empty()) {
    opts.out_dir = fs::path(out_dir);
  }
  if (windowed) {
    opts.run.windowed_cost = true;
  }
  std::ostringstream report;
  const int status = actopt::run_suite(dir, report, opts);
  if (opts.out_dir) {
    actopt::write_file_atomic(*opts.out_dir / "suite_report.json", report.str());
  } else {
    std::cout << report.str();
  }
  return status == 0 ? kOk : kScenarioFailure;
}

int cmd_render(const fs::path & result_file, const std::string & out_file)
{
  std::ifstream in(result_file);
  if (!in) {
    throw actopt::Error("cannot open " + result_file.string());
  }
  const auto doc = actopt::Json::parse(in);
  const actopt::RunResult r = actopt::result_from_json(doc);
  const actopt::Scenario sc = actopt::load_scenario(r.scenario_file);
  const actopt::PreparedScenario prep = actopt::prepare_scenario(sc);
  std::ostringstream svg;
  actopt::render_svg(r, prep.map, svg);
  if (out_file.empty()) {
    std::cout << svg.str();
  } else {
    actopt::write_file_atomic(out_file, svg.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Actuator-space path optimization scenario runner"};
  app.require_subcommand(1);

  std::string out;
  bool windowed = false;
  int replan = 0;
  bool timing = false;
  std::string target;

  auto * plan = app.add_subcommand("plan", "Run one scenario");
  plan->add_option("scenario", target, "Scenario file")->required();
  plan->add_option("--out", out, "Directory for <name>.json and <name>.svg");
  plan->add_option("--replan", replan, "Re-plan N times along the driven path")
  ->check(CLI::NonNegativeNumber);
  plan->add_flag("--windowed-cost", windowed, "Score probes on the damped window only");
  plan->add_flag("--timing", timing, "Include solver wall time in the result JSON");

  auto * suite = app.add_subcommand("suite", "Run every *.scn file in a directory");
  suite->add_option("dir", target, "Scenario directory")->required();
  suite->add_option("--out", out, "Directory for per-scenario artifacts and the report");
  suite->add_flag("--windowed-cost", windowed, "Score probes on the damped window only");

  auto * render = app.add_subcommand("render", "Render a result JSON to SVG");
  render->add_option("result", target, "Result JSON written by plan")->required();
  render->add_option("--out", out, "Output SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*plan) {
      return cmd_plan(target, out, replan, windowed, timing);
    }
    if (*suite) {
      return cmd_suite(target, out, windowed);
    }
    return cmd_render(target, out);
  } catch (const actopt::Error & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
