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

#ifndef ACTOPT__SUITE_HPP_
#define ACTOPT__SUITE_HPP_

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "actopt/scenario.hpp"
#include "actopt/svg.hpp"

namespace actopt
{

/// Writes via a temporary sibling and a rename so readers never see a
/// partial file.
inline void write_file_atomic(const std::filesystem::path & target, const std::string & content)
{
  static std::atomic<unsigned> counter{0};
  std::filesystem::path tmp = target;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) +
    "_" + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
      throw Error("cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, target);
}

/// Worker count: ACTUATOR_OPT_THREADS when set and positive, else the
/// hardware concurrency.
inline unsigned suite_threads()
{
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char * env = std::getenv("ACTUATOR_OPT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) {
        n = static_cast<unsigned>(v);
      }
    } catch (const std::exception &) {
      // ignore junk values
    }
  }
  return n;
}

struct SuiteOptions
{
  std::optional<std::filesystem::path> out_dir;
  RunOptions run;
};

struct ScenarioSummary
{
  std::string name;
  std::string file;
  std::string status;  // pass, fail or error
  std::string message;
  std::optional<PathMetrics> metrics;
  std::optional<double> final_cost;
  std::vector<AssertionResult> assertions;
};

inline Json summary_to_json(const ScenarioSummary & s)
{
  Json j;
  j["name"] = s.name;
  j["file"] = s.file;
  j["status"] = s.status;
  if (!s.message.empty()) {
    j["message"] = s.message;
  }
  if (s.metrics) {
    j["metrics"] = metrics_to_json(*s.metrics);
  }
  if (s.final_cost) {
    j["final_cost"] = *s.final_cost;
  }
  Json as = Json::array();
  for (const auto & a : s.assertions) {
    const char * op = a.assertion.op == CompareOp::kLessEqual ? "<=" :
      a.assertion.op == CompareOp::kGreaterEqual ? ">=" : "==";
    as.push_back({
        {"metric", a.assertion.key}, {"op", op}, {"expected", a.assertion.value},
        {"actual", a.actual ? Json(*a.actual) : Json(nullptr)}, {"pass", a.pass}});
  }
  j["assertions"] = as;
  return j;
}

/// Loads, runs and checks one scenario file. Never throws.
inline ScenarioSummary run_scenario_file(
  const std::filesystem::path & file, const SuiteOptions & options)
{
  ScenarioSummary s;
  s.file = file.filename().string();
  s.name = file.stem().string();
  try {
    const Scenario sc = load_scenario(file);
    s.name = sc.name;
    const PreparedScenario prep = prepare_scenario(sc);
    const RunOutcome outcome = run_pipeline(sc, prep.grid, prep.map, options.run);
    if (const auto * f = std::get_if<RunFailure>(&outcome)) {
      s.status = "fail";
      s.message = f->stage + ": " + f->message;
      return s;
    }
    const RunResult & r = std::get<RunResult>(outcome);
    s.metrics = r.metrics;
    s.final_cost = r.report.final_cost.total;
    s.assertions = check_assertions(sc, r);
    s.status = all_pass(s.assertions) ? "pass" : "fail";
    if (options.out_dir) {
      write_file_atomic(*options.out_dir / (sc.name + ".json"), result_to_json(r).dump(2) + "\n");
      std::ostringstream svg;
      render_svg(r, prep.map, svg);
      write_file_atomic(*options.out_dir / (sc.name + ".svg"), svg.str());
    }
  } catch (const std::exception & e) {
    s.status = "error";
    s.message = e.what();
  }
  return s;
}

/// Runs every `*.scn` file in `directory` (sorted by name) and writes a JSON
/// summary. Returns 0 when all scenarios pass, 1 otherwise.
inline int run_suite(
  const std::filesystem::path & directory, std::ostream & report_out,
  const SuiteOptions & options = {})
{
  std::error_code ec;
  std::filesystem::directory_iterator it(directory, ec);
  if (ec) {
    throw Error("cannot read scenario directory " + directory.string() + ": " + ec.message());
  }
  std::vector<std::filesystem::path> files;
  for (const auto & entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".scn") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (options.out_dir) {
    std::filesystem::create_directories(*options.out_dir);
  }

  std::vector<ScenarioSummary> results(files.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
      for (std::size_t i = next++; i < files.size(); i = next++) {
        results[i] = run_scenario_file(files[i], options);
      }
    };
  const unsigned n_threads = std::min<unsigned>(suite_threads(),
      static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto & t : pool) {
    t.join();
  }

  Json report;
  Json list = Json::array();
  int passed = 0;
  for (const auto & r : results) {
    passed += r.status == "pass";
    list.push_back(summary_to_json(r));
  }
  report["scenarios"] = list;
  report["passed"] = passed;
  report["failed"] = static_cast<int>(results.size()) - passed;
  report_out << report.dump(2) << '\n';
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace actopt

#endif  // ACTOPT__SUITE_HPP_
