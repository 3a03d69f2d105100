// Copyright 2026 The Authors.
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

#include "mrta/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "mrta/allocation.hpp"
#include "mrta/error.hpp"
#include "mrta/plot.hpp"
#include "mrta/scenario_io.hpp"
#include "mrta/sim.hpp"
#include "mrta/trace.hpp"

namespace mrta::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Loads a scenario or reports why not. Returns the exit code on failure.
int load(const fs::path& path, Scenario& scenario, std::ostream& err) {
  if (!fs::exists(path)) {
    err << "error: no such file: " << path.string() << '\n';
    return kExitMissingFile;
  }
  try {
    scenario = load_scenario(path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kIo ? kExitMissingFile : kExitInvalid;
  }
  return kExitOk;
}

bool report_violations(const Scenario& scenario, std::ostream& err) {
  const auto violations = validate_scenario(scenario);
  for (const Violation& v : violations) {
    err << "invalid: " << v.field << ": " << v.message << '\n';
  }
  return violations.empty();
}

void print_assignment(std::ostream& out, const Assignment& a) {
  bool first = true;
  for (const auto& [robot, task] : a.entries()) {
    out << (first ? "" : " ") << robot << "->" << task;
    first = false;
  }
  out << '\n';
}

void print_report(std::ostream& out, const char* label, const UtilityReport& r) {
  out << label << ": J_e=" << r.j_e << " J_c=" << r.j_c << " J_r=" << r.j_r
      << " f=" << r.f << '\n';
}

}  // namespace

int cmd_run(const fs::path& scenario_path, const RunFlags& flags,
            std::ostream& out, std::ostream& err) {
  Scenario scenario;
  if (int rc = load(scenario_path, scenario, err); rc != kExitOk) return rc;
  if (!report_violations(scenario, err)) return kExitInvalid;
  if (flags.seed) scenario.seed = *flags.seed;
  if (flags.steps) {
    if (*flags.steps < 0) {
      err << "error: --steps must be >= 0\n";
      return kExitInvalid;
    }
    scenario.horizon = *flags.steps;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const SimTrace trace = run(scenario);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::error_code ec;
  fs::create_directories(flags.out_dir, ec);
  if (ec) {
    err << "error: cannot create " << flags.out_dir.string() << ": "
        << ec.message() << '\n';
    return kExitInvalid;
  }
  {
    std::ofstream csv(flags.out_dir / "trace.csv");
    write_trace_csv(csv, trace);
  }
  {
    std::ofstream snaps(flags.out_dir / "snapshots.json");
    snaps << snapshots_json(trace, scenario, scenario.snapshot_period).dump(1)
          << '\n';
  }

  double min_margin = std::numeric_limits<double>::infinity();
  for (const StepRecord& r : trace.records) {
    min_margin = std::min(min_margin, r.min_distance_margin);
  }
  json summary = {
      {"steps", trace.records.size()},
      {"final_J_r", trace.records.empty() ? json(nullptr)
                                          : json(trace.records.back().j_r)},
      {"final_J_e", trace.records.empty() ? json(nullptr)
                                          : json(trace.records.back().j_e)},
      {"fault_count", trace.final_state.faults.size()},
      {"min_tree_distance_margin",
       std::isfinite(min_margin) ? json(min_margin) : json(nullptr)},
      {"wall_time_s", wall},
  };
  {
    std::ofstream s(flags.out_dir / "summary.json");
    s << summary.dump(2) << '\n';
  }

  if (flags.plot) {
    const fs::path dir = flags.out_dir / "plots";
    fs::create_directories(dir, ec);
    const int period = std::max(1, scenario.snapshot_period);
    for (std::size_t k = 0; k < trace.records.size(); ++k) {
      const StepRecord& r = trace.records[k];
      if (r.step % period != 0 && k + 1 != trace.records.size()) continue;
      std::ostringstream name;
      name << "step_" << std::setw(6) << std::setfill('0') << r.step << ".svg";
      std::ofstream svg(dir / name.str());
      svg << render_svg(scenario, r);
    }
  }

  out << "steps " << trace.records.size() << '\n';
  if (!trace.records.empty()) out << "final J_r " << trace.records.back().j_r << '\n';
  out << "faults " << trace.final_state.faults.size() << '\n';
  out << "wall time " << wall << " s\n";
  out << "wrote " << (flags.out_dir / "trace.csv").string() << '\n';
  return kExitOk;
}

int cmd_bench(const BenchConfig& config, const fs::path& output_path,
              std::ostream& out, std::ostream& err) {
  if (const std::string problem = check_config(config); !problem.empty()) {
    err << "error: bad bench config: " << problem << '\n';
    return kExitInvalid;
  }
  const auto rows = run_bench(config);
  if (output_path.empty() || output_path == "-") {
    write_bench_csv(out, rows);
  } else {
    if (output_path.has_parent_path()) {
      std::error_code ec;
      fs::create_directories(output_path.parent_path(), ec);
    }
    std::ofstream csv(output_path);
    if (!csv) {
      err << "error: cannot write " << output_path.string() << '\n';
      return kExitInvalid;
    }
    write_bench_csv(csv, rows);
    out << "wrote " << output_path.string() << '\n';
  }
  out << "log-log slope of greedy time vs n: " << loglog_slope(rows) << '\n';
  return kExitOk;
}

int cmd_oracle_check(const fs::path& instance_path, std::uint64_t cap,
                     std::ostream& out, std::ostream& err) {
  Scenario scenario;
  if (int rc = load(instance_path, scenario, err); rc != kExitOk) return rc;
  const AllocationProblem problem =
      make_problem(scenario, initial_positions(scenario));
  if (enumeration_size(problem.robots.size(), problem.tasks.size()) > cap) {
    err << "error: " << problem.tasks.size() + 1 << "^" << problem.robots.size()
        << " assignments exceed the oracle cap " << cap << '\n';
    return kExitOracleCap;
  }
  const GreedyResult g =
      greedy_assign(problem, Assignment::all_idle(problem.robots));
  const UtilityReport rg = objective(problem, g.assignment);
  const BruteForceResult b = brute_force_assign(problem, cap);
  out << std::setprecision(12);
  out << "greedy assignment: ";
  print_assignment(out, g.assignment);
  print_report(out, "greedy", rg);
  out << "oracle assignment: ";
  print_assignment(out, b.assignment);
  print_report(out, "oracle", b.report);
  out << "ratio " << (b.report.f > 0.0 ? rg.f / b.report.f : 1.0) << '\n';
  return kExitOk;
}

int cmd_validate(const fs::path& scenario_path, std::ostream& out,
                 std::ostream& err) {
  Scenario scenario;
  if (int rc = load(scenario_path, scenario, err); rc != kExitOk) return rc;
  if (!report_violations(scenario, err)) return kExitInvalid;
  out << "ok: " << scenario.robots.size() << " robots, "
      << scenario.tasks.size() << " tasks\n";
  return kExitOk;
}

}  // namespace mrta::cli
