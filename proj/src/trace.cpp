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

#include "mrta/trace.hpp"

#include <cmath>
#include <iomanip>

#include "mrta/scenario_io.hpp"

namespace mrta {

using nlohmann::json;

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
  out << kTraceCsvHeader << '\n';
  out << std::setprecision(17);
  for (const StepRecord& r : trace.records) {
    out << r.step << ',' << r.j_e << ',' << r.j_r << ',' << r.j_c << ',';
    if (std::isfinite(r.min_edge_margin)) out << r.min_edge_margin;
    out << ',' << r.fault_count << '\n';
  }
}

namespace {

json snapshot(const StepRecord& r, const Scenario& scenario) {
  json robots = json::array();
  for (std::size_t i = 0; i < r.positions.size(); ++i) {
    const RobotId id = scenario.robots[i].id;
    robots.push_back({{"id", id},
                      {"position", {r.positions[i].x(), r.positions[i].y()}},
                      {"task", r.assignment.task_of(id)}});
  }
  json tasks = json::array();
  for (const auto& [id, pos] : r.task_positions) {
    json remaining = json::array();
    for (Eigen::Index t = 0; t < r.remaining.at(id).size(); ++t) {
      remaining.push_back(r.remaining.at(id)[t]);
    }
    tasks.push_back({{"id", id},
                     {"position", {pos.x(), pos.y()}},
                     {"explored", r.explored.at(id)},
                     {"remaining", std::move(remaining)}});
  }
  json edges = json::array();
  for (const auto& [a, b] : r.tree_edges) edges.push_back({a, b});
  return {{"step", r.step},
          {"J_e", r.j_e},
          {"J_r", r.j_r},
          {"J_c", r.j_c},
          {"robots", std::move(robots)},
          {"tasks", std::move(tasks)},
          {"tree_edges", std::move(edges)},
          {"faults", r.fault_count}};
}

}  // namespace

json snapshots_json(const SimTrace& trace, const Scenario& scenario,
                    int period) {
  json out = {{"snapshot_period", period}, {"snapshots", json::array()}};
  if (period < 1) period = 1;
  const std::size_t count = trace.records.size();
  for (std::size_t k = 0; k < count; ++k) {
    const StepRecord& r = trace.records[k];
    if (r.step % period == 0 || k + 1 == count) {
      out["snapshots"].push_back(snapshot(r, scenario));
    }
  }
  return out;
}

}  // namespace mrta
