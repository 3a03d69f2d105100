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

#include "mrta/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "mrta/connectivity.hpp"
#include "mrta/error.hpp"

namespace mrta {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidAssignment: return "invalid assignment";
    case ErrorCode::kUnknownTask: return "unknown task";
    case ErrorCode::kIllegalElement: return "illegal element";
    case ErrorCode::kInstanceTooLarge: return "instance too large";
    case ErrorCode::kDisconnectedGraph: return "disconnected graph";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kInvalidArgument: return "invalid argument";
  }
  return "unknown";
}

bool can_sense(const Robot& robot, int sensing_category) {
  return sensing_category >= 0 &&
         sensing_category < robot.capabilities.size() &&
         robot.capabilities[sensing_category] > 0.0;
}

Vec2 task_position_at(const Task& task, double step) {
  const auto& path = task.path;
  if (path.empty()) return task.position;
  if (step <= path.front().time_step) return path.front().position;
  if (step >= path.back().time_step) return path.back().position;
  auto upper = std::upper_bound(
      path.begin(), path.end(), step,
      [](double s, const Waypoint& w) { return s < w.time_step; });
  const Waypoint& hi = *upper;
  const Waypoint& lo = *(upper - 1);
  const double span = hi.time_step - lo.time_step;
  if (span <= 0.0) return hi.position;
  const double s = (step - lo.time_step) / span;
  return lo.position + s * (hi.position - lo.position);
}

TaskSnapshot effective_task(const Task& task, const Scenario& scenario,
                            const Vec2& position) {
  TaskSnapshot snap;
  snap.id = task.id;
  snap.position = position;
  if (task.explored) {
    snap.importance = task.importance;
    snap.requirement = task.requirement;
  } else {
    snap.importance = scenario.v_unknown;
    snap.requirement = CapabilityVector::Zero(scenario.o);
    if (scenario.sensing_category >= 0 &&
        scenario.sensing_category < scenario.o) {
      snap.requirement[scenario.sensing_category] = 1.0;
    }
  }
  return snap;
}

TaskSnapshot effective_task(const Task& task, const Scenario& scenario) {
  return effective_task(task, scenario, task.position);
}

Assignment Assignment::all_idle(std::span<const Robot> robots) {
  Assignment a;
  for (const Robot& r : robots) a.map_[r.id] = kIdleTask;
  return a;
}

TaskId Assignment::task_of(RobotId robot) const {
  auto it = map_.find(robot);
  return it == map_.end() ? kIdleTask : it->second;
}

void Assignment::assign(RobotId robot, TaskId task) { map_[robot] = task; }

std::vector<Vec2> initial_positions(const Scenario& scenario) {
  std::vector<Vec2> out;
  out.reserve(scenario.robots.size());
  for (const Robot& r : scenario.robots) out.push_back(r.position);
  return out;
}

namespace {

void check_vector(const CapabilityVector& v, int o, const std::string& field,
                  std::vector<Violation>& out) {
  if (v.size() != o) {
    out.push_back({field, "length " + std::to_string(v.size()) +
                              " != category count " + std::to_string(o)});
  }
  for (Eigen::Index t = 0; t < v.size(); ++t) {
    if (!(v[t] >= 0.0)) {
      out.push_back({field, "capability entry < 0"});
      break;
    }
  }
}

}  // namespace

std::vector<Violation> validate_scenario(const Scenario& s) {
  std::vector<Violation> out;
  if (s.o < 1) out.push_back({"params.o", "category count < 1"});
  if (s.sensing_category < 0 || s.sensing_category >= s.o) {
    out.push_back({"params.sensing_category", "outside [0, o)"});
  }
  if (!(s.r_c > 0.0)) out.push_back({"params.r_c", "must be > 0"});
  if (!(s.l > 0.0)) out.push_back({"params.l", "must be > 0"});
  if (!(s.dt > 0.0)) out.push_back({"params.dt", "must be > 0"});
  if (s.horizon < 1) out.push_back({"params.horizon", "must be >= 1"});
  if (!(s.alpha >= 0.0)) out.push_back({"params.alpha", "must be >= 0"});
  if (!(s.v_unknown >= 0.0)) {
    out.push_back({"params.v_unknown", "must be >= 0"});
  }
  if (!(s.gamma > 0.0)) out.push_back({"params.gamma", "must be > 0"});
  if (!(s.u_max > 0.0)) out.push_back({"params.u_max", "must be > 0"});
  if (s.realloc_period < 1) {
    out.push_back({"params.realloc_period", "must be >= 1"});
  }

  if (s.robots.empty()) out.push_back({"robots", "no robots"});
  std::set<RobotId> robot_ids;
  for (std::size_t i = 0; i < s.robots.size(); ++i) {
    const Robot& r = s.robots[i];
    const std::string field = "robots[" + std::to_string(i) + "]";
    if (!robot_ids.insert(r.id).second) {
      out.push_back({field + ".id", "duplicate robot id"});
    }
    check_vector(r.capabilities, s.o, field + ".capabilities", out);
  }

  std::set<TaskId> task_ids;
  for (std::size_t j = 0; j < s.tasks.size(); ++j) {
    const Task& t = s.tasks[j];
    const std::string field = "tasks[" + std::to_string(j) + "]";
    if (t.id < 1) out.push_back({field + ".id", "task id must be >= 1"});
    if (!task_ids.insert(t.id).second) {
      out.push_back({field + ".id", "duplicate task id"});
    }
    if (!(t.importance >= 0.0)) {
      out.push_back({field + ".importance", "importance < 0"});
    }
    check_vector(t.requirement, s.o, field + ".requirement", out);
    for (std::size_t p = 1; p < t.path.size(); ++p) {
      if (t.path[p].time_step < t.path[p - 1].time_step) {
        out.push_back({field + ".path", "waypoint times not sorted"});
        break;
      }
    }
    if (t.appear_time < 0) {
      out.push_back({field + ".appear_time", "must be >= 0"});
    }
  }

  if (!s.robots.empty() && s.r_c > 0.0) {
    const auto positions = initial_positions(s);
    if (!is_connected(build_graph(positions, s.r_c))) {
      out.push_back({"robots", "initial graph disconnected"});
    }
  }
  return out;
}

}  // namespace mrta
