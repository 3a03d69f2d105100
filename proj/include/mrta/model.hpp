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

#ifndef MRTA_MODEL_HPP_
#define MRTA_MODEL_HPP_

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mrta {

using Vec2 = Eigen::Vector2d;
// Units per capability category. Capabilities, requirements and remaining
// requirements all live in this space.
using CapabilityVector = Eigen::VectorXd;

using RobotId = int;
using TaskId = int;

// Task id 0 is the idle ("available") pseudo-task.
inline constexpr TaskId kIdleTask = 0;

struct Robot {
  RobotId id = 0;
  Vec2 position = Vec2::Zero();
  CapabilityVector capabilities;
};

// True iff the robot carries at least one unit-fraction of the sensing
// category.
bool can_sense(const Robot& robot, int sensing_category);

struct Waypoint {
  double time_step = 0.0;
  Vec2 position = Vec2::Zero();
};

struct Task {
  TaskId id = 1;
  Vec2 position = Vec2::Zero();
  double importance = 0.0;
  CapabilityVector requirement;
  bool explored = true;
  // Piecewise-linear in step time; empty for a static task.
  std::vector<Waypoint> path;
  int appear_time = 0;
};

// Position of a task at a (possibly fractional) simulation step.
Vec2 task_position_at(const Task& task, double step);

struct Scenario {
  std::vector<Robot> robots;
  std::vector<Task> tasks;
  int o = 1;                   // category count
  int sensing_category = 0;    // zero-based category index
  double r_c = 1.0;            // communication range [m]
  double l = 1.0;              // execution range [m]
  double alpha = 0.0;          // travel weight
  double v_unknown = 0.0;      // importance of unexplored tasks
  double gamma = 1.0;          // barrier rate [1/s]
  double k_p = 1.0;            // proportional gain [1/s]
  double dt = 0.05;            // step [s]
  double u_max = 1.0;          // speed limit [m/s]
  double k = 10.0;             // sigmoid scale
  double b = 0.0;              // sigmoid shift
  int horizon = 1;
  std::uint64_t seed = 0;
  int realloc_period = 50;     // periodic greedy refresh [steps]
  int snapshot_period = 100;   // JSON snapshot spacing [steps]
};

// The values the allocator sees for one task at one instant: unexplored
// tasks are replaced by the placeholder demand.
struct TaskSnapshot {
  TaskId id = 1;
  Vec2 position = Vec2::Zero();
  double importance = 0.0;
  CapabilityVector requirement;
};

// Effective task as seen by the allocator. An unexplored task reports
// importance v_unknown and one unit of the sensing category.
TaskSnapshot effective_task(const Task& task, const Scenario& scenario,
                            const Vec2& position);
TaskSnapshot effective_task(const Task& task, const Scenario& scenario);

// Robot-to-task map. Robots not present in the map are idle.
class Assignment {
 public:
  Assignment() = default;

  static Assignment all_idle(std::span<const Robot> robots);

  TaskId task_of(RobotId robot) const;
  void assign(RobotId robot, TaskId task);
  const std::map<RobotId, TaskId>& entries() const { return map_; }
  std::size_t size() const { return map_.size(); }

  bool operator==(const Assignment&) const = default;

 private:
  std::map<RobotId, TaskId> map_;
};

struct Violation {
  std::string field;
  std::string message;
};

// Returns every invariant violation of the scenario, including a
// disconnected initial communication graph. An empty list means valid.
std::vector<Violation> validate_scenario(const Scenario& scenario);

// Robot positions in scenario order.
std::vector<Vec2> initial_positions(const Scenario& scenario);

}  // namespace mrta

#endif  // MRTA_MODEL_HPP_
