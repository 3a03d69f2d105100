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

#ifndef MRTA_SIM_HPP_
#define MRTA_SIM_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mrta/allocation.hpp"
#include "mrta/model.hpp"

namespace mrta {

struct Fault {
  enum class Kind { kDisconnectedGraph, kInfeasibleQp, kQpNotConverged };
  int step = 0;
  Kind kind = Kind::kDisconnectedGraph;
  std::string message;
};

const char* to_string(Fault::Kind kind);

struct LiveTask {
  Task task;  // task.explored is the live flag
  Vec2 position = Vec2::Zero();
  bool visible = false;
};

struct SimState {
  int step = 0;
  std::vector<Vec2> positions;  // scenario robot order
  std::vector<LiveTask> tasks;  // scenario task order
  Assignment assignment;
  std::vector<Fault> faults;
};

struct StepRecord {
  int step = 0;
  // Utility with Heaviside fulfillment at the post-move positions.
  double j_e = 0.0;
  double j_r = 0.0;
  double j_c = 0.0;
  double total_demand = 0.0;  // sum_j v_j sum_t w_jt over visible tasks
  std::vector<std::pair<RobotId, RobotId>> tree_edges;
  std::vector<double> edge_margins;  // r_c^2 - d^2 per tree edge, post-move
  double min_edge_margin = 0.0;      // +inf without edges
  double min_distance_margin = 0.0;  // min r_c - d over tree edges
  bool graph_connected = true;       // post-move communication graph
  Assignment assignment;
  std::map<TaskId, CapabilityVector> remaining;  // Heaviside rhat, visible
  std::vector<Vec2> positions;                   // post-move
  std::map<TaskId, Vec2> task_positions;         // visible tasks
  std::map<TaskId, bool> explored;               // visible tasks
  int fault_count = 0;
  bool reallocated = false;
  GreedyStats greedy;
};

struct SimTrace {
  std::vector<StepRecord> records;
  SimState final_state;
};

SimState initial_state(const Scenario& scenario);

// Allocation snapshot of the visible tasks at the state's current time.
AllocationProblem visible_problem(const SimState& state,
                                  const Scenario& scenario);

// One closed-loop tick: task motion and appearance, discovery, reallocation,
// weights, connectivity constraints, QP, integration, metrics.
std::pair<SimState, StepRecord> step(const SimState& state,
                                     const Scenario& scenario);

// Runs scenario.horizon steps from the initial state.
SimTrace run(const Scenario& scenario);

// Offset reduction applied to every barrier row so that the explicit-Euler
// update keeps h >= (1 - gamma dt) h exactly: the dropped second-order term
// is at most dt * |u_a - u_b|^2 <= 4 dt u_max^2.
double discretization_margin(const Scenario& scenario);

}  // namespace mrta

#endif  // MRTA_SIM_HPP_
