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

#include "mrta/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>

#include "mrta/connectivity.hpp"
#include "mrta/control.hpp"
#include "mrta/error.hpp"
#include "mrta/qp.hpp"

namespace mrta {

const char* to_string(Fault::Kind kind) {
  switch (kind) {
    case Fault::Kind::kDisconnectedGraph: return "disconnected-graph";
    case Fault::Kind::kInfeasibleQp: return "infeasible-qp";
    case Fault::Kind::kQpNotConverged: return "qp-not-converged";
  }
  return "unknown";
}

double discretization_margin(const Scenario& scenario) {
  if (!std::isfinite(scenario.u_max)) return 0.0;
  return 4.0 * scenario.dt * scenario.u_max * scenario.u_max;
}

SimState initial_state(const Scenario& scenario) {
  SimState state;
  state.positions = initial_positions(scenario);
  for (const Task& t : scenario.tasks) {
    state.tasks.push_back({t, task_position_at(t, 0.0), false});
  }
  state.assignment = Assignment::all_idle(scenario.robots);
  return state;
}

AllocationProblem visible_problem(const SimState& state,
                                  const Scenario& scenario) {
  AllocationProblem p;
  p.robots = scenario.robots;
  p.positions = state.positions;
  p.alpha = scenario.alpha;
  for (const LiveTask& lt : state.tasks) {
    if (lt.visible) {
      p.tasks.push_back(effective_task(lt.task, scenario, lt.position));
    }
  }
  return p;
}

namespace {

void record_metrics(const AllocationProblem& problem, const SimState& state,
                    const Scenario& scenario, StepRecord& rec) {
  const auto remaining = remaining_by_task(problem, state.assignment,
                                           scenario.l, Smoothing::heaviside());
  rec.j_e = rec.j_r = rec.j_c = rec.total_demand = 0.0;
  for (std::size_t j = 0; j < problem.tasks.size(); ++j) {
    const TaskSnapshot& task = problem.tasks[j];
    const double demand = task.requirement.sum();
    const double left = remaining[j].sum();
    rec.total_demand += task.importance * demand;
    rec.j_r += task.importance * left;
    rec.j_e += task.importance * (demand - left);
    rec.remaining[task.id] = remaining[j];
    rec.task_positions[task.id] = task.position;
  }
  std::unordered_map<TaskId, std::size_t> index;
  for (std::size_t j = 0; j < problem.tasks.size(); ++j) {
    index[problem.tasks[j].id] = j;
  }
  for (std::size_t i = 0; i < problem.robots.size(); ++i) {
    auto it = index.find(state.assignment.task_of(problem.robots[i].id));
    if (it == index.end()) continue;
    rec.j_c += travel_term(state.positions[i],
                           problem.tasks[it->second].position);
  }
  rec.j_c *= scenario.alpha;
  for (const LiveTask& lt : state.tasks) {
    if (lt.visible) rec.explored[lt.task.id] = lt.task.explored;
  }
}

}  // namespace

std::pair<SimState, StepRecord> step(const SimState& state,
                                     const Scenario& scenario) {
  SimState next = state;
  StepRecord rec;
  rec.step = state.step;
  const double now = static_cast<double>(state.step);
  const std::size_t n = scenario.robots.size();

  // Task motion and appearance.
  bool changed = false;
  for (LiveTask& lt : next.tasks) {
    lt.position = task_position_at(lt.task, now);
    if (!lt.visible && lt.task.appear_time <= state.step) {
      lt.visible = true;
      changed = true;
    }
  }

  // Discovery by any sensing robot within the execution range.
  for (LiveTask& lt : next.tasks) {
    if (!lt.visible || lt.task.explored) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (can_sense(scenario.robots[i], scenario.sensing_category) &&
          (next.positions[i] - lt.position).norm() <= scenario.l) {
        lt.task.explored = true;
        changed = true;
        break;
      }
    }
  }

  AllocationProblem problem = visible_problem(next, scenario);
  if (changed || state.step % scenario.realloc_period == 0) {
    GreedyResult g = greedy_assign(problem, next.assignment);
    next.assignment = std::move(g.assignment);
    rec.reallocated = true;
    rec.greedy = g.stats;
  }

  const std::vector<double> weights =
      qp_weights(problem, next.assignment, scenario.l,
                 Smoothing::sigmoid(scenario.k, scenario.b));

  std::unordered_map<TaskId, Vec2> target_of;
  for (const TaskSnapshot& t : problem.tasks) target_of[t.id] = t.position;

  QpProblem qp;
  qp.weights.resize(static_cast<Eigen::Index>(n));
  qp.reference.resize(2 * static_cast<Eigen::Index>(n));
  qp.max_speed = scenario.u_max;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<Vec2> target;
    auto it = target_of.find(next.assignment.task_of(scenario.robots[i].id));
    if (it != target_of.end()) target = it->second;
    qp.weights[static_cast<Eigen::Index>(i)] = weights[i] + 1.0;
    qp.reference.segment<2>(2 * static_cast<Eigen::Index>(i)) =
        primary_controller(next.positions[i], target, scenario.k_p);
  }

  Eigen::VectorXd u = Eigen::VectorXd::Zero(2 * static_cast<Eigen::Index>(n));
  std::optional<Mccst> tree;
  auto fault = [&](Fault::Kind kind, std::string message) {
    next.faults.push_back({state.step, kind, std::move(message)});
    ++rec.fault_count;
  };

  const CommGraph graph = build_graph(next.positions, scenario.r_c);
  if (!is_connected(graph)) {
    fault(Fault::Kind::kDisconnectedGraph,
          "communication graph disconnected at step " +
              std::to_string(state.step));
  } else {
    tree = build_mccst(graph);
    qp.constraints =
        barrier_constraints(next.positions, *tree, scenario.r_c, scenario.gamma);
    const double margin = discretization_margin(scenario);
    for (LinearControlConstraint& c : qp.constraints) c.offset -= margin;
    const QpSolution sol = solve_qp(qp);
    if (sol.status == QpStatus::kOptimal) {
      u = sol.u;
    } else {
      fault(sol.status == QpStatus::kInfeasible ? Fault::Kind::kInfeasibleQp
                                                : Fault::Kind::kQpNotConverged,
            std::string("qp ") + to_string(sol.status) + " at step " +
                std::to_string(state.step) + ", violation " +
                std::to_string(sol.max_violation));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    next.positions[i] +=
        scenario.dt * u.segment<2>(2 * static_cast<Eigen::Index>(i));
  }

  problem.positions = next.positions;
  record_metrics(problem, next, scenario, rec);
  rec.min_edge_margin = std::numeric_limits<double>::infinity();
  rec.min_distance_margin = std::numeric_limits<double>::infinity();
  if (tree) {
    for (const Edge& e : tree->edges) {
      const double h = edge_margin(next.positions, e, scenario.r_c);
      rec.tree_edges.emplace_back(scenario.robots[e.a].id,
                                  scenario.robots[e.b].id);
      rec.edge_margins.push_back(h);
      rec.min_edge_margin = std::min(rec.min_edge_margin, h);
      rec.min_distance_margin = std::min(
          rec.min_distance_margin,
          scenario.r_c - (next.positions[e.a] - next.positions[e.b]).norm());
    }
  }
  rec.graph_connected = is_connected(build_graph(next.positions, scenario.r_c));
  rec.assignment = next.assignment;
  rec.positions = next.positions;
  next.step = state.step + 1;
  return {std::move(next), std::move(rec)};
}

SimTrace run(const Scenario& scenario) {
  SimTrace trace;
  trace.final_state = initial_state(scenario);
  trace.records.reserve(static_cast<std::size_t>(std::max(0, scenario.horizon)));
  for (int h = 0; h < scenario.horizon; ++h) {
    auto [next, rec] = step(trace.final_state, scenario);
    trace.final_state = std::move(next);
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace mrta
