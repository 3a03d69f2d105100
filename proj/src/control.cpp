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

#include "mrta/control.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace mrta {

Vec2 primary_controller(const Vec2& position,
                        const std::optional<Vec2>& target, double k_p) {
  if (!target) return Vec2::Zero();
  return -k_p * (position - *target);
}

double Smoothing::credit(double l, double d) const {
  if (kind == Kind::kHeaviside) return (l - d) >= 0.0 ? 1.0 : 0.0;
  return 1.0 / (1.0 + std::exp(-(k * (l - d) + b)));
}

CapabilityVector true_remaining(const TaskSnapshot& task,
                                std::span<const Robot> robots,
                                std::span<const Vec2> positions,
                                std::span<const std::size_t> assigned, double l,
                                Smoothing smoothing) {
  CapabilityVector supplied = CapabilityVector::Zero(task.requirement.size());
  for (std::size_t i : assigned) {
    const double d = (positions[i] - task.position).norm();
    supplied += smoothing.credit(l, d) * robots[i].capabilities;
  }
  return (task.requirement - supplied).cwiseMax(0.0);
}

std::vector<CapabilityVector> remaining_by_task(const AllocationProblem& problem,
                                                const Assignment& assignment,
                                                double l, Smoothing smoothing) {
  std::unordered_map<TaskId, std::size_t> index;
  for (std::size_t j = 0; j < problem.tasks.size(); ++j) {
    index[problem.tasks[j].id] = j;
  }
  std::vector<std::vector<std::size_t>> members(problem.tasks.size());
  for (std::size_t i = 0; i < problem.robots.size(); ++i) {
    auto it = index.find(assignment.task_of(problem.robots[i].id));
    if (it != index.end()) members[it->second].push_back(i);
  }
  std::vector<CapabilityVector> out;
  out.reserve(problem.tasks.size());
  for (std::size_t j = 0; j < problem.tasks.size(); ++j) {
    out.push_back(true_remaining(problem.tasks[j], problem.robots,
                                 problem.positions, members[j], l, smoothing));
  }
  return out;
}

std::vector<double> qp_weights(const AllocationProblem& problem,
                               const Assignment& assignment, double l,
                               Smoothing smoothing) {
  const auto remaining = remaining_by_task(problem, assignment, l, smoothing);
  std::unordered_map<TaskId, std::size_t> index;
  for (std::size_t j = 0; j < problem.tasks.size(); ++j) {
    index[problem.tasks[j].id] = j;
  }
  std::vector<double> weights(problem.robots.size(), 0.0);
  for (std::size_t i = 0; i < problem.robots.size(); ++i) {
    auto it = index.find(assignment.task_of(problem.robots[i].id));
    if (it == index.end()) continue;
    const TaskSnapshot& task = problem.tasks[it->second];
    weights[i] =
        task.importance * problem.robots[i].capabilities.dot(remaining[it->second]);
  }
  return weights;
}

}  // namespace mrta
