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

#ifndef MRTA_CONTROL_HPP_
#define MRTA_CONTROL_HPP_

#include <optional>
#include <span>
#include <vector>

#include "mrta/allocation.hpp"
#include "mrta/model.hpp"

namespace mrta {

// -k_p (x - target); zero for an idle robot.
Vec2 primary_controller(const Vec2& position,
                        const std::optional<Vec2>& target, double k_p);

// How a robot's contribution fades with distance from its task.
struct Smoothing {
  enum class Kind { kHeaviside, kSigmoid };
  Kind kind = Kind::kHeaviside;
  double k = 10.0;
  double b = 0.0;

  static Smoothing heaviside() { return {}; }
  static Smoothing sigmoid(double k, double b) {
    return {Kind::kSigmoid, k, b};
  }

  // Fraction of capability credited to a robot at distance d.
  double credit(double l, double d) const;
};

// max(0, w - sum_i c_i * credit(L - d_i)) over the given robot indices.
CapabilityVector true_remaining(const TaskSnapshot& task,
                                std::span<const Robot> robots,
                                std::span<const Vec2> positions,
                                std::span<const std::size_t> assigned, double l,
                                Smoothing smoothing);

// Remaining requirement of every task of the problem, aligned with
// problem.tasks.
std::vector<CapabilityVector> remaining_by_task(const AllocationProblem& problem,
                                                const Assignment& assignment,
                                                double l, Smoothing smoothing);

// a_i = v_j * sum_t c_it * rhat_jt for the task j robot i works on, zero when
// idle. Aligned with problem.robots.
std::vector<double> qp_weights(const AllocationProblem& problem,
                               const Assignment& assignment, double l,
                               Smoothing smoothing);

}  // namespace mrta

#endif  // MRTA_CONTROL_HPP_
