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

#ifndef MRTA_QP_HPP_
#define MRTA_QP_HPP_

#include <limits>
#include <vector>

#include <Eigen/Core>

#include "mrta/connectivity.hpp"

namespace mrta {

// minimize   sum_i w_i |u_i - ref_i|^2
// subject to a_k^T u + offset_k >= 0          (general constraints)
//            u_i inside the regular octagon inscribed in |u_i| <= max_speed
//
// Dimension is 2 * weights.size(); u is stacked (u_1x, u_1y, u_2x, ...).
struct QpProblem {
  Eigen::VectorXd weights;    // per robot, each >= 1
  Eigen::VectorXd reference;  // 2n
  std::vector<LinearControlConstraint> constraints;
  double max_speed = std::numeric_limits<double>::infinity();
};

enum class QpStatus { kOptimal, kMaxIterations, kInfeasible };

const char* to_string(QpStatus status);

struct QpSolution {
  Eigen::VectorXd u;
  QpStatus status = QpStatus::kOptimal;
  // Largest violation over all constraints, rows scaled to unit norm.
  double max_violation = 0.0;
  int iterations = 0;
  // Multipliers of the general constraints followed by the 8n octagon
  // half-planes (robot-major).
  Eigen::VectorXd multipliers;
};

struct QpOptions {
  int max_iterations = 500;
  double tolerance = 1e-6;
};

// The 8 half-planes per robot bounding the speed octagon, as general
// constraints. Vertices lie on the circle of radius max_speed.
std::vector<LinearControlConstraint> speed_limit_constraints(
    std::size_t robot_count, double max_speed);

// Dual active-set (Goldfarb-Idnani) solve. Exact up to round-off on
// termination with kOptimal.
QpSolution solve_qp(const QpProblem& problem, const QpOptions& options = {});

// Objective value of a candidate control.
double qp_objective(const QpProblem& problem, const Eigen::VectorXd& u);

}  // namespace mrta

#endif  // MRTA_QP_HPP_
