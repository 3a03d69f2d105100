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

#include "mrta/qp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mrta {

const char* to_string(QpStatus status) {
  switch (status) {
    case QpStatus::kOptimal: return "optimal";
    case QpStatus::kMaxIterations: return "max-iterations";
    case QpStatus::kInfeasible: return "infeasible";
  }
  return "unknown";
}

std::vector<LinearControlConstraint> speed_limit_constraints(
    std::size_t robot_count, double max_speed) {
  std::vector<LinearControlConstraint> out;
  if (!std::isfinite(max_speed)) return out;
  const Eigen::Index dim = 2 * static_cast<Eigen::Index>(robot_count);
  const double apothem = max_speed * std::cos(std::numbers::pi / 8.0);
  for (std::size_t i = 0; i < robot_count; ++i) {
    for (int k = 0; k < 8; ++k) {
      const double theta = k * std::numbers::pi / 4.0;
      LinearControlConstraint c;
      c.coefficients = Eigen::VectorXd::Zero(dim);
      c.coefficients[2 * static_cast<Eigen::Index>(i)] = -std::cos(theta);
      c.coefficients[2 * static_cast<Eigen::Index>(i) + 1] = -std::sin(theta);
      c.offset = apothem;
      out.push_back(std::move(c));
    }
  }
  return out;
}

double qp_objective(const QpProblem& problem, const Eigen::VectorXd& u) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < problem.weights.size(); ++i) {
    sum += problem.weights[i] *
           (u.segment<2>(2 * i) - problem.reference.segment<2>(2 * i))
               .squaredNorm();
  }
  return sum;
}

namespace {

// Rotation in the (p, q) plane zeroing `y` against `x`; returns false when
// both are zero.
struct Givens {
  double c = 1.0;
  double s = 0.0;
};

Givens make_givens(double x, double y) {
  const double h = std::hypot(x, y);
  if (h == 0.0) return {};
  return {x / h, y / h};
}

}  // namespace

// Works in the scaled variable v = D (u - ref), D = diag(sqrt(w)), where the
// problem becomes: minimize |v|^2 / 2 subject to n_k^T v + b_k >= 0. J is an
// orthogonal basis whose first q columns span the active normals, with
// J^T N_active = [R; 0].
QpSolution solve_qp(const QpProblem& problem, const QpOptions& options) {
  const Eigen::Index robots = problem.weights.size();
  const Eigen::Index dim = 2 * robots;

  std::vector<LinearControlConstraint> rows = problem.constraints;
  for (auto& c : speed_limit_constraints(static_cast<std::size_t>(robots),
                                         problem.max_speed)) {
    rows.push_back(std::move(c));
  }
  const Eigen::Index count = static_cast<Eigen::Index>(rows.size());

  Eigen::VectorXd inv_scale(dim);
  for (Eigen::Index i = 0; i < robots; ++i) {
    inv_scale.segment<2>(2 * i).setConstant(1.0 / std::sqrt(problem.weights[i]));
  }

  Eigen::MatrixXd normals(dim, count);
  Eigen::VectorXd shifted(count);
  Eigen::VectorXd row_norm(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    const Eigen::VectorXd& a = rows[k].coefficients;
    normals.col(k) = a.cwiseProduct(inv_scale);
    shifted[k] = a.dot(problem.reference) + rows[k].offset;
    row_norm[k] = a.norm();
  }

  QpSolution sol;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Identity(dim, dim);
  Eigen::MatrixXd upper = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<Eigen::Index> active;
  std::vector<double> lambda;
  std::vector<char> is_active(static_cast<std::size_t>(count), 0);
  const double select_tol = std::min(options.tolerance * 1e-3, 1e-9);
  constexpr double kEps = 1e-14;

  auto slack = [&](Eigen::Index k) {
    return normals.col(k).dot(v) + shifted[k];
  };
  auto scaled_slack = [&](Eigen::Index k) {
    const double s = slack(k);
    return row_norm[k] > 0.0 ? s / row_norm[k] : s;
  };

  auto drop = [&](std::size_t pos) {
    const Eigen::Index q = static_cast<Eigen::Index>(active.size());
    is_active[static_cast<std::size_t>(active[pos])] = 0;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
    lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(pos));
    for (Eigen::Index j = static_cast<Eigen::Index>(pos); j < q - 1; ++j) {
      upper.col(j) = upper.col(j + 1);
    }
    upper.col(q - 1).setZero();
    for (Eigen::Index j = static_cast<Eigen::Index>(pos); j < q - 1; ++j) {
      const Givens g = make_givens(upper(j, j), upper(j + 1, j));
      if (g.s == 0.0) continue;
      for (Eigen::Index col = j; col < q - 1; ++col) {
        const double x = upper(j, col);
        const double y = upper(j + 1, col);
        upper(j, col) = g.c * x + g.s * y;
        upper(j + 1, col) = -g.s * x + g.c * y;
      }
      upper(j + 1, j) = 0.0;
      const Eigen::VectorXd left = basis.col(j);
      basis.col(j) = g.c * left + g.s * basis.col(j + 1);
      basis.col(j + 1) = -g.s * left + g.c * basis.col(j + 1);
    }
  };

  auto add = [&](Eigen::Index k, Eigen::VectorXd d, double multiplier) {
    const Eigen::Index q = static_cast<Eigen::Index>(active.size());
    for (Eigen::Index j = dim - 1; j > q; --j) {
      const Givens g = make_givens(d[j - 1], d[j]);
      if (g.s == 0.0) continue;
      d[j - 1] = g.c * d[j - 1] + g.s * d[j];
      d[j] = 0.0;
      const Eigen::VectorXd left = basis.col(j - 1);
      basis.col(j - 1) = g.c * left + g.s * basis.col(j);
      basis.col(j) = -g.s * left + g.c * basis.col(j);
    }
    upper.col(q).head(q + 1) = d.head(q + 1);
    active.push_back(k);
    lambda.push_back(multiplier);
    is_active[static_cast<std::size_t>(k)] = 1;
  };

  bool done = false;
  while (!done) {
    if (sol.iterations >= options.max_iterations) {
      sol.status = QpStatus::kMaxIterations;
      break;
    }
    // Most violated inactive constraint.
    Eigen::Index p = -1;
    double worst = -select_tol;
    for (Eigen::Index k = 0; k < count; ++k) {
      if (is_active[static_cast<std::size_t>(k)]) continue;
      const double s = scaled_slack(k);
      if (s < worst) {
        worst = s;
        p = k;
      }
    }
    if (p < 0) break;

    double lambda_p = 0.0;
    while (true) {
      ++sol.iterations;
      const Eigen::Index q = static_cast<Eigen::Index>(active.size());
      const Eigen::VectorXd d = basis.transpose() * normals.col(p);
      const Eigen::VectorXd z = basis.rightCols(dim - q) * d.tail(dim - q);
      Eigen::VectorXd r(q);
      if (q > 0) {
        r = upper.topLeftCorner(q, q)
                .triangularView<Eigen::Upper>()
                .solve(d.head(q));
      }

      double t1 = std::numeric_limits<double>::infinity();
      std::size_t leave = 0;
      for (Eigen::Index j = 0; j < q; ++j) {
        if (r[j] > kEps) {
          const double ratio = lambda[static_cast<std::size_t>(j)] / r[j];
          if (ratio < t1) {
            t1 = ratio;
            leave = static_cast<std::size_t>(j);
          }
        }
      }
      const double zn = z.dot(normals.col(p));
      double t2 = std::numeric_limits<double>::infinity();
      if (z.squaredNorm() > kEps * std::max(1.0, normals.col(p).squaredNorm()) &&
          zn > 0.0) {
        t2 = -slack(p) / zn;
      }
      const double t = std::min(t1, t2);
      if (!std::isfinite(t)) {
        sol.status = QpStatus::kInfeasible;
        done = true;
        break;
      }
      if (!std::isfinite(t2)) {
        for (Eigen::Index j = 0; j < q; ++j) {
          lambda[static_cast<std::size_t>(j)] -= t * r[j];
        }
        lambda_p += t;
        drop(leave);
        if (sol.iterations >= options.max_iterations) {
          sol.status = QpStatus::kMaxIterations;
          done = true;
          break;
        }
        continue;
      }
      v += t * z;
      for (Eigen::Index j = 0; j < q; ++j) {
        lambda[static_cast<std::size_t>(j)] -= t * r[j];
      }
      lambda_p += t;
      if (t == t2) {
        add(p, d, lambda_p);
        break;
      }
      drop(leave);
      if (sol.iterations >= options.max_iterations) {
        sol.status = QpStatus::kMaxIterations;
        done = true;
        break;
      }
    }
  }

  sol.u = problem.reference + v.cwiseProduct(inv_scale);
  sol.multipliers = Eigen::VectorXd::Zero(count);
  for (std::size_t j = 0; j < active.size(); ++j) {
    sol.multipliers[active[j]] = 2.0 * lambda[j];
  }
  sol.max_violation = 0.0;
  for (Eigen::Index k = 0; k < count; ++k) {
    const double s = rows[k].evaluate(sol.u);
    const double scaled = row_norm[k] > 0.0 ? s / row_norm[k] : s;
    sol.max_violation = std::max(sol.max_violation, -scaled);
  }
  if (sol.status == QpStatus::kOptimal &&
      sol.max_violation > options.tolerance) {
    sol.status = QpStatus::kInfeasible;
  }
  return sol;
}

}  // namespace mrta
