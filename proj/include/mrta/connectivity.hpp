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

#ifndef MRTA_CONNECTIVITY_HPP_
#define MRTA_CONNECTIVITY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "mrta/model.hpp"

namespace mrta {

// Undirected edge between two robot indices, a < b.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  double weight = 0.0;  // squared distance
  bool operator==(const Edge&) const = default;
};

struct CommGraph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;  // sorted by (a, b)
};

struct Mccst {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  double total_weight() const;
};

// a^T u + offset >= 0 over the stacked control u = (u_1x, u_1y, u_2x, ...).
struct LinearControlConstraint {
  Eigen::VectorXd coefficients;
  double offset = 0.0;

  double evaluate(const Eigen::VectorXd& u) const {
    return coefficients.dot(u) + offset;
  }
};

// Threshold graph: edge iff |x_i - x_j| <= r_c (inclusive).
CommGraph build_graph(std::span<const Vec2> positions, double r_c);

bool is_connected(const CommGraph& graph);

// Minimum spanning tree under squared-distance weights, ties broken by
// (weight, a, b). Throws kDisconnectedGraph.
Mccst build_mccst(const CommGraph& graph);

// Checks acyclicity, |V| - 1 edges and connectivity.
bool is_spanning_tree(const Mccst& tree);

// h = r_c^2 - |x_a - x_b|^2 for one edge.
double edge_margin(std::span<const Vec2> positions, const Edge& edge,
                   double r_c);

// One constraint per tree edge: hdot + gamma * h >= 0 with
// hdot = -2 (x_a - x_b)^T (u_a - u_b).
std::vector<LinearControlConstraint> barrier_constraints(
    std::span<const Vec2> positions, const Mccst& tree, double r_c,
    double gamma);

}  // namespace mrta

#endif  // MRTA_CONNECTIVITY_HPP_
