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

#include "mrta/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mrta/error.hpp"

namespace mrta {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
};

bool edges_connect(std::size_t n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  DisjointSets sets(n);
  std::size_t components = n;
  for (const Edge& e : edges) {
    if (sets.unite(e.a, e.b)) --components;
  }
  return components == 1;
}

}  // namespace

double Mccst::total_weight() const {
  double sum = 0.0;
  for (const Edge& e : edges) sum += e.weight;
  return sum;
}

CommGraph build_graph(std::span<const Vec2> positions, double r_c) {
  CommGraph g;
  g.vertex_count = positions.size();
  const double r2 = r_c * r_c;
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = a + 1; b < positions.size(); ++b) {
      const double d2 = (positions[a] - positions[b]).squaredNorm();
      if (d2 <= r2) g.edges.push_back({a, b, d2});
    }
  }
  return g;
}

bool is_connected(const CommGraph& graph) {
  return edges_connect(graph.vertex_count, graph.edges);
}

Mccst build_mccst(const CommGraph& graph) {
  std::vector<Edge> sorted = graph.edges;
  std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) {
    if (x.weight != y.weight) return x.weight < y.weight;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  Mccst tree;
  tree.vertex_count = graph.vertex_count;
  DisjointSets sets(graph.vertex_count);
  for (const Edge& e : sorted) {
    if (tree.edges.size() + 1 >= graph.vertex_count) break;
    if (sets.unite(e.a, e.b)) tree.edges.push_back(e);
  }
  if (graph.vertex_count > 0 && tree.edges.size() + 1 != graph.vertex_count) {
    throw Error(ErrorCode::kDisconnectedGraph,
                "communication graph over " +
                    std::to_string(graph.vertex_count) +
                    " robots is disconnected");
  }
  return tree;
}

bool is_spanning_tree(const Mccst& tree) {
  if (tree.vertex_count == 0) return tree.edges.empty();
  if (tree.edges.size() + 1 != tree.vertex_count) return false;
  DisjointSets sets(tree.vertex_count);
  for (const Edge& e : tree.edges) {
    if (e.a >= tree.vertex_count || e.b >= tree.vertex_count) return false;
    if (!sets.unite(e.a, e.b)) return false;  // cycle
  }
  return true;  // n - 1 acyclic edges span n vertices
}

double edge_margin(std::span<const Vec2> positions, const Edge& edge,
                   double r_c) {
  return r_c * r_c - (positions[edge.a] - positions[edge.b]).squaredNorm();
}

std::vector<LinearControlConstraint> barrier_constraints(
    std::span<const Vec2> positions, const Mccst& tree, double r_c,
    double gamma) {
  const Eigen::Index dim = 2 * static_cast<Eigen::Index>(positions.size());
  std::vector<LinearControlConstraint> out;
  out.reserve(tree.edges.size());
  for (const Edge& e : tree.edges) {
    const Vec2 diff = positions[e.a] - positions[e.b];
    LinearControlConstraint c;
    c.coefficients = Eigen::VectorXd::Zero(dim);
    c.coefficients.segment<2>(2 * static_cast<Eigen::Index>(e.a)) = -2.0 * diff;
    c.coefficients.segment<2>(2 * static_cast<Eigen::Index>(e.b)) = 2.0 * diff;
    c.offset = gamma * (r_c * r_c - diff.squaredNorm());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace mrta
