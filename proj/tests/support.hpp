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

// Shared fixtures for the test binaries.

#ifndef MRTA_TESTS_SUPPORT_HPP_
#define MRTA_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mrta/allocation.hpp"
#include "mrta/model.hpp"

namespace mrta::testing {

struct InstanceSpec {
  int n = 4;
  int m = 2;
  int o = 1;
  int req_lo = 10;
  int req_hi = 50;
  int imp_lo = 1;
  int imp_hi = 10;
  int cap_lo = 0;
  int cap_hi = 20;
  double alpha = 0.0;
  double spread = 10.0;  // positions uniform in [-spread, spread]^2
};

inline AllocationProblem random_problem(const InstanceSpec& spec,
                                        std::mt19937_64& rng) {
  std::uniform_int_distribution<int> req(spec.req_lo, spec.req_hi);
  std::uniform_int_distribution<int> imp(spec.imp_lo, spec.imp_hi);
  std::uniform_int_distribution<int> cap(spec.cap_lo, spec.cap_hi);
  std::uniform_real_distribution<double> pos(-spec.spread, spec.spread);
  AllocationProblem p;
  p.alpha = spec.alpha;
  for (int i = 0; i < spec.n; ++i) {
    CapabilityVector c(spec.o);
    for (int t = 0; t < spec.o; ++t) c[t] = cap(rng);
    p.robots.push_back({i, {0.0, 0.0}, c});
    p.positions.emplace_back(pos(rng), pos(rng));
  }
  for (int j = 0; j < spec.m; ++j) {
    TaskSnapshot t;
    t.id = j + 1;
    t.position = {pos(rng), pos(rng)};
    t.importance = imp(rng);
    t.requirement.resize(spec.o);
    for (int q = 0; q < spec.o; ++q) t.requirement[q] = req(rng);
    p.tasks.push_back(t);
  }
  return p;
}

// Objective written directly from its definition, one task at a time.
inline double naive_f(const AllocationProblem& p, const std::vector<int>& slot) {
  double f = 0.0;
  for (std::size_t j = 0; j < p.tasks.size(); ++j) {
    const TaskSnapshot& task = p.tasks[j];
    for (Eigen::Index t = 0; t < task.requirement.size(); ++t) {
      double s = 0.0;
      for (std::size_t i = 0; i < slot.size(); ++i) {
        if (slot[i] == static_cast<int>(j) + 1) s += p.robots[i].capabilities[t];
      }
      f += task.importance * std::min(task.requirement[t], s);
    }
    for (std::size_t i = 0; i < slot.size(); ++i) {
      if (slot[i] == static_cast<int>(j) + 1) {
        f += p.alpha / (1.0 + std::hypot(p.positions[i].x() - task.position.x(),
                                         p.positions[i].y() - task.position.y()));
      }
    }
  }
  return f;
}

// Maximum of naive_f over every map robot -> {0..m}, by recursion.
inline double naive_optimum(const AllocationProblem& p) {
  std::vector<int> slot(p.robots.size(), 0);
  double best = -std::numeric_limits<double>::infinity();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == slot.size()) {
      best = std::max(best, naive_f(p, slot));
      return;
    }
    for (int j = 0; j <= static_cast<int>(p.tasks.size()); ++j) {
      slot[i] = j;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return best;
}

inline std::vector<int> slots(const AllocationProblem& p, const Assignment& a) {
  std::vector<int> out(p.robots.size(), 0);
  for (std::size_t i = 0; i < p.robots.size(); ++i) {
    const TaskId t = a.task_of(p.robots[i].id);
    for (std::size_t j = 0; j < p.tasks.size(); ++j) {
      if (p.tasks[j].id == t) out[i] = static_cast<int>(j) + 1;
    }
  }
  return out;
}

// Random legal nested sets X ⊆ Y and an element e whose robot is free in Y.
struct NestedTriple {
  PairSet x;
  PairSet y;
  Pair e;
};

inline NestedTriple random_triple(const AllocationProblem& p,
                                  std::mt19937_64& rng) {
  const int n = static_cast<int>(p.robots.size());
  const int m = static_cast<int>(p.tasks.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> task(1, m);
  std::uniform_int_distribution<int> size_y(0, n - 1);
  NestedTriple out;
  const int ny = size_y(rng);
  const int nx = std::uniform_int_distribution<int>(0, ny)(rng);
  for (int k = 0; k < ny; ++k) {
    const Pair e{p.robots[order[k]].id, p.tasks[task(rng) - 1].id};
    out.y.push_back(e);
    if (k < nx) out.x.push_back(e);
  }
  out.e = {p.robots[order[ny]].id, p.tasks[task(rng) - 1].id};
  return out;
}

}  // namespace mrta::testing

#endif  // MRTA_TESTS_SUPPORT_HPP_
