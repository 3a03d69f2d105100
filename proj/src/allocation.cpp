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

#include "mrta/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

#include "mrta/error.hpp"

namespace mrta {

namespace {

// Increment of J_e when capability c joins a task with live requirement w.
double gain_of(const CapabilityVector& c, const CapabilityVector& w,
               double importance) {
  double sum = 0.0;
  for (Eigen::Index t = 0; t < c.size(); ++t) {
    sum += std::min(c[t], std::max(0.0, w[t]));
  }
  return importance * sum;
}

// Decrement of J_e when capability c leaves a task whose live requirement
// (with c already subtracted) is w.
double loss_of(const CapabilityVector& c, const CapabilityVector& w,
               double importance) {
  double sum = 0.0;
  for (Eigen::Index t = 0; t < c.size(); ++t) {
    sum += std::max(0.0, std::min(w[t] + c[t], c[t]));
  }
  return importance * sum;
}

std::unordered_map<TaskId, int> task_indices(const AllocationProblem& p) {
  std::unordered_map<TaskId, int> out;
  for (std::size_t j = 0; j < p.tasks.size(); ++j) {
    out[p.tasks[j].id] = static_cast<int>(j) + 1;
  }
  return out;
}

std::unordered_map<RobotId, std::size_t> robot_indices(
    const AllocationProblem& p) {
  std::unordered_map<RobotId, std::size_t> out;
  for (std::size_t i = 0; i < p.robots.size(); ++i) out[p.robots[i].id] = i;
  return out;
}

// Utility of an index-based assignment: slot[i] in {0 (idle), 1..m}.
UtilityReport evaluate(const AllocationProblem& p, std::span<const int> slot) {
  const std::size_t m = p.tasks.size();
  std::vector<CapabilityVector> supplied;
  supplied.reserve(m);
  for (const TaskSnapshot& t : p.tasks) {
    supplied.push_back(CapabilityVector::Zero(t.requirement.size()));
  }
  UtilityReport r;
  for (std::size_t i = 0; i < slot.size(); ++i) {
    if (slot[i] == 0) continue;
    const std::size_t j = static_cast<std::size_t>(slot[i]) - 1;
    supplied[j] += p.robots[i].capabilities;
    r.j_c += travel_term(p.positions[i], p.tasks[j].position);
  }
  r.j_c *= p.alpha;
  for (std::size_t j = 0; j < m; ++j) {
    const TaskSnapshot& task = p.tasks[j];
    double effective = 0.0;
    double remaining = 0.0;
    for (Eigen::Index t = 0; t < task.requirement.size(); ++t) {
      const double w = task.requirement[t];
      effective += std::min(w, supplied[j][t]);
      remaining += std::max(0.0, w - supplied[j][t]);
    }
    r.j_e += task.importance * effective;
    r.j_r += task.importance * remaining;
  }
  r.f = r.j_e + r.j_c;
  return r;
}

std::vector<int> slots_of(const AllocationProblem& p,
                          const Assignment& assignment) {
  const auto tasks = task_indices(p);
  std::vector<int> slot(p.robots.size(), 0);
  for (std::size_t i = 0; i < p.robots.size(); ++i) {
    const TaskId t = assignment.task_of(p.robots[i].id);
    if (t == kIdleTask) continue;
    auto it = tasks.find(t);
    if (it != tasks.end()) slot[i] = it->second;
  }
  return slot;
}

}  // namespace

AllocationProblem make_problem(const Scenario& scenario,
                               std::span<const Vec2> positions) {
  if (positions.size() != scenario.robots.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "positions size " + std::to_string(positions.size()) +
                    " != robot count " +
                    std::to_string(scenario.robots.size()));
  }
  AllocationProblem p;
  p.robots = scenario.robots;
  p.positions.assign(positions.begin(), positions.end());
  for (const Task& t : scenario.tasks) {
    p.tasks.push_back(effective_task(t, scenario));
  }
  p.alpha = scenario.alpha;
  return p;
}

void check_assignment(const AllocationProblem& problem,
                      const Assignment& assignment) {
  const auto robots = robot_indices(problem);
  const auto tasks = task_indices(problem);
  for (const auto& [robot, task] : assignment.entries()) {
    if (!robots.contains(robot)) {
      throw Error(ErrorCode::kInvalidAssignment,
                  "assignment names unknown robot " + std::to_string(robot));
    }
    if (task != kIdleTask && !tasks.contains(task)) {
      throw Error(ErrorCode::kInvalidAssignment,
                  "robot " + std::to_string(robot) + " assigned to unknown task " +
                      std::to_string(task));
    }
  }
}

UtilityReport objective(const AllocationProblem& problem,
                        const Assignment& assignment) {
  check_assignment(problem, assignment);
  const auto slot = slots_of(problem, assignment);
  return evaluate(problem, slot);
}

UtilityReport objective(const Scenario& scenario, const Assignment& assignment,
                        std::span<const Vec2> positions) {
  return objective(make_problem(scenario, positions), assignment);
}

LiveRequirements live_requirements(const AllocationProblem& problem,
                                   const Assignment& assignment) {
  check_assignment(problem, assignment);
  LiveRequirements live;
  for (const TaskSnapshot& t : problem.tasks) live[t.id] = t.requirement;
  for (std::size_t i = 0; i < problem.robots.size(); ++i) {
    const TaskId t = assignment.task_of(problem.robots[i].id);
    if (t != kIdleTask) live[t] -= problem.robots[i].capabilities;
  }
  return live;
}

RewardBreakdown reward(const AllocationProblem& problem, RobotId robot,
                       TaskId candidate_task, TaskId current_task,
                       const LiveRequirements& live) {
  const auto robots = robot_indices(problem);
  const auto tasks = task_indices(problem);
  auto rit = robots.find(robot);
  if (rit == robots.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown robot " + std::to_string(robot));
  }
  auto find_task = [&](TaskId id) -> const TaskSnapshot& {
    auto it = tasks.find(id);
    if (it == tasks.end() || !live.contains(id)) {
      throw Error(ErrorCode::kUnknownTask, "unknown task " + std::to_string(id));
    }
    return problem.tasks[static_cast<std::size_t>(it->second) - 1];
  };
  RewardBreakdown r;
  if (candidate_task == kIdleTask) {
    if (current_task != kIdleTask) find_task(current_task);
    r.total = problem.alpha;
    return r;
  }
  const Robot& rb = problem.robots[rit->second];
  const TaskSnapshot& cand = find_task(candidate_task);
  r.gain = gain_of(rb.capabilities, live.at(candidate_task), cand.importance);
  if (current_task != kIdleTask) {
    const TaskSnapshot& cur = find_task(current_task);
    r.loss = loss_of(rb.capabilities, live.at(current_task), cur.importance);
  }
  r.travel = travel_term(problem.positions[rit->second], cand.position);
  r.total = r.gain - r.loss + problem.alpha * r.travel;
  return r;
}

// Robots sharing a capability vector and a current task differ only in the
// travel term, so each class keeps one list per task sorted by alpha * h
// (descending, then robot id). The best robot of a class for a task is the
// first live entry of its list; equal keys form runs that are skipped whole.
namespace {

// One sweep of the adaptive greedy from `current`. Returns the robots moved,
// in commit order.
std::vector<std::size_t> greedy_pass(const AllocationProblem& problem,
                                     std::vector<int>& current,
                                     std::vector<CapabilityVector>& live,
                                     const std::vector<double>& importance,
                                     double tolerance, GreedyStats& stats) {
  const std::size_t n = problem.robots.size();
  const std::size_t m = problem.tasks.size();
  const double alpha = problem.alpha;
  struct Entry {
    std::size_t robot;
    double key;
  };
  struct List {
    std::vector<Entry> entries;
    std::vector<std::size_t> run_next;  // first index with a different key
    std::size_t head = 0;
  };
  struct Class {
    std::size_t exemplar;
    int current;
    std::size_t alive = 0;
    std::vector<List> lists;  // index j - 1
  };

  std::map<std::pair<std::vector<double>, int>, std::size_t> class_index;
  std::vector<Class> classes;
  std::vector<std::size_t> class_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CapabilityVector& c = problem.robots[i].capabilities;
    std::pair<std::vector<double>, int> key{
        std::vector<double>(c.data(), c.data() + c.size()), current[i]};
    auto [it, inserted] = class_index.try_emplace(std::move(key), classes.size());
    if (inserted) {
      classes.push_back({i, current[i], 0, std::vector<List>(m)});
    }
    class_of[i] = it->second;
    Class& cls = classes[it->second];
    ++cls.alive;
    for (std::size_t j = 0; j < m; ++j) {
      const double travel =
          travel_term(problem.positions[i], problem.tasks[j].position);
      cls.lists[j].entries.push_back({i, alpha * travel});
    }
  }
  for (Class& cls : classes) {
    for (List& list : cls.lists) {
      std::stable_sort(list.entries.begin(), list.entries.end(),
                       [&](const Entry& a, const Entry& b) {
                         if (a.key != b.key) return a.key > b.key;
                         return problem.robots[a.robot].id <
                                problem.robots[b.robot].id;
                       });
      const std::size_t size = list.entries.size();
      list.run_next.assign(size, size);
      for (std::size_t q = size; q-- > 1;) {
        list.run_next[q - 1] = list.entries[q - 1].key == list.entries[q].key
                                   ? list.run_next[q]
                                   : q;
      }
    }
  }

  std::vector<char> in_pool(n, 1);
  std::size_t pool = n;
  std::vector<std::size_t> moved;

  while (pool > 0) {
    ++stats.rounds;
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_robot = n;
    std::size_t best_task = 0;
    auto consider = [&](double p, std::size_t robot, std::size_t task) {
      const bool better =
          p > best ||
          (p == best && best_robot < n &&
           (problem.robots[robot].id < problem.robots[best_robot].id ||
            (robot == best_robot && task < best_task)));
      if (better || best_robot == n) {
        best = p;
        best_robot = robot;
        best_task = task;
      }
    };

    for (Class& cls : classes) {
      if (cls.alive == 0) continue;
      const CapabilityVector& c = problem.robots[cls.exemplar].capabilities;
      const double loss =
          cls.current == 0
              ? 0.0
              : loss_of(c, live[cls.current], importance[cls.current]);
      for (std::size_t j = 1; j <= m; ++j) {
        List& list = cls.lists[j - 1];
        while (!in_pool[list.entries[list.head].robot]) ++list.head;
        const double base = gain_of(c, live[j], importance[j]) - loss;
        const Entry& head = list.entries[list.head];
        const double p = base + head.key;
        ++stats.evaluations;
        consider(p, head.robot, j);
        // Smaller keys can still round to the same total; their first live
        // member may carry a lower id.
        std::size_t q = list.run_next[list.head];
        while (q < list.entries.size()) {
          if (!in_pool[list.entries[q].robot]) {
            ++q;
            continue;
          }
          const double pq = base + list.entries[q].key;
          ++stats.evaluations;
          if (pq < p) break;
          consider(pq, list.entries[q].robot, j);
          q = list.run_next[q];
        }
      }
    }

    if (best_robot == n || best <= alpha + tolerance) break;

    const int from = current[best_robot];
    const CapabilityVector& c = problem.robots[best_robot].capabilities;
    live[best_task] -= c;
    if (from != 0) live[from] += c;
    current[best_robot] = static_cast<int>(best_task);
    in_pool[best_robot] = 0;
    --classes[class_of[best_robot]].alive;
    --pool;
    ++stats.moves;
    moved.push_back(best_robot);
  }
  return moved;
}


std::vector<CapabilityVector> live_of(const AllocationProblem& problem,
                                      const std::vector<int>& current) {
  std::vector<CapabilityVector> live(problem.tasks.size() + 1);
  for (std::size_t j = 0; j < problem.tasks.size(); ++j) {
    live[j + 1] = problem.tasks[j].requirement;
  }
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (current[i] != 0) live[current[i]] -= problem.robots[i].capabilities;
  }
  return live;
}

}  // namespace

GreedyResult greedy_assign(const AllocationProblem& problem,
                           const Assignment& previous) {
  const std::size_t n = problem.robots.size();
  const std::size_t m = problem.tasks.size();
  const double alpha = problem.alpha;
  const auto tasks = task_indices(problem);

  std::vector<int> current(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const TaskId t = previous.task_of(problem.robots[i].id);
    if (t == kIdleTask) continue;
    if (auto it = tasks.find(t); it != tasks.end()) current[i] = it->second;
  }
  std::vector<double> importance(m + 1, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    importance[j + 1] = problem.tasks[j].importance;
  }
  const double tolerance = 1e-9 * std::max(1.0, std::abs(alpha));

  GreedyResult result;
  while (true) {
    std::vector<CapabilityVector> live = live_of(problem, current);
    const std::vector<std::size_t> moved = greedy_pass(
        problem, current, live, importance, tolerance, result.stats);
    if (++result.stats.passes == 1) {
      result.stats.first_pass_evaluations = result.stats.evaluations;
    }
    // Robots left in the pool were checked in the final round and the last
    // robot to move cannot improve, so only earlier movers need a look.
    bool improvable = false;
    for (std::size_t k = 0; k + 1 < moved.size() && !improvable; ++k) {
      const std::size_t i = moved[k];
      const CapabilityVector& c = problem.robots[i].capabilities;
      const double loss = loss_of(c, live[current[i]], importance[current[i]]);
      for (std::size_t j = 1; j <= m; ++j) {
        ++result.stats.evaluations;
        const double p = gain_of(c, live[j], importance[j]) - loss +
                         alpha * travel_term(problem.positions[i],
                                             problem.tasks[j - 1].position);
        if (p > alpha + tolerance) {
          improvable = true;
          break;
        }
      }
    }
    if (!improvable) break;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const TaskId t =
        current[i] == 0 ? kIdleTask
                        : problem.tasks[static_cast<std::size_t>(current[i]) - 1].id;
    result.assignment.assign(problem.robots[i].id, t);
  }
  return result;
}

GreedyResult greedy_assign(const Scenario& scenario,
                           const Assignment& previous,
                           std::span<const Vec2> positions) {
  return greedy_assign(make_problem(scenario, positions), previous);
}

std::uint64_t enumeration_size(std::size_t robots, std::size_t tasks) {
  std::uint64_t total = 1;
  const std::uint64_t base = static_cast<std::uint64_t>(tasks) + 1;
  for (std::size_t i = 0; i < robots; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= base;
  }
  return total;
}

BruteForceResult brute_force_assign(const AllocationProblem& problem,
                                    std::uint64_t cap) {
  const std::size_t n = problem.robots.size();
  const std::size_t m = problem.tasks.size();
  const std::uint64_t size = enumeration_size(n, m);
  if (size > cap) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "(m+1)^n = " + std::to_string(m + 1) + "^" + std::to_string(n) +
                    " exceeds oracle cap " + std::to_string(cap));
  }
  BruteForceResult result;
  std::vector<int> slot(n, 0);
  std::vector<int> best_slot(n, 0);
  double best_f = -std::numeric_limits<double>::infinity();
  // Odometer with robot 0 as the most significant digit: lexicographic.
  while (true) {
    const UtilityReport r = evaluate(problem, slot);
    ++result.evaluated;
    if (r.f > best_f) {
      best_f = r.f;
      best_slot = slot;
      result.report = r;
    }
    bool carry = true;
    for (std::size_t d = n; d > 0 && carry;) {
      --d;
      if (slot[d] < static_cast<int>(m)) {
        ++slot[d];
        carry = false;
      } else {
        slot[d] = 0;
      }
    }
    if (carry) break;
  }
  for (std::size_t i = 0; i < n; ++i) {
    result.assignment.assign(
        problem.robots[i].id,
        best_slot[i] == 0
            ? kIdleTask
            : problem.tasks[static_cast<std::size_t>(best_slot[i]) - 1].id);
  }
  return result;
}

double set_value(const AllocationProblem& problem, const PairSet& pairs) {
  const auto robots = robot_indices(problem);
  const auto tasks = task_indices(problem);
  std::vector<int> slot(problem.robots.size(), 0);
  for (const Pair& e : pairs) {
    auto rit = robots.find(e.robot);
    auto tit = tasks.find(e.task);
    if (rit == robots.end() || tit == tasks.end()) {
      throw Error(ErrorCode::kIllegalElement,
                  "pair (" + std::to_string(e.robot) + ", " +
                      std::to_string(e.task) + ") outside the ground set");
    }
    if (slot[rit->second] != 0) {
      throw Error(ErrorCode::kIllegalElement,
                  "robot " + std::to_string(e.robot) + " appears twice");
    }
    slot[rit->second] = tit->second;
  }
  return evaluate(problem, slot).f;
}

double marginal_gain(const AllocationProblem& problem, const PairSet& partial,
                     const Pair& element) {
  for (const Pair& e : partial) {
    if (e.robot == element.robot) {
      throw Error(ErrorCode::kIllegalElement,
                  "robot " + std::to_string(element.robot) +
                      " already assigned in the partial set");
    }
  }
  PairSet extended = partial;
  extended.push_back(element);
  return set_value(problem, extended) - set_value(problem, partial);
}

}  // namespace mrta
