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

#ifndef MRTA_ALLOCATION_HPP_
#define MRTA_ALLOCATION_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mrta/model.hpp"

namespace mrta {

// Snapshot of everything the allocator needs: robots with their current
// positions and the visible tasks with their effective values.
struct AllocationProblem {
  std::vector<Robot> robots;
  std::vector<Vec2> positions;  // aligned with robots
  std::vector<TaskSnapshot> tasks;
  double alpha = 0.0;
};

// Every task of the scenario, at its initial position, with placeholder
// values for unexplored tasks.
AllocationProblem make_problem(const Scenario& scenario,
                               std::span<const Vec2> positions);

struct RewardBreakdown {
  double gain = 0.0;
  double loss = 0.0;
  double travel = 1.0;
  double total = 0.0;
};

struct UtilityReport {
  double j_e = 0.0;
  double j_c = 0.0;
  double j_r = 0.0;
  double f = 0.0;  // j_e + j_c
};

// 1 / (1 + |x - y|).
inline double travel_term(const Vec2& x, const Vec2& y) {
  return 1.0 / (1.0 + (x - y).norm());
}

// Throws kInvalidAssignment if the assignment names an unknown robot or task.
void check_assignment(const AllocationProblem& problem,
                      const Assignment& assignment);

UtilityReport objective(const AllocationProblem& problem,
                        const Assignment& assignment);
UtilityReport objective(const Scenario& scenario, const Assignment& assignment,
                        std::span<const Vec2> positions);

// Working copy of the requirement vectors, keyed by task id. Entries may go
// negative while the greedy runs.
using LiveRequirements = std::map<TaskId, CapabilityVector>;

// Reward of moving `robot` from `current_task` to `candidate_task` given the
// live requirements. The idle candidate always scores exactly alpha.
RewardBreakdown reward(const AllocationProblem& problem, RobotId robot,
                       TaskId candidate_task, TaskId current_task,
                       const LiveRequirements& live);

// Live requirements implied by an assignment: w_j minus the capabilities of
// the robots currently on j.
LiveRequirements live_requirements(const AllocationProblem& problem,
                                   const Assignment& assignment);

struct GreedyStats {
  std::int64_t evaluations = 0;  // reward evaluations for real tasks
  int rounds = 0;                // sweeps over the pool
  int moves = 0;                 // committed reassignments
  int passes = 0;                // sweeps of the pool from a fresh state
  std::int64_t first_pass_evaluations = 0;
};

struct GreedyResult {
  Assignment assignment;
  GreedyStats stats;
};

// Adaptive greedy allocation seeded with `previous`. Robot/task pairs are
// committed in order of maximal reward until only the stay option (reward
// alpha) remains. The sweep is repeated from its own result until no robot
// has an improving move, so a second call on unchanged data returns after a
// single round. Entries of `previous` that name tasks absent from the
// problem are treated as idle.
GreedyResult greedy_assign(const AllocationProblem& problem,
                           const Assignment& previous);
GreedyResult greedy_assign(const Scenario& scenario,
                           const Assignment& previous,
                           std::span<const Vec2> positions);

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

struct BruteForceResult {
  Assignment assignment;
  UtilityReport report;
  std::uint64_t evaluated = 0;
};

// Exhaustive maximizer of f over all (m + 1)^n maps. Throws
// kInstanceTooLarge when the enumeration would exceed `cap`.
BruteForceResult brute_force_assign(const AllocationProblem& problem,
                                    std::uint64_t cap = kDefaultOracleCap);

// Number of maps the oracle would enumerate, saturating at UINT64_MAX.
std::uint64_t enumeration_size(std::size_t robots, std::size_t tasks);

// Set-function view of the objective over robot-task pairs, restricted to
// the partition matroid "each robot at most once".
struct Pair {
  RobotId robot = 0;
  TaskId task = 1;
  bool operator==(const Pair&) const = default;
};
using PairSet = std::vector<Pair>;

// f(S). Throws kIllegalElement when a robot appears twice or a pair names an
// unknown robot or task.
double set_value(const AllocationProblem& problem, const PairSet& pairs);

// f(S + e) - f(S). Throws kIllegalElement when e's robot is already in S.
double marginal_gain(const AllocationProblem& problem, const PairSet& partial,
                     const Pair& element);

}  // namespace mrta

#endif  // MRTA_ALLOCATION_HPP_
