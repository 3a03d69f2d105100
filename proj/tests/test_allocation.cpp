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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mrta/allocation.hpp"
#include "mrta/error.hpp"
#include "mrta/scenario_io.hpp"
#include "support.hpp"

using namespace mrta;
using mrta::testing::InstanceSpec;

namespace {

CapabilityVector cv(std::initializer_list<double> xs) {
  CapabilityVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) v[k++] = x;
  return v;
}

TaskSnapshot task(TaskId id, Vec2 pos, double v, CapabilityVector w) {
  return {id, pos, v, std::move(w)};
}

// Two blue (3 units) and `red` red (2 units) robots; tasks need 5 and 9.
AllocationProblem combinatorial(int red, double alpha = 0.0) {
  AllocationProblem p;
  p.alpha = alpha;
  for (int i = 0; i < 2 + red; ++i) {
    p.robots.push_back({i, {}, cv({i < 2 ? 3.0 : 2.0})});
    p.positions.emplace_back(0.0, 0.0);
  }
  p.tasks = {task(1, {0, 0}, 1.0, cv({5})), task(2, {0, 0}, 1.0, cv({9}))};
  return p;
}

double total_demand(const AllocationProblem& p) {
  double s = 0.0;
  for (const TaskSnapshot& t : p.tasks) s += t.importance * t.requirement.sum();
  return s;
}

// The greedy loop transcribed literally: every unfixed robot against every
// task including idle, global argmax, commit, repeat.
GreedyResult reference_pass(const AllocationProblem& p,
                            const Assignment& previous) {
  Assignment cur = previous;
  LiveRequirements live = live_requirements(p, previous);
  std::vector<std::size_t> pool(p.robots.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  std::sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
    return p.robots[a].id < p.robots[b].id;
  });
  std::vector<TaskId> candidates = {kIdleTask};
  for (const TaskSnapshot& t : p.tasks) candidates.push_back(t.id);
  const double tolerance = 1e-9 * std::max(1.0, std::abs(p.alpha));
  GreedyResult out;
  while (!pool.empty()) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_k = 0;
    TaskId best_task = kIdleTask;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const RobotId id = p.robots[pool[k]].id;
      for (TaskId j : candidates) {
        const double v = reward(p, id, j, cur.task_of(id), live).total;
        if (j != kIdleTask) ++out.stats.evaluations;
        if (v > best) {
          best = v;
          best_k = k;
          best_task = j;
        }
      }
    }
    ++out.stats.rounds;
    if (best <= p.alpha + tolerance) break;
    const std::size_t i = pool[best_k];
    const RobotId id = p.robots[i].id;
    const TaskId from = cur.task_of(id);
    live[best_task] -= p.robots[i].capabilities;
    if (from != kIdleTask) live[from] += p.robots[i].capabilities;
    cur.assign(id, best_task);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_k));
    ++out.stats.moves;
  }
  out.assignment = cur;
  return out;
}

// Passes repeated from their own output until one commits nothing.
GreedyResult reference_greedy(const AllocationProblem& p,
                              const Assignment& previous) {
  GreedyResult out{previous, {}};
  while (true) {
    const GreedyResult pass = reference_pass(p, out.assignment);
    out.assignment = pass.assignment;
    out.stats.moves += pass.stats.moves;
    out.stats.evaluations += pass.stats.evaluations;
    if (pass.stats.moves == 0) return out;
  }
}

Assignment random_assignment(const AllocationProblem& p, std::mt19937_64& rng) {
  Assignment a = Assignment::all_idle(p.robots);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(p.tasks.size()));
  for (const Robot& r : p.robots) {
    const int j = pick(rng);
    a.assign(r.id, j == 0 ? kIdleTask : p.tasks[j - 1].id);
  }
  return a;
}

}  // namespace

TEST_CASE("objective of the all-idle assignment") {
  AllocationProblem p = combinatorial(4, 0.5);
  const UtilityReport r = objective(p, Assignment::all_idle(p.robots));
  CHECK(r.j_e == 0.0);
  CHECK(r.j_c == 0.0);
  CHECK(r.j_r == 14.0);
  CHECK(r.f == 0.0);
}

TEST_CASE("objective of one robot on one task") {
  AllocationProblem p;
  p.alpha = 0.7;
  p.robots = {{0, {}, cv({3})}};
  p.positions = {{2.0, 2.0}};
  p.tasks = {task(1, {2.0, 2.0}, 1.0, cv({5}))};
  Assignment a = Assignment::all_idle(p.robots);
  a.assign(0, 1);
  const UtilityReport r = objective(p, a);
  CHECK(r.j_e == 3.0);
  CHECK(r.j_c == doctest::Approx(0.7));
  CHECK(r.j_r == 2.0);
  CHECK(r.f == doctest::Approx(3.7));
}

TEST_CASE("saturating combinatorial allocation leaves nothing") {
  AllocationProblem p = combinatorial(4);
  Assignment a = Assignment::all_idle(p.robots);
  a.assign(0, 1);
  a.assign(2, 1);
  a.assign(1, 2);
  for (RobotId r : {3, 4, 5}) a.assign(r, 2);
  const UtilityReport r = objective(p, a);
  CHECK(r.j_r == 0.0);
  CHECK(r.j_e == 14.0);
}

TEST_CASE("objective rejects unknown ids") {
  AllocationProblem p = combinatorial(1);
  Assignment a = Assignment::all_idle(p.robots);
  a.assign(0, 7);
  try {
    objective(p, a);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidAssignment);
  }
  Assignment b = Assignment::all_idle(p.robots);
  b.assign(42, 1);
  CHECK_THROWS_AS(objective(p, b), Error);
}

TEST_CASE("reward arithmetic") {
  AllocationProblem p;
  p.alpha = 0.8;
  p.robots = {{0, {}, cv({3})}};
  p.positions = {{0.0, 0.0}};
  p.tasks = {task(1, {3.0, 0.0}, 2.0, cv({5})), task(2, {0, 0}, 2.0, cv({2}))};

  SUBCASE("available robot") {
    const RewardBreakdown r = reward(p, 0, 1, kIdleTask, {{1, cv({5})}, {2, cv({2})}});
    CHECK(r.gain == 6.0);
    CHECK(r.loss == 0.0);
    CHECK(r.travel == 0.25);
    CHECK(r.total == doctest::Approx(6.0 + 0.25 * 0.8));
  }
  SUBCASE("departure from an over-allocated task") {
    const RewardBreakdown r = reward(p, 0, 1, 2, {{1, cv({5})}, {2, cv({-1})}});
    CHECK(r.loss == 4.0);
    CHECK(r.total == doctest::Approx(6.0 - 4.0 + 0.2));
  }
  SUBCASE("idle candidate scores alpha") {
    CHECK(reward(p, 0, kIdleTask, kIdleTask, {{1, cv({5})}, {2, cv({2})}}).total == 0.8);
    CHECK(reward(p, 0, kIdleTask, 2, {{1, cv({5})}, {2, cv({-1})}}).total == 0.8);
  }
  SUBCASE("unknown task") {
    try {
      reward(p, 0, 9, kIdleTask, {{1, cv({5})}, {2, cv({2})}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUnknownTask);
    }
  }
}

TEST_CASE("greedy fills the combinatorial instance") {
  const AllocationProblem p = combinatorial(4);
  const GreedyResult g = greedy_assign(p, Assignment::all_idle(p.robots));
  CHECK(objective(p, g.assignment).j_r == 0.0);
  CHECK(brute_force_assign(p).report.j_r == 0.0);
}

TEST_CASE("greedy keeps a satisfied previous assignment") {
  const AllocationProblem p = combinatorial(4, 1.0);
  const GreedyResult first = greedy_assign(p, Assignment::all_idle(p.robots));
  const GreedyResult second = greedy_assign(p, first.assignment);
  CHECK(second.assignment == first.assignment);
  CHECK(second.stats.moves == 0);
  CHECK(second.stats.rounds == 1);
}

TEST_CASE("greedy prefers the more important task") {
  AllocationProblem p;
  p.alpha = 1.0;
  p.robots = {{0, {}, cv({2})}};
  p.positions = {{0.0, 0.0}};
  p.tasks = {task(1, {1.0, 0.0}, 5.0, cv({2})), task(2, {0.0, 1.0}, 1.0, cv({2}))};
  CHECK(greedy_assign(p, Assignment::all_idle(p.robots)).assignment.task_of(0) == 1);
}

TEST_CASE("greedy ties go to the lower robot id then the lower task id") {
  AllocationProblem p;
  p.robots = {{5, {}, cv({1})}, {3, {}, cv({1})}};
  p.positions = {{0, 0}, {0, 0}};
  p.tasks = {task(1, {0, 0}, 1.0, cv({1})), task(2, {0, 0}, 1.0, cv({1}))};
  const Assignment a = greedy_assign(p, Assignment::all_idle(p.robots)).assignment;
  CHECK(a.task_of(3) == 1);
  CHECK(a.task_of(5) == 2);
}

TEST_CASE("oracle examples") {
  SUBCASE("one robot one task") {
    AllocationProblem p;
    p.alpha = 1.0;
    p.robots = {{0, {}, cv({1})}};
    p.positions = {{0.0, 0.0}};
    p.tasks = {task(1, {4.0, 0.0}, 1.0, cv({2}))};
    // Assigned: 1 + 0.2; idle: 0.
    const BruteForceResult b = brute_force_assign(p);
    CHECK(b.assignment.task_of(0) == 1);
    CHECK(b.report.f == doctest::Approx(1.2));
    CHECK(b.evaluated == 2);
  }
  SUBCASE("no tasks") {
    AllocationProblem p = combinatorial(2, 3.0);
    p.tasks.clear();
    const BruteForceResult b = brute_force_assign(p);
    CHECK(b.report.f == 0.0);
    CHECK(b.assignment == Assignment::all_idle(p.robots));
  }
  SUBCASE("connectivity instance ignoring connectivity") {
    const BruteForceResult b = brute_force_assign(combinatorial(6));
    CHECK(b.report.j_r == 0.0);
  }
  SUBCASE("over the cap") {
    try {
      brute_force_assign(combinatorial(6), 100);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInstanceTooLarge);
      CHECK(std::string(e.what()).find("100") != std::string::npos);
    }
  }
  SUBCASE("ties resolve to the lexicographically first assignment") {
    AllocationProblem p;
    p.robots = {{0, {}, cv({1})}, {1, {}, cv({1})}};
    p.positions = {{0, 0}, {0, 0}};
    p.tasks = {task(1, {0, 0}, 1.0, cv({1}))};
    const BruteForceResult b = brute_force_assign(p);
    CHECK(b.assignment.task_of(0) == kIdleTask);
    CHECK(b.assignment.task_of(1) == 1);
  }
}

TEST_CASE("oracle agrees with an independent exhaustive search") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    InstanceSpec spec;
    spec.n = 1 + trial % 5;
    spec.m = 1 + trial % 3;
    spec.o = 1 + trial % 2;
    spec.alpha = (trial % 4) * 0.5;
    const AllocationProblem p = mrta::testing::random_problem(spec, rng);
    const BruteForceResult b = brute_force_assign(p);
    const double expected = mrta::testing::naive_optimum(p);
    CHECK(b.report.f == doctest::Approx(expected).epsilon(1e-12));
    CHECK(mrta::testing::naive_f(p, mrta::testing::slots(p, b.assignment)) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("marginal gain examples") {
  AllocationProblem p = combinatorial(4, 0.5);
  p.positions[2] = {3.0, 0.0};
  const Pair e{2, 1};
  CHECK(marginal_gain(p, {}, e) == doctest::Approx(set_value(p, {e})));
  CHECK(set_value(p, {}) == 0.0);
  // Task 1 already saturated by robots 0 and 1.
  const double h = 1.0 / (1.0 + 3.0);
  CHECK(marginal_gain(p, {{0, 1}, {1, 1}}, e) == doctest::Approx(0.5 * h));
  try {
    marginal_gain(p, {{2, 2}}, e);
    FAIL("expected an error");
  } catch (const Error& x) {
    CHECK(x.code() == ErrorCode::kIllegalElement);
  }
  CHECK_THROWS_AS(set_value(p, {{0, 1}, {0, 2}}), Error);
  CHECK_THROWS_AS(set_value(p, {{0, 0}}), Error);
}

TEST_CASE("submodularity and monotonicity on random nested sets") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int inst = 0; inst < 200; ++inst) {
    InstanceSpec spec;
    spec.n = 2 + inst % 7;
    spec.m = 1 + inst % 3;
    spec.o = 1 + inst % 4;
    spec.alpha = (inst % 3) * 0.75;
    const AllocationProblem p = mrta::testing::random_problem(spec, rng);
    for (int k = 0; k < 60; ++k) {
      const auto t = mrta::testing::random_triple(p, rng);
      const double dx = marginal_gain(p, t.x, t.e);
      const double dy = marginal_gain(p, t.y, t.e);
      CHECK(dx >= dy - 1e-9);
      CHECK(set_value(p, t.y) >= set_value(p, t.x) - 1e-9);
      ++checked;
    }
  }
  CHECK(checked >= 10000);
}

TEST_CASE("greedy is at least half the optimum") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    InstanceSpec spec;
    spec.n = 3 + trial % 4;
    spec.m = 2 + trial % 2;
    spec.o = 1 + (trial / 2) % 2;
    spec.alpha = (trial / 4) % 2;
    const AllocationProblem p = mrta::testing::random_problem(spec, rng);
    const double g =
        objective(p, greedy_assign(p, Assignment::all_idle(p.robots)).assignment).f;
    const double opt = mrta::testing::naive_optimum(p);
    CHECK(g >= 0.5 * opt * (1.0 - 1e-9));
  }
}

TEST_CASE("greedy never lowers the objective") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    InstanceSpec spec;
    spec.n = 2 + trial % 12;
    spec.m = 1 + trial % 4;
    spec.o = 1 + trial % 3;
    spec.alpha = (trial % 3) * 0.5;
    const AllocationProblem p = mrta::testing::random_problem(spec, rng);
    const Assignment idle = Assignment::all_idle(p.robots);
    const Assignment prev = random_assignment(p, rng);
    CHECK(objective(p, greedy_assign(p, idle).assignment).f >= 0.0);
    CHECK(objective(p, greedy_assign(p, prev).assignment).f >=
          objective(p, prev).f - 1e-9);
  }
}

TEST_CASE("effective plus remaining utility is the total demand") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    InstanceSpec spec;
    spec.n = 1 + trial % 10;
    spec.m = 1 + trial % 4;
    spec.o = 1 + trial % 4;
    spec.alpha = 0.3;
    const AllocationProblem p = mrta::testing::random_problem(spec, rng);
    const UtilityReport r = objective(p, random_assignment(p, rng));
    const double total = total_demand(p);
    CHECK(r.j_e + r.j_r == doctest::Approx(total).epsilon(1e-14));
    CHECK(r.j_e >= 0.0);
    CHECK(r.j_r >= 0.0);
    CHECK(r.j_c >= 0.0);
  }
}

TEST_CASE("greedy matches the transcribed reference loop") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 400; ++trial) {
    InstanceSpec spec;
    spec.n = 1 + trial % 25;
    spec.m = 1 + trial % 4;
    spec.o = 1 + trial % 4;
    spec.alpha = (trial % 3) * 0.5;
    spec.cap_hi = 6 + trial % 10;
    AllocationProblem p = mrta::testing::random_problem(spec, rng);
    if (trial % 2 == 0) {
      // Few distinct robot types, many coincident positions.
      for (std::size_t i = 0; i < p.robots.size(); ++i) {
        p.robots[i].capabilities = p.robots[i % 3].capabilities;
        if (i % 4 != 0) p.positions[i] = p.positions[i % 4];
      }
    }
    if (trial % 5 == 0) {
      std::shuffle(p.robots.begin(), p.robots.end(), rng);
    }
    const Assignment prev = trial % 3 == 0 ? Assignment::all_idle(p.robots)
                                           : random_assignment(p, rng);
    const GreedyResult fast = greedy_assign(p, prev);
    const GreedyResult ref = reference_greedy(p, prev);
    CHECK(fast.assignment == ref.assignment);
    CHECK(fast.stats.moves == ref.stats.moves);
    CHECK(fast.stats.evaluations <= ref.stats.evaluations);
  }
}

TEST_CASE("evaluation counts respect the complexity bounds") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1200; ++trial) {
    InstanceSpec spec;
    spec.n = 1 + trial % 60;
    spec.m = 1 + trial % 5;
    spec.o = 1 + trial % 4;
    spec.alpha = (trial % 2) * 1.0;
    spec.cap_hi = 30;
    const AllocationProblem p = mrta::testing::random_problem(spec, rng);
    const std::int64_t n = spec.n;
    const std::int64_t m = spec.m;
    const GreedyResult first = greedy_assign(p, Assignment::all_idle(p.robots));
    CHECK(first.stats.first_pass_evaluations <= m * n * (n + 1) / 2);
    if (n >= 11) CHECK(first.stats.evaluations <= m * n * n);
    const GreedyResult second = greedy_assign(p, first.assignment);
    CHECK(second.stats.evaluations <= n * (m + 1));
    CHECK(second.stats.moves == 0);
    CHECK(second.assignment == first.assignment);
  }
}

TEST_CASE("scenario-level greedy uses the unexplored placeholder") {
  Scenario s;
  s.o = 2;
  s.sensing_category = 1;
  s.r_c = 10.0;
  s.l = 1.0;
  s.alpha = 1.0;
  s.v_unknown = 50.0;
  s.robots = {{0, {0, 0}, cv({4, 0})}, {1, {1, 0}, cv({0, 1})}};
  Task t;
  t.id = 1;
  t.position = {3.0, 0.0};
  t.importance = 1.0;
  t.requirement = cv({4, 4});
  t.explored = false;
  s.tasks = {t};
  const auto pos = initial_positions(s);
  const Assignment a = greedy_assign(s, Assignment::all_idle(s.robots), pos).assignment;
  CHECK(a.task_of(1) == 1);
  CHECK(a.task_of(0) == kIdleTask);
  s.tasks[0].explored = true;
  const Assignment b = greedy_assign(s, a, pos).assignment;
  CHECK(b.task_of(0) == 1);
}
