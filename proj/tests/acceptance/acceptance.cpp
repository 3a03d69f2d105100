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


// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "../qp_oracle.hpp"
#include "../support.hpp"
#include "mrta/allocation.hpp"
#include "mrta/bench.hpp"
#include "mrta/connectivity.hpp"
#include "mrta/qp.hpp"
#include "mrta/scenario_io.hpp"
#include "mrta/sim.hpp"

using namespace mrta;
using namespace mrta::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// 1: greedy reaches half the exhaustive optimum.
Outcome greedy_bound() {
  std::mt19937_64 rng(101);
  int trials = 0;
  int failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int n = 3; n <= 6; ++n) {
    for (int m : {2, 3}) {
      for (int o : {1, 2}) {
        for (double alpha : {0.0, 1.0}) {
          for (int rep = 0; rep < 20; ++rep) {
            InstanceSpec spec;
            spec.n = n;
            spec.m = m;
            spec.o = o;
            spec.alpha = alpha;
            spec.cap_hi = 30;
            const AllocationProblem p = random_problem(spec, rng);
            const GreedyResult g =
                greedy_assign(p, Assignment::all_idle(p.robots));
            const double fg = objective(p, g.assignment).f;
            const double fo = brute_force_assign(p).report.f;
            ++trials;
            if (fg < 0.5 * fo - 1e-9 * std::max(1.0, std::abs(fo))) ++failures;
            if (fo > 0.0) worst = std::min(worst, fg / fo);
          }
        }
      }
    }
  }
  std::ostringstream d;
  d << trials << " instances, " << failures << " below half, worst ratio "
    << worst;
  return {failures == 0 && trials >= 500, d.str()};
}

// 2: diminishing returns and monotonicity on nested pair sets.
Outcome submodularity() {
  std::mt19937_64 rng(202);
  int checked = 0;
  int failures = 0;
  while (checked < 12000) {
    InstanceSpec spec;
    spec.n = std::uniform_int_distribution<int>(2, 7)(rng);
    spec.m = std::uniform_int_distribution<int>(1, 4)(rng);
    spec.o = std::uniform_int_distribution<int>(1, 3)(rng);
    spec.alpha = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    const AllocationProblem p = random_problem(spec, rng);
    for (int k = 0; k < 20; ++k) {
      const NestedTriple t = random_triple(p, rng);
      const bool ok = marginal_gain(p, t.x, t.e) >= marginal_gain(p, t.y, t.e) - 1e-9 &&
                      set_value(p, t.y) >= set_value(p, t.x) - 1e-9;
      failures += !ok;
      ++checked;
    }
  }
  std::ostringstream d;
  d << checked << " triples, " << failures << " violations";
  return {failures == 0, d.str()};
}

Scenario random_closed_loop(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> cap(0, 5);
  Scenario s;
  s.o = 2;
  s.r_c = 2.5;
  s.l = 1.0;
  s.k = 10.0;
  s.alpha = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
  s.v_unknown = 30.0;
  s.horizon = 1000;
  s.realloc_period = 40;
  const int n = std::uniform_int_distribution<int>(5, 15)(rng);
  // A jittered chain, connected by construction.
  Vec2 p(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    s.robots.push_back({i, p, CapabilityVector::Zero(2)});
    s.robots.back().capabilities << cap(rng), cap(rng);
    const double a = 0.6 * unit(rng);
    p += 1.8 * Vec2(std::cos(a), std::sin(a));
  }
  s.robots[0].capabilities[0] = 2.0;
  const int m = std::uniform_int_distribution<int>(2, 4)(rng);
  for (int j = 0; j < m; ++j) {
    Task t;
    t.id = j + 1;
    t.position = {25.0 * unit(rng), 25.0 * unit(rng)};
    t.importance = std::uniform_int_distribution<int>(1, 10)(rng);
    t.requirement = CapabilityVector::Zero(2);
    t.requirement << 2 + cap(rng), 2 + cap(rng);
    t.explored = j != 0;
    t.appear_time = j == m - 1 ? 300 : 0;
    if (j == 1) {
      t.path = {{0.0, t.position}, {1000.0, {25.0 * unit(rng), 25.0 * unit(rng)}}};
    }
    s.tasks.push_back(t);
  }
  return s;
}

// 3: tree edges never exceed the communication range.
Outcome forward_invariance() {
  std::mt19937_64 rng(303);
  int faults = 0;
  int disconnected = 0;
  int invalid = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int run_index = 0; run_index < 50; ++run_index) {
    const Scenario s = random_closed_loop(rng);
    if (!validate_scenario(s).empty()) {
      ++invalid;
      continue;
    }
    const SimTrace trace = run(s);
    faults += static_cast<int>(trace.final_state.faults.size());
    for (const StepRecord& r : trace.records) {
      if (!r.graph_connected) ++disconnected;
      if (!r.tree_edges.empty()) worst = std::min(worst, r.min_distance_margin);
    }
  }
  std::ostringstream d;
  d << "50 runs, " << faults << " faults, " << disconnected
    << " disconnected steps, min margin " << worst;
  return {invalid == 0 && faults == 0 && disconnected == 0 && worst >= -1e-6,
          d.str()};
}

// 4: the golden scenario clears every requirement while the tasks are close
// and loses only the least important task once they spread.
Outcome golden_scenario() {
  const Scenario s =
      load_scenario(std::string(MRTA_SCENARIO_DIR) + "/team_40_robots.json");
  TaskId least = s.tasks.front().id;
  double least_v = s.tasks.front().importance;
  for (const Task& t : s.tasks) {
    if (t.importance < least_v) {
      least_v = t.importance;
      least = t.id;
    }
  }
  // Clustered: every task visible, before any task starts to move.
  // Spread: after every task has stopped.
  int clustered_lo = 0;
  int clustered_hi = s.horizon;
  int spread_lo = 0;
  for (const Task& t : s.tasks) {
    clustered_lo = std::max(clustered_lo, t.appear_time);
    for (std::size_t k = 1; k < t.path.size(); ++k) {
      if (t.path[k].position != t.path[k - 1].position) {
        clustered_hi = std::min(clustered_hi, static_cast<int>(t.path[k - 1].time_step));
        spread_lo = std::max(spread_lo, static_cast<int>(t.path[k].time_step));
      }
    }
  }
  clustered_lo += 700;
  spread_lo += 1000;

  const SimTrace trace = run(s);
  int clustered_nonzero = 0;
  int spread_zero = 0;
  int misattributed = 0;
  for (const StepRecord& r : trace.records) {
    if (r.step >= clustered_lo && r.step < clustered_hi && r.j_r != 0.0) {
      ++clustered_nonzero;
    }
    if (r.step >= spread_lo) {
      if (r.j_r <= 0.0) ++spread_zero;
      for (const auto& [id, rem] : r.remaining) {
        if (id != least && rem.sum() > 0.0) ++misattributed;
      }
    }
  }
  const double final_jr =
      trace.records.empty() ? 0.0 : trace.records.back().j_r;
  std::ostringstream d;
  d << "clustered steps " << clustered_lo << ".." << clustered_hi - 1 << ": "
    << clustered_nonzero << " with J_r > 0; spread steps " << spread_lo
    << "..: " << spread_zero << " with J_r = 0, " << misattributed
    << " with deficit off task " << least << "; final J_r " << final_jr
    << ", faults " << trace.final_state.faults.size();
  return {clustered_nonzero == 0 && spread_zero == 0 && misattributed == 0 &&
              trace.final_state.faults.empty() && spread_lo < s.horizon,
          d.str()};
}

// 5: near-linear greedy runtime, and quality close to the oracle.
Outcome runtime_scaling() {
  BenchConfig sweep;
  const auto rows = run_bench(sweep);
  const double slope = loglog_slope(rows);

  BenchConfig small;
  small.robot_counts = {4, 6};
  const auto small_rows = run_bench(small);
  bool quality = small_rows.size() == 2;
  std::ostringstream d;
  d << "slope " << slope;
  for (const BenchRow& row : small_rows) {
    double f_opt = 0.0;
    for (int trial = 0; trial < small.trials; ++trial) {
      auto rng = trial_rng(small.seed, row.n, trial);
      const AllocationProblem p = generate_instance(small, row.n, rng);
      f_opt += brute_force_assign(p).report.f;
    }
    f_opt /= small.trials;
    const double slack = 0.5 * f_opt;
    const bool ok = row.mean_jr_oracle &&
                    row.mean_jr_greedy <= *row.mean_jr_oracle + slack;
    quality = quality && ok;
    d << "; n=" << row.n << " J_r greedy " << row.mean_jr_greedy << " oracle "
      << row.mean_jr_oracle.value_or(NAN) << " slack " << slack;
  }
  return {slope < 1.3 && quality, d.str()};
}

// 6: the QP solver against an independent dual projected-gradient solve.
Outcome qp_conformance() {
  std::mt19937_64 rng(606);
  int compared = 0;
  int failures = 0;
  double worst_rel = 0.0;
  for (int trial = 0; trial < 220; ++trial) {
    const QpProblem p = random_qp(rng);
    const QpSolution s = solve_qp(p);
    const DualOracle o = dual_oracle(p, 60000);
    const double f = qp_objective(p, s.u);
    const double ref = qp_objective(p, o.u);
    const double rel = std::abs(f - ref) / std::max(1.0, std::abs(ref));
    worst_rel = std::max(worst_rel, rel);
    if (s.status != QpStatus::kOptimal || s.max_violation > 1e-6 ||
        o.violation > 1e-6 || rel > 1e-4) {
      ++failures;
    }
    ++compared;
  }
  int unconstrained_failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    QpProblem p = random_qp(rng);
    p.constraints.clear();
    p.max_speed = std::numeric_limits<double>::infinity();
    const QpSolution s = solve_qp(p);
    if ((s.u - p.reference).cwiseAbs().maxCoeff() > 1e-12) ++unconstrained_failures;
  }
  std::ostringstream d;
  d << compared << " QPs, " << failures << " off, worst relative gap "
    << worst_rel << "; " << unconstrained_failures << " of 50 unconstrained off";
  return {failures == 0 && unconstrained_failures == 0, d.str()};
}

// 7: evaluation counts on the bench sweep, and a cheap second call.
Outcome evaluation_count() {
  const BenchConfig config;
  int over = 0;
  int second_over = 0;
  int second_moved = 0;
  double worst = 0.0;
  for (int n : config.robot_counts) {
    const std::int64_t bound = std::int64_t{config.m} * n * n;
    for (int trial = 0; trial < config.trials; ++trial) {
      auto rng = trial_rng(config.seed, n, trial);
      const AllocationProblem p = generate_instance(config, n, rng);
      const GreedyResult g = greedy_assign(p, Assignment::all_idle(p.robots));
      worst = std::max(worst, double(g.stats.evaluations) / double(bound));
      if (g.stats.evaluations > bound) ++over;
      const GreedyResult again = greedy_assign(p, g.assignment);
      if (again.stats.evaluations > std::int64_t{n} * (config.m + 1)) ++second_over;
      if (again.stats.moves != 0 || !(again.assignment == g.assignment)) {
        ++second_moved;
      }
    }
  }
  std::ostringstream d;
  d << over << " first calls above m*n^2 (max fraction " << worst << "), "
    << second_over << " second calls above n*(m+1), " << second_moved
    << " second calls that moved";
  return {over == 0 && second_over == 0 && second_moved == 0, d.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"greedy half-optimality", greedy_bound},
      {"submodularity and monotonicity", submodularity},
      {"connectivity forward invariance", forward_invariance},
      {"golden scenario", golden_scenario},
      {"runtime scaling", runtime_scaling},
      {"qp conformance", qp_conformance},
      {"evaluation count", evaluation_count},
  };
  int failed = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome r = check();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", r.pass ? "PASS" : "FAIL",
                index, name, r.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !r.pass;
    ++index;
  }
  return failed;
}
