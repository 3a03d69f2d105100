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

#include "mrta/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>

namespace mrta {

std::string check_config(const BenchConfig& c) {
  if (c.robot_counts.empty()) return "no robot counts";
  for (int n : c.robot_counts) {
    if (n < 0) return "robot count < 0";
  }
  if (c.trials < 1) return "trials < 1";
  if (c.m < 0) return "m < 0";
  if (c.o < 1) return "o < 1";
  if (c.requirement_lo > c.requirement_hi) return "requirement lo > hi";
  if (c.importance_lo > c.importance_hi) return "importance lo > hi";
  if (c.capability_lo > c.capability_hi) return "capability lo > hi";
  if (c.requirement_lo < 0 || c.importance_lo < 0 || c.capability_lo < 0) {
    return "negative range";
  }
  return {};
}

std::mt19937_64 trial_rng(std::uint64_t seed, int n, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n),
                    static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

AllocationProblem generate_instance(const BenchConfig& config, int n,
                                    std::mt19937_64& rng) {
  AllocationProblem p;
  p.alpha = config.alpha;
  std::uniform_int_distribution<int> req(config.requirement_lo,
                                         config.requirement_hi);
  std::uniform_int_distribution<int> imp(config.importance_lo,
                                         config.importance_hi);
  std::uniform_int_distribution<int> cap(config.capability_lo,
                                         config.capability_hi);
  const Eigen::Index o = config.o;
  for (int i = 0; i < n; ++i) {
    Robot r;
    r.id = i + 1;
    r.capabilities.resize(o);
    if (o == 4) {
      if (i < n / 2) {
        r.capabilities << 3, 1, 2, 5;
      } else {
        r.capabilities << 2, 5, 4, 0;
      }
    } else {
      for (Eigen::Index t = 0; t < o; ++t) r.capabilities[t] = cap(rng);
    }
    p.robots.push_back(r);
    p.positions.push_back(Vec2::Zero());
  }
  for (int j = 0; j < config.m; ++j) {
    TaskSnapshot t;
    t.id = j + 1;
    t.importance = imp(rng);
    t.requirement.resize(o);
    for (Eigen::Index k = 0; k < o; ++k) t.requirement[k] = req(rng);
    p.tasks.push_back(std::move(t));
  }
  return p;
}

namespace {

double mean_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (int n : config.robot_counts) {
    BenchRow row;
    row.n = n;
    row.trials = config.trials;
    const bool oracle =
        config.run_oracle &&
        enumeration_size(static_cast<std::size_t>(n),
                         static_cast<std::size_t>(config.m)) <= config.oracle_cap;
    std::vector<double> jr_greedy, t_greedy, ratio, t_oracle, jr_oracle;
    for (int trial = 0; trial < config.trials; ++trial) {
      auto rng = trial_rng(config.seed, n, trial);
      const AllocationProblem problem = generate_instance(config, n, rng);
      const Assignment idle = Assignment::all_idle(problem.robots);

      const auto g0 = Clock::now();
      const GreedyResult g = greedy_assign(problem, idle);
      const auto g1 = Clock::now();
      const UtilityReport rg = objective(problem, g.assignment);
      jr_greedy.push_back(rg.j_r);
      t_greedy.push_back(std::chrono::duration<double>(g1 - g0).count());
      row.max_evaluations = std::max(row.max_evaluations, g.stats.evaluations);
      row.max_rounds = std::max<std::int64_t>(row.max_rounds, g.stats.rounds);

      if (oracle) {
        const auto o0 = Clock::now();
        const BruteForceResult b = brute_force_assign(problem, config.oracle_cap);
        const auto o1 = Clock::now();
        t_oracle.push_back(std::chrono::duration<double>(o1 - o0).count());
        jr_oracle.push_back(b.report.j_r);
        ratio.push_back(b.report.f > 0.0 ? rg.f / b.report.f : 1.0);
      }
    }
    row.mean_jr_greedy = mean_of(jr_greedy);
    row.mean_time_greedy_s = mean_of(t_greedy);
    if (oracle) {
      row.mean_ratio_vs_oracle = mean_of(ratio);
      row.mean_time_oracle_s = mean_of(t_oracle);
      row.mean_jr_oracle = mean_of(jr_oracle);
      row.min_ratio_vs_oracle = *std::min_element(ratio.begin(), ratio.end());
    }
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(),
            [](const BenchRow& a, const BenchRow& b) { return a.n < b.n; });
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n' << std::setprecision(12);
  auto opt = [&](const std::optional<double>& v) {
    if (v) out << *v;
  };
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.trials << ',' << r.mean_jr_greedy << ','
        << r.mean_time_greedy_s << ',';
    opt(r.mean_ratio_vs_oracle);
    out << ',';
    opt(r.mean_time_oracle_s);
    out << ',';
    opt(r.mean_jr_oracle);
    out << ',';
    opt(r.min_ratio_vs_oracle);
    out << ',' << r.max_evaluations << '\n';
  }
}

double loglog_slope(const std::vector<BenchRow>& rows) {
  std::vector<double> xs, ys;
  for (const BenchRow& r : rows) {
    if (r.n > 0 && r.mean_time_greedy_s > 0.0) {
      xs.push_back(std::log(static_cast<double>(r.n)));
      ys.push_back(std::log(r.mean_time_greedy_s));
    }
  }
  if (xs.size() < 2) return 0.0;
  const double k = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / k;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

}  // namespace mrta
