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

#ifndef MRTA_BENCH_HPP_
#define MRTA_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "mrta/allocation.hpp"

namespace mrta {

struct BenchConfig {
  std::vector<int> robot_counts = {20, 40, 60, 80};
  int trials = 200;
  int m = 3;
  // Four categories use the two-type fleet (3,1,2,5) / (2,5,4,0) split half
  // and half; any other count draws integer capabilities in
  // [capability_lo, capability_hi].
  int o = 4;
  int requirement_lo = 10;
  int requirement_hi = 50;
  int importance_lo = 1;
  int importance_hi = 10;
  int capability_lo = 0;
  int capability_hi = 8;
  double alpha = 0.0;
  std::uint64_t seed = 1;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  bool run_oracle = true;
};

// Empty string when the config is usable, otherwise the first problem.
std::string check_config(const BenchConfig& config);

struct BenchRow {
  int n = 0;
  int trials = 0;
  double mean_jr_greedy = 0.0;
  double mean_time_greedy_s = 0.0;
  std::optional<double> mean_ratio_vs_oracle;
  std::optional<double> mean_time_oracle_s;
  std::optional<double> mean_jr_oracle;
  std::optional<double> min_ratio_vs_oracle;
  std::int64_t max_evaluations = 0;
  std::int64_t max_rounds = 0;
};

// Trial-specific generator, derived from (seed, n, trial) only.
std::mt19937_64 trial_rng(std::uint64_t seed, int n, int trial);

// Random instance: robots at the origin (travel is irrelevant at alpha = 0),
// requirements and importance uniform integers in the configured ranges.
AllocationProblem generate_instance(const BenchConfig& config, int n,
                                    std::mt19937_64& rng);

std::vector<BenchRow> run_bench(const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader =
    "n,trials,mean_Jr_greedy,mean_time_greedy_s,mean_ratio_vs_oracle,"
    "mean_time_oracle_s,mean_Jr_oracle,min_ratio_vs_oracle,max_evaluations";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

// Least-squares slope of log(time) against log(n).
double loglog_slope(const std::vector<BenchRow>& rows);

}  // namespace mrta

#endif  // MRTA_BENCH_HPP_
