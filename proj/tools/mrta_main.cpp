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

// Command-line front end: run, bench, oracle-check, validate.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mrta/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Connectivity-aware heterogeneous multi-robot task allocation"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out_dir = "out";
  bool plot = false;
  int steps = -1;

  auto* run = app.add_subcommand("run", "Simulate a scenario file");
  std::string scenario_path;
  run->add_option("scenario", scenario_path, "Scenario JSON")->required();
  auto* run_seed = run->add_option("--seed", seed, "RNG seed override");
  run->add_option("--out", out_dir,
                  "Output directory (trace.csv, snapshots.json, summary.json)");
  run->add_flag("--plot", plot, "Write SVG snapshots to <out>/plots");
  auto* run_steps = run->add_option("--steps", steps, "Horizon override");

  auto* bench = app.add_subcommand(
      "bench",
      "Greedy scaling sweep. CSV columns: n, trials, mean_Jr_greedy, "
      "mean_time_greedy_s, mean_ratio_vs_oracle, mean_time_oracle_s, "
      "mean_Jr_oracle, min_ratio_vs_oracle, max_evaluations (oracle columns "
      "empty when (m+1)^n exceeds the cap)");
  mrta::BenchConfig config;
  bench->add_option("--robots", config.robot_counts, "Robot counts to sweep")
      ->delimiter(',');
  bench->add_option("--trials", config.trials, "Trials per point");
  bench->add_option("--tasks,-m", config.m, "Task count");
  bench->add_option("--categories,-o", config.o, "Capability categories");
  bench->add_option("--req-lo", config.requirement_lo);
  bench->add_option("--req-hi", config.requirement_hi);
  bench->add_option("--imp-lo", config.importance_lo);
  bench->add_option("--imp-hi", config.importance_hi);
  bench->add_option("--cap-lo", config.capability_lo);
  bench->add_option("--cap-hi", config.capability_hi);
  bench->add_option("--oracle-cap", config.oracle_cap);
  bench->add_option("--seed", config.seed);
  bool no_oracle = false;
  bench->add_flag("--no-oracle", no_oracle, "Skip the exhaustive oracle");
  std::string bench_out = "-";
  bench->add_option("--out", bench_out, "CSV path, '-' for stdout");

  auto* oracle = app.add_subcommand(
      "oracle-check", "Compare greedy against the exhaustive oracle");
  std::string instance_path;
  std::uint64_t cap = 10'000'000;
  oracle->add_option("instance", instance_path, "Scenario JSON")->required();
  oracle->add_option("--cap", cap, "Oracle enumeration cap");
  oracle->add_option("--seed", seed);

  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  std::string validate_path;
  validate->add_option("scenario", validate_path, "Scenario JSON")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    mrta::cli::RunFlags flags;
    flags.out_dir = out_dir;
    flags.plot = plot;
    if (run_seed->count() > 0) flags.seed = seed;
    if (run_steps->count() > 0) flags.steps = steps;
    return mrta::cli::cmd_run(scenario_path, flags, std::cout, std::cerr);
  }
  if (bench->parsed()) {
    config.run_oracle = !no_oracle;
    return mrta::cli::cmd_bench(config, bench_out, std::cout, std::cerr);
  }
  if (oracle->parsed()) {
    return mrta::cli::cmd_oracle_check(instance_path, cap, std::cout,
                                       std::cerr);
  }
  return mrta::cli::cmd_validate(validate_path, std::cout, std::cerr);
}
