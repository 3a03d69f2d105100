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

#ifndef MRTA_CLI_HPP_
#define MRTA_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include "mrta/bench.hpp"

namespace mrta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMissingFile = 2;
inline constexpr int kExitOracleCap = 3;

struct RunFlags {
  std::filesystem::path out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<int> steps;
  bool plot = false;
};

int cmd_run(const std::filesystem::path& scenario_path, const RunFlags& flags,
            std::ostream& out, std::ostream& err);

int cmd_bench(const BenchConfig& config,
              const std::filesystem::path& output_path, std::ostream& out,
              std::ostream& err);

int cmd_oracle_check(const std::filesystem::path& instance_path,
                     std::uint64_t cap, std::ostream& out, std::ostream& err);

int cmd_validate(const std::filesystem::path& scenario_path, std::ostream& out,
                 std::ostream& err);

}  // namespace mrta::cli

#endif  // MRTA_CLI_HPP_
