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

#ifndef MRTA_SCENARIO_IO_HPP_
#define MRTA_SCENARIO_IO_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"
#include "mrta/model.hpp"

namespace mrta {

// JSON layout:
//   {"params": {...scalar fields...},
//    "robots": [{"id", "position": [x, y], "capabilities": [...]}],
//    "tasks":  [{"id", "position", "importance", "requirement", "explored",
//                "path": [[t, [x, y]], ...], "appear_time"}]}
// A missing "k" defaults to 10 / l.
Scenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scenario);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

nlohmann::json to_json(const Assignment& assignment);

}  // namespace mrta

#endif  // MRTA_SCENARIO_IO_HPP_
