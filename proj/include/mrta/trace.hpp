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

#ifndef MRTA_TRACE_HPP_
#define MRTA_TRACE_HPP_

#include <ostream>
#include <string>

#include "json.hpp"
#include "mrta/model.hpp"
#include "mrta/sim.hpp"

namespace mrta {

inline constexpr const char* kTraceCsvHeader =
    "step,J_e,J_r,J_c,min_edge_margin,faults";

// One row per step. min_edge_margin is empty when the tree has no edges.
void write_trace_csv(std::ostream& out, const SimTrace& trace);

// Positions, assignment and task state every `period` steps (and the last).
nlohmann::json snapshots_json(const SimTrace& trace, const Scenario& scenario,
                              int period);

}  // namespace mrta

#endif  // MRTA_TRACE_HPP_
