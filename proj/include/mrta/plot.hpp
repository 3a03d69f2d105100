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

#ifndef MRTA_PLOT_HPP_
#define MRTA_PLOT_HPP_

#include <string>

#include "mrta/model.hpp"
#include "mrta/sim.hpp"

namespace mrta {

// Static SVG of one step: robots colored by capability profile, tree edges,
// task execution discs with original/remaining requirement bars.
std::string render_svg(const Scenario& scenario, const StepRecord& record);

}  // namespace mrta

#endif  // MRTA_PLOT_HPP_
