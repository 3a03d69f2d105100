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

#include "mrta/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace mrta {

namespace {

constexpr std::array<const char*, 6> kProfileColors = {
    "#1f5fbf", "#c8332b", "#3a9a3a", "#8c5ab4", "#d08a1e", "#555555"};
constexpr std::array<const char*, 6> kCategoryColors = {
    "#2ca02c", "#d62fd6", "#17becf", "#ff7f0e", "#7f7f7f", "#bcbd22"};

}  // namespace

std::string render_svg(const Scenario& scenario, const StepRecord& record) {
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  auto extend = [&](const Vec2& p, double pad) {
    lo_x = std::min(lo_x, p.x() - pad);
    lo_y = std::min(lo_y, p.y() - pad);
    hi_x = std::max(hi_x, p.x() + pad);
    hi_y = std::max(hi_y, p.y() + pad);
  };
  for (const Vec2& p : record.positions) extend(p, 1.0);
  for (const auto& [id, p] : record.task_positions) extend(p, scenario.l + 4.0);
  if (!std::isfinite(lo_x)) lo_x = lo_y = -1.0, hi_x = hi_y = 1.0;

  const double width = 800.0;
  const double scale = width / std::max(hi_x - lo_x, 1e-9);
  const double height = std::max(1.0, (hi_y - lo_y) * scale);
  auto sx = [&](double x) { return (x - lo_x) * scale; };
  auto sy = [&](double y) { return height - (y - lo_y) * scale; };

  // Distinct capability vectors get distinct colors in first-seen order.
  std::map<std::vector<double>, std::size_t> profile;
  std::map<RobotId, std::size_t> color_of;
  for (const Robot& r : scenario.robots) {
    std::vector<double> key(r.capabilities.data(),
                            r.capabilities.data() + r.capabilities.size());
    auto [it, _] = profile.try_emplace(key, profile.size());
    color_of[r.id] = it->second % kProfileColors.size();
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"8\" y=\"18\" font-size=\"14\">step " << record.step
      << "  J_e=" << record.j_e << "  J_r=" << record.j_r << "</text>\n";

  std::map<TaskId, const Task*> tasks;
  for (const Task& t : scenario.tasks) tasks[t.id] = &t;
  for (const auto& [id, p] : record.task_positions) {
    const bool explored = record.explored.at(id);
    svg << "<circle cx=\"" << sx(p.x()) << "\" cy=\"" << sy(p.y())
        << "\" r=\"" << scenario.l * scale
        << "\" fill=\"#f2e8c9\" stroke=\"#a08040\"/>\n";
    const Task& task = *tasks.at(id);
    svg << "<text x=\"" << sx(p.x()) - 20 << "\" y=\""
        << sy(p.y()) - scenario.l * scale - 44 << "\" font-size=\"12\">"
        << "task " << id << " v="
        << (explored ? task.importance : scenario.v_unknown)
        << (explored ? "" : " (unexplored)") << "</text>\n";
    const CapabilityVector& rem = record.remaining.at(id);
    for (Eigen::Index t = 0; t < rem.size(); ++t) {
      const double full = explored ? task.requirement[t]
                                   : (t == scenario.sensing_category ? 1.0 : 0.0);
      const double top = std::max(full, 1e-9);
      const double bar_x = sx(p.x()) + scenario.l * scale + 4.0 + 9.0 * t;
      const double base = sy(p.y());
      const char* color = kCategoryColors[t % kCategoryColors.size()];
      svg << "<rect x=\"" << bar_x << "\" y=\"" << base - 40.0 << "\" width=\"7\""
          << " height=\"40\" fill=\"" << color << "\" opacity=\"0.25\"/>\n";
      const double filled = 40.0 * std::clamp(rem[t] / top, 0.0, 1.0);
      svg << "<rect x=\"" << bar_x << "\" y=\"" << base - filled
          << "\" width=\"7\" height=\"" << filled << "\" fill=\"" << color
          << "\"/>\n";
    }
  }

  std::map<RobotId, std::size_t> index;
  for (std::size_t i = 0; i < scenario.robots.size(); ++i) {
    index[scenario.robots[i].id] = i;
  }
  for (const auto& [a, b] : record.tree_edges) {
    const Vec2& pa = record.positions[index.at(a)];
    const Vec2& pb = record.positions[index.at(b)];
    svg << "<line x1=\"" << sx(pa.x()) << "\" y1=\"" << sy(pa.y())
        << "\" x2=\"" << sx(pb.x()) << "\" y2=\"" << sy(pb.y())
        << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t i = 0; i < record.positions.size(); ++i) {
    const Vec2& p = record.positions[i];
    svg << "<circle cx=\"" << sx(p.x()) << "\" cy=\"" << sy(p.y())
        << "\" r=\"4\" fill=\"" << kProfileColors[color_of[scenario.robots[i].id]]
        << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mrta
