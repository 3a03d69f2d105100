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

#include "mrta/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include "mrta/error.hpp"

namespace mrta {

using nlohmann::json;

namespace {

Vec2 vec2_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::kParse, "expected [x, y], got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json vec2_to(const Vec2& v) { return json::array({v.x(), v.y()}); }

CapabilityVector caps_from(const json& j) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kParse, "expected number array, got " + j.dump());
  }
  CapabilityVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t t = 0; t < j.size(); ++t) v[t] = j[t].get<double>();
  return v;
}

json caps_to(const CapabilityVector& v) {
  json out = json::array();
  for (Eigen::Index t = 0; t < v.size(); ++t) out.push_back(v[t]);
  return out;
}

template <typename T>
void read_opt(const json& obj, const char* key, T& field) {
  if (auto it = obj.find(key); it != obj.end()) field = it->get<T>();
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
  try {
    Scenario s;
    const json& p = doc.at("params");
    s.o = p.at("o").get<int>();
    s.r_c = p.at("r_c").get<double>();
    s.l = p.at("l").get<double>();
    read_opt(p, "sensing_category", s.sensing_category);
    read_opt(p, "alpha", s.alpha);
    read_opt(p, "v_unknown", s.v_unknown);
    read_opt(p, "gamma", s.gamma);
    read_opt(p, "k_p", s.k_p);
    read_opt(p, "dt", s.dt);
    read_opt(p, "u_max", s.u_max);
    s.k = s.l > 0.0 ? 10.0 / s.l : 10.0;
    read_opt(p, "k", s.k);
    read_opt(p, "b", s.b);
    read_opt(p, "horizon", s.horizon);
    read_opt(p, "seed", s.seed);
    read_opt(p, "realloc_period", s.realloc_period);
    read_opt(p, "snapshot_period", s.snapshot_period);

    for (const json& r : doc.at("robots")) {
      Robot robot;
      robot.id = r.at("id").get<RobotId>();
      robot.position = vec2_from(r.at("position"));
      robot.capabilities = caps_from(r.at("capabilities"));
      s.robots.push_back(std::move(robot));
    }
    for (const json& t : doc.value("tasks", json::array())) {
      Task task;
      task.id = t.at("id").get<TaskId>();
      task.position = vec2_from(t.at("position"));
      task.importance = t.value("importance", 0.0);
      task.requirement = caps_from(t.at("requirement"));
      task.explored = t.value("explored", true);
      task.appear_time = t.value("appear_time", 0);
      for (const json& w : t.value("path", json::array())) {
        if (!w.is_array() || w.size() != 2) {
          throw Error(ErrorCode::kParse,
                      "path entries are [time_step, [x, y]], got " + w.dump());
        }
        task.path.push_back({w[0].get<double>(), vec2_from(w[1])});
      }
      s.tasks.push_back(std::move(task));
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

json scenario_to_json(const Scenario& s) {
  json doc;
  doc["params"] = {
      {"o", s.o},
      {"sensing_category", s.sensing_category},
      {"r_c", s.r_c},
      {"l", s.l},
      {"alpha", s.alpha},
      {"v_unknown", s.v_unknown},
      {"gamma", s.gamma},
      {"k_p", s.k_p},
      {"dt", s.dt},
      {"u_max", s.u_max},
      {"k", s.k},
      {"b", s.b},
      {"horizon", s.horizon},
      {"seed", s.seed},
      {"realloc_period", s.realloc_period},
      {"snapshot_period", s.snapshot_period},
  };
  json robots = json::array();
  for (const Robot& r : s.robots) {
    robots.push_back({{"id", r.id},
                      {"position", vec2_to(r.position)},
                      {"capabilities", caps_to(r.capabilities)}});
  }
  json tasks = json::array();
  for (const Task& t : s.tasks) {
    json path = json::array();
    for (const Waypoint& w : t.path) {
      path.push_back(json::array({w.time_step, vec2_to(w.position)}));
    }
    tasks.push_back({{"id", t.id},
                     {"position", vec2_to(t.position)},
                     {"importance", t.importance},
                     {"requirement", caps_to(t.requirement)},
                     {"explored", t.explored},
                     {"path", std::move(path)},
                     {"appear_time", t.appear_time}});
  }
  doc["robots"] = std::move(robots);
  doc["tasks"] = std::move(tasks);
  return doc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return scenario_from_json(doc);
}

void save_scenario(const Scenario& scenario,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << scenario_to_json(scenario).dump(2) << '\n';
}

json to_json(const Assignment& assignment) {
  json out = json::object();
  for (const auto& [robot, task] : assignment.entries()) {
    out[std::to_string(robot)] = task;
  }
  return out;
}

}  // namespace mrta
