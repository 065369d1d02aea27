// Copyright 2026 The nlos-radar Authors
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

#include "nlos/formats.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "nlos/errors.hpp"

namespace nlos {

namespace {

using nlohmann::json;

json point_json(const Point2& p) { return json::array({p.x, p.y}); }

Point2 point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("expected [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <typename Record, typename Parse>
std::vector<Record> read_lines(std::istream& in, Parse&& parse) {
  std::vector<Record> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    try {
      out.push_back(parse(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError(e.what(), line_no);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const DegenerateInput& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (in.bad()) {
    throw IoError("read failed");
  }
  return out;
}

int frame_of(const json& j) { return j.at("frame").get<int>(); }

WallLabel label_from(const json& j) {
  const auto name = j.get<std::string>();
  const auto label = parse_wall_label(name);
  if (!label) {
    throw ParseError("unknown wall label '" + name + "'");
  }
  return *label;
}

}  // namespace

void write_frames(std::ostream& out, std::span<const RadarFrame> frames) {
  for (const auto& f : frames) {
    json points = json::array();
    for (const auto& p : f.points) {
      points.push_back({{"x", p.position.x},
                        {"y", p.position.y},
                        {"v", p.radial_velocity},
                        {"dyn", p.dynamic}});
    }
    out << json{{"frame", f.frame_id}, {"points", std::move(points)}}.dump() << '\n';
  }
}

std::vector<RadarFrame> read_frames(std::istream& in) {
  return read_lines<RadarFrame>(in, [](const json& j) {
    RadarFrame f;
    f.frame_id = frame_of(j);
    for (const auto& p : j.at("points")) {
      f.points.push_back({{p.at("x").get<double>(), p.at("y").get<double>()},
                          p.at("v").get<double>(),
                          p.at("dyn").get<bool>()});
    }
    return f;
  });
}

void write_truth(std::ostream& out, std::span<const GroundTruthFrame> truth) {
  for (const auto& t : truth) {
    json peds = json::array();
    for (const auto& p : t.pedestrians) {
      peds.push_back(
          {{"x", p.position.x}, {"y", p.position.y}, {"nlos", p.regime == Regime::NLoS}});
    }
    json walls = json::array();
    for (const auto& w : t.walls) {
      walls.push_back({{"label", std::string(to_string(w.label))},
                       {"theta", w.line.theta_deg()},
                       {"rho", w.line.rho()}});
    }
    out << json{{"frame", t.frame_id}, {"peds", std::move(peds)}, {"walls", std::move(walls)}}
               .dump()
        << '\n';
  }
}

std::vector<GroundTruthFrame> read_truth(std::istream& in) {
  return read_lines<GroundTruthFrame>(in, [](const json& j) {
    GroundTruthFrame t;
    t.frame_id = frame_of(j);
    for (const auto& p : j.at("peds")) {
      t.pedestrians.push_back({{p.at("x").get<double>(), p.at("y").get<double>()},
                               p.at("nlos").get<bool>() ? Regime::NLoS : Regime::LoS});
    }
    for (const auto& w : j.at("walls")) {
      t.walls.push_back({label_from(w.at("label")),
                         LineModel::from_normal_form(w.at("theta").get<double>(),
                                                     w.at("rho").get<double>())});
    }
    return t;
  });
}

void write_walls(std::ostream& out, std::span<const WallsRecord> records) {
  for (const auto& r : records) {
    json walls = json::array();
    for (const auto& w : r.walls) {
      walls.push_back({{"label", std::string(to_string(w.label))},
                       {"theta", w.line.theta_deg()},
                       {"rho", w.line.rho()},
                       {"support", w.support_count},
                       {"a", point_json(w.extent.a())},
                       {"b", point_json(w.extent.b())}});
    }
    out << json{{"frame", r.frame_id}, {"walls", std::move(walls)}}.dump() << '\n';
  }
}

std::vector<WallsRecord> read_walls(std::istream& in) {
  return read_lines<WallsRecord>(in, [](const json& j) {
    WallsRecord r;
    r.frame_id = frame_of(j);
    for (const auto& w : j.at("walls")) {
      r.walls.push_back({LineModel::from_normal_form(w.at("theta").get<double>(),
                                                     w.at("rho").get<double>()),
                         Segment2(point_from(w.at("a")), point_from(w.at("b"))),
                         w.at("support").get<int>(), label_from(w.at("label"))});
    }
    return r;
  });
}

void write_estimates(std::ostream& out, std::span<const EstimatesRecord> records) {
  for (const auto& r : records) {
    json est = json::array();
    for (const auto& e : r.estimates) {
      est.push_back({{"x", e.position.x},
                     {"y", e.position.y},
                     {"regime", std::string(to_string(e.regime))},
                     {"support", e.support}});
    }
    out << json{{"frame", r.frame_id}, {"estimates", std::move(est)}}.dump() << '\n';
  }
}

std::vector<EstimatesRecord> read_estimates(std::istream& in) {
  return read_lines<EstimatesRecord>(in, [](const json& j) {
    EstimatesRecord r;
    r.frame_id = frame_of(j);
    for (const auto& e : j.at("estimates")) {
      const auto regime = e.at("regime").get<std::string>();
      if (regime != "los" && regime != "nlos") {
        throw ParseError("unknown regime '" + regime + "'");
      }
      r.estimates.push_back({{e.at("x").get<double>(), e.at("y").get<double>()},
                             regime == "nlos" ? Regime::NLoS : Regime::LoS,
                             e.at("support").get<int>()});
    }
    return r;
  });
}

void write_scene(std::ostream& out, const Scene& scene) {
  json walls = json::array();
  for (const auto& w : scene.walls) {
    walls.push_back({{"label", std::string(to_string(w.label))},
                     {"a", point_json(w.segment.a())},
                     {"b", point_json(w.segment.b())}});
  }
  json blocks = json::array();
  for (const auto& b : scene.blocks) {
    blocks.push_back({{"min", point_json(b.min)}, {"max", point_json(b.max)}});
  }
  json peds = json::array();
  for (const auto& t : scene.pedestrians) {
    json wps = json::array();
    for (const auto& [time, p] : t.waypoints) {
      wps.push_back({{"t", time}, {"x", p.x}, {"y", p.y}});
    }
    peds.push_back({{"speed", t.speed}, {"waypoints", std::move(wps)}});
  }
  const json doc = {{"name", scene.name},
                    {"frame", "world"},
                    {"ego", {{"x", scene.ego_position.x},
                             {"y", scene.ego_position.y},
                             {"heading", scene.ego_heading}}},
                    {"radar_mount", point_json(scene.radar_mount)},
                    {"bound_min", point_json(scene.bound_min)},
                    {"bound_max", point_json(scene.bound_max)},
                    {"duration_frames", scene.duration_frames},
                    {"frame_period", scene.frame_period},
                    {"fov_deg", scene.fov_deg},
                    {"max_range", scene.max_range},
                    {"walls", std::move(walls)},
                    {"blocks", std::move(blocks)},
                    {"pedestrians", std::move(peds)}};
  out << doc.dump(2) << '\n';
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  return out;
}

}  // namespace nlos
