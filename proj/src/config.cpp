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

#include "nlos/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "nlos/errors.hpp"

namespace nlos {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_bool(std::string_view s, bool& out) {
  if (s == "true" || s == "1") {
    out = true;
    return true;
  }
  if (s == "false" || s == "0") {
    out = false;
    return true;
  }
  return false;
}

struct Field {
  std::function<bool(PipelineConfig&, std::string_view)> set;
  std::function<std::string(const PipelineConfig&)> get;
};

template <typename Access>
Field number_field(Access access) {
  return {[access](PipelineConfig& c, std::string_view v) { return parse_number(v, access(c)); },
          [access](const PipelineConfig& c) { return fmt::format("{}", access(c)); }};
}

#define NLOS_FIELD(expr) \
  number_field([](auto& c) -> auto& { return expr; })

const std::map<std::string, Field, std::less<>>& fields() {
  static const std::map<std::string, Field, std::less<>> table = {
      {"spatial.epsilon", NLOS_FIELD(c.spatial.epsilon)},
      {"spatial.delta", NLOS_FIELD(c.spatial.delta)},
      {"reflector.eps", NLOS_FIELD(c.spatial.reflector_dbscan.eps)},
      {"reflector.min_pts", NLOS_FIELD(c.spatial.reflector_dbscan.min_pts)},
      {"pedestrian.eps", NLOS_FIELD(c.pedestrian_dbscan.eps)},
      {"pedestrian.min_pts", NLOS_FIELD(c.pedestrian_dbscan.min_pts)},
      {"nm.initial_step_angle", NLOS_FIELD(c.spatial.nm_opts.initial_step_angle)},
      {"nm.initial_step_trans", NLOS_FIELD(c.spatial.nm_opts.initial_step_trans)},
      {"nm.f_tolerance", NLOS_FIELD(c.spatial.nm_opts.f_tolerance)},
      {"nm.max_iterations", NLOS_FIELD(c.spatial.nm_opts.max_iterations)},
      {"radar.doppler_threshold", NLOS_FIELD(c.doppler_threshold)},
      {"statics.accumulate",
       {[](PipelineConfig& c, std::string_view v) { return parse_bool(v, c.accumulate_statics); },
        [](const PipelineConfig& c) {
          return std::string(c.accumulate_statics ? "true" : "false");
        }}},
      {"statics.window", NLOS_FIELD(c.static_window)},
      {"calibration.o_x", NLOS_FIELD(c.calibration.o_x)},
      {"calibration.o_y", NLOS_FIELD(c.calibration.o_y)},
      {"calibration.x_scale", NLOS_FIELD(c.calibration.x_scale)},
      {"calibration.y_scale", NLOS_FIELD(c.calibration.y_scale)},
      {"calibration.x_offset", NLOS_FIELD(c.calibration.x_offset)},
      {"calibration.y_offset", NLOS_FIELD(c.calibration.y_offset)},
      {"noise.sigma_range", NLOS_FIELD(c.noise.sigma_range)},
      {"noise.sigma_azimuth", NLOS_FIELD(c.noise.sigma_azimuth)},
      {"noise.clutter_rate", NLOS_FIELD(c.noise.clutter_rate)},
      {"noise.returns_per_pedestrian", NLOS_FIELD(c.noise.returns_per_pedestrian)},
      {"noise.wall_sample_spacing", NLOS_FIELD(c.noise.wall_sample_spacing)},
      {"noise.seed", NLOS_FIELD(c.noise.seed)},
  };
  return table;
}

#undef NLOS_FIELD

}  // namespace

void PipelineConfig::validate() const {
  spatial.validate();
  pedestrian_dbscan.validate();
  calibration.validate();
  noise.validate();
  if (!(doppler_threshold >= 0.0)) {
    throw DegenerateInput("doppler threshold must be non-negative");
  }
  if (static_window < 1) {
    throw DegenerateInput("static window must be at least one frame");
  }
}

PipelineConfig parse_config(std::string_view text, PipelineConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value", line_no);
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = fields().find(key);
    if (it == fields().end()) {
      throw ParseError(fmt::format("unknown key '{}'", key), line_no);
    }
    if (!it->second.set(base, value)) {
      throw ParseError(fmt::format("bad value '{}' for {}", value, key), line_no);
    }
  }
  try {
    base.validate();
  } catch (const DegenerateInput& e) {
    throw ParseError(e.what());
  }
  return base;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string dump_config(const PipelineConfig& config) {
  std::string out;
  for (const auto& [key, field] : fields()) {
    out += key + " = " + field.get(config) + "\n";
  }
  return out;
}

}  // namespace nlos
