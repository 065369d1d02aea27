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

#include "nlos/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nlos/errors.hpp"

namespace nlos {

namespace {

// Scene layout, radar frame (x forward, y left).
constexpr double kBoundXMin = -4.0;
constexpr double kBoundXMax = 49.5;
constexpr double kBoundY = 16.75;
constexpr double kRightStemY = -4.0;
constexpr double kLeftStemY = 5.0;
constexpr double kNearSideX = 8.0;
constexpr double kFrontX = 16.0;
constexpr double kOpeningY = 2.0;   // B2: front wall ends here
constexpr double kOppositeX = 22.0;  // B2: wall across the opening

constexpr double kDuration = 7.5;  // s, matches 75 frames
constexpr double kEndpointTolerance = 1e-9;
// Building corners have thickness; rays grazing one closer than this are blocked.
constexpr double kCornerClearance = 0.15;
constexpr double kMaxClutterSpeed = 2.0;

struct Walker {
  Point2 start;  // radar frame
  Point2 heading;
};

class SceneBuilder {
 public:
  explicit SceneBuilder(std::string name) {
    scene_.name = std::move(name);
    scene_.bound_min = world({kBoundXMin, -kBoundY});
    scene_.bound_max = world({kBoundXMax, kBoundY});
  }

  Point2 world(const Point2& radar) const { return radar + scene_.radar_mount; }

  void wall(Point2 a, Point2 b, WallLabel label) {
    scene_.walls.push_back({Segment2(world(a), world(b)), label});
  }
  void block(Point2 lo, Point2 hi) { scene_.blocks.push_back({world(lo), world(hi)}); }
  void walker(const Walker& w) {
    Trajectory t;
    const Point2 end = w.start + w.heading * (t.speed * kDuration);
    t.waypoints = {{0.0, world(w.start)}, {kDuration, world(end)}};
    scene_.pedestrians.push_back(std::move(t));
  }

  Scene take() { return std::move(scene_); }

 private:
  Scene scene_;
};

void add_stem(SceneBuilder& b) {
  b.block({kBoundXMin, -kBoundY}, {kNearSideX, kRightStemY});
  b.wall({kBoundXMin, kRightStemY}, {kNearSideX, kRightStemY}, WallLabel::Right);
  b.wall({kNearSideX, kRightStemY}, {kNearSideX, -kBoundY}, WallLabel::Other);
  b.block({kBoundXMin, kLeftStemY}, {kNearSideX, kBoundY});
  b.wall({kBoundXMin, kLeftStemY}, {kNearSideX, kLeftStemY}, WallLabel::Left);
  b.wall({kNearSideX, kLeftStemY}, {kNearSideX, kBoundY}, WallLabel::Other);
}

void add_closed_front(SceneBuilder& b) {
  b.block({kFrontX, -kBoundY}, {kBoundXMax, kBoundY});
  b.wall({kFrontX, -kBoundY}, {kFrontX, kBoundY}, WallLabel::Front);
}

void add_front_with_opposite(SceneBuilder& b) {
  b.block({kFrontX, -kBoundY}, {kBoundXMax, kOpeningY});
  b.wall({kFrontX, -kBoundY}, {kFrontX, kOpeningY}, WallLabel::Front);
  b.wall({kFrontX, kOpeningY}, {kOppositeX, kOpeningY}, WallLabel::Other);
  b.block({kOppositeX, kOpeningY}, {kBoundXMax, kBoundY});
  b.wall({kOppositeX, kOpeningY}, {kOppositeX, kBoundY}, WallLabel::Other);
}

const Point2 kNorth{0.0, 1.0};
const Point2 kSouth{0.0, -1.0};
const Point2 kAhead{1.0, 0.0};

struct Polar {
  double range;
  double azimuth;  // radians
};

Polar to_polar(const Point2& p) { return {norm(p), std::atan2(p.y, p.x)}; }

bool in_sensor_view(const Scene& scene, const Point2& p) {
  const Polar polar = to_polar(p);
  return polar.range > 0.0 && polar.range <= scene.max_range &&
         std::abs(polar.azimuth) <= deg_to_rad(scene.fov_deg);
}

LineModel line_of(const Segment2& s) {
  const Point2 d = s.b() - s.a();
  return LineModel::through(s.a(), rad_to_deg(std::atan2(d.y, d.x)));
}

struct Return {
  Point2 position;
  double radial_velocity;
};

bool clears_corners(const Point2& a, const Point2& b, std::span<const WallRef> walls) {
  const Point2 r = b - a;
  const double rr = dot(r, r);
  if (rr == 0.0) {
    return true;
  }
  for (const auto& wall : walls) {
    for (const Point2& e : {wall.segment.a(), wall.segment.b()}) {
      if (distance(e, a) < kCornerClearance || distance(e, b) < kCornerClearance) {
        continue;
      }
      const double t = dot(e - a, r) / rr;
      if (t > 0.0 && t < 1.0 && distance(e, a + r * t) < kCornerClearance) {
        return false;
      }
    }
  }
  return true;
}

bool path_clear(const Point2& a, const Point2& b, std::span<const WallRef> walls) {
  return segment_clear(a, b, walls, kEndpointTolerance) && clears_corners(a, b, walls);
}

/// Apparent position of `target` seen via a specular bounce off wall `via`,
/// when both legs of the path are unobstructed.
std::optional<Point2> mirror_path(const Point2& target, const WallRef& via,
                                  const LineModel& via_line, std::span<const WallRef> walls) {
  const Point2 origin{};
  const Point2 ghost = reflect_point(target, via_line);
  const WallRef single[] = {via};
  const auto hit = first_intersection(origin, ghost, single);
  if (!hit) {
    return std::nullopt;
  }
  if (!path_clear(origin, hit->point, walls) || !path_clear(hit->point, target, walls)) {
    return std::nullopt;
  }
  return ghost;
}

Point2 perturb(const Point2& p, const NoiseModel& noise, std::mt19937_64& rng) {
  if (noise.sigma_range == 0.0 && noise.sigma_azimuth == 0.0) {
    return p;
  }
  std::normal_distribution<double> unit(0.0, 1.0);
  const Polar polar = to_polar(p);
  const double r = polar.range + noise.sigma_range * unit(rng);
  const double a = polar.azimuth + deg_to_rad(noise.sigma_azimuth) * unit(rng);
  return {r * std::cos(a), r * std::sin(a)};
}

double radial_velocity(const Point2& position, const Point2& velocity) {
  const double r = norm(position);
  return r > 0.0 ? dot(position, velocity) / r : 0.0;
}

}  // namespace

std::string_view to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::B1S1:
      return "b1-s1";
    case ScenarioId::B1S2:
      return "b1-s2";
    case ScenarioId::B2S3:
      return "b2-s3";
    case ScenarioId::B2S4:
      break;
  }
  return "b2-s4";
}

std::optional<ScenarioId> parse_scenario(std::string_view name) {
  for (auto id : kAllScenarios) {
    if (name == to_string(id)) {
      return id;
    }
  }
  return std::nullopt;
}

Point2 Trajectory::position_at(double t) const {
  if (waypoints.empty()) {
    return {};
  }
  if (t <= waypoints.front().first) {
    return waypoints.front().second;
  }
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    const auto& [t1, p1] = waypoints[i];
    if (t <= t1) {
      const auto& [t0, p0] = waypoints[i - 1];
      return p0 + (p1 - p0) * ((t - t0) / (t1 - t0));
    }
  }
  return waypoints.back().second;
}

Point2 Trajectory::velocity_at(double t) const {
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    const auto& [t0, p0] = waypoints[i - 1];
    const auto& [t1, p1] = waypoints[i];
    if (t >= t0 && t < t1) {
      return (p1 - p0) * (1.0 / (t1 - t0));
    }
  }
  return {};
}

RigidTransform2D Scene::world_to_radar() const {
  // radar = R(-heading) (world - ego) - mount
  const RigidTransform2D ego_to_world{ego_heading, ego_position.x, ego_position.y};
  const RigidTransform2D radar_to_ego{0.0, radar_mount.x, radar_mount.y};
  return ego_to_world.compose(radar_to_ego).inverse();
}

std::vector<WallRef> Scene::radar_walls() const {
  const auto t = world_to_radar();
  std::vector<WallRef> out;
  out.reserve(walls.size());
  for (std::size_t i = 0; i < walls.size(); ++i) {
    out.push_back({static_cast<int>(i),
                   Segment2(t.apply(walls[i].segment.a()), t.apply(walls[i].segment.b()))});
  }
  return out;
}

NoiseModel NoiseModel::noiseless() {
  NoiseModel n;
  n.sigma_range = 0.0;
  n.sigma_azimuth = 0.0;
  n.clutter_rate = 0.0;
  return n;
}

void NoiseModel::validate() const {
  if (!(sigma_range >= 0.0) || !(sigma_azimuth >= 0.0) || !(clutter_rate >= 0.0)) {
    throw DegenerateInput("noise sigmas and clutter rate must be non-negative");
  }
  if (returns_per_pedestrian < 1) {
    throw DegenerateInput("returns_per_pedestrian must be at least 1");
  }
  if (!(wall_sample_spacing > 0.0)) {
    throw DegenerateInput("wall_sample_spacing must be positive");
  }
}

Scene build_scene(ScenarioId id) {
  SceneBuilder b(std::string(to_string(id)));
  add_stem(b);
  // Cross-street walkers stop short of the boresight: a walker crossing it moves
  // tangentially and falls under the Doppler threshold.
  switch (id) {
    case ScenarioId::B1S1:
      add_closed_front(b);
      b.walker({{11.0, -13.0}, kNorth});
      b.walker({{13.5, -12.5}, kNorth});
      break;
    case ScenarioId::B1S2:
      add_closed_front(b);
      b.walker({{12.0, -13.0}, kNorth});
      b.walker({{3.0, -1.5}, kAhead});
      break;
    case ScenarioId::B2S3:
      add_front_with_opposite(b);
      b.walker({{10.0, 13.0}, kSouth});
      b.walker({{12.5, 13.5}, kSouth});
      b.walker({{14.5, -13.0}, kNorth});
      break;
    case ScenarioId::B2S4:
      add_front_with_opposite(b);
      b.walker({{10.0, 13.0}, kSouth});
      b.walker({{12.5, 13.5}, kSouth});
      b.walker({{3.0, -1.5}, kAhead});
      break;
  }
  return b.take();
}

std::pair<RadarFrame, GroundTruthFrame> simulate_frame(const Scene& scene, int frame_id,
                                                       const NoiseModel& noise,
                                                       double doppler_threshold) {
  noise.validate();
  if (frame_id < 0 || frame_id >= scene.duration_frames) {
    throw FrameOutOfRange("frame " + std::to_string(frame_id) + " outside [0, " +
                          std::to_string(scene.duration_frames) + ")");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(noise.seed),
                    static_cast<std::uint32_t>(noise.seed >> 32),
                    static_cast<std::uint32_t>(frame_id)};
  std::mt19937_64 rng(seq);

  const auto walls = scene.radar_walls();
  std::vector<LineModel> lines;
  lines.reserve(walls.size());
  for (const auto& w : walls) {
    lines.push_back(line_of(w.segment));
  }
  const Point2 origin{};
  auto visible = [&](const Point2& p) {
    return in_sensor_view(scene, p) && path_clear(origin, p, walls);
  };

  RadarFrame frame;
  frame.frame_id = frame_id;
  auto emit = [&](const Point2& p, double v) {
    frame.points.push_back(
        {perturb(p, noise, rng), v, std::abs(v) >= doppler_threshold});
  };

  // Static returns: visible wall samples, then their single-bounce ghosts.
  std::vector<std::pair<std::size_t, Point2>> samples;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const Segment2& s = walls[i].segment;
    const Point2 dir = (s.b() - s.a()) * (1.0 / s.length());
    for (double t = 0.5 * noise.wall_sample_spacing; t < s.length();
         t += noise.wall_sample_spacing) {
      const Point2 p = s.a() + dir * t;
      if (visible(p)) {
        samples.emplace_back(i, p);
      }
    }
  }
  for (const auto& [wall, p] : samples) {
    emit(p, 0.0);
  }
  for (const auto& [wall, p] : samples) {
    for (std::size_t j = 0; j < walls.size(); ++j) {
      if (j == wall) {
        continue;
      }
      const auto ghost = mirror_path(p, walls[j], lines[j], walls);
      if (ghost && in_sensor_view(scene, *ghost)) {
        emit(*ghost, 0.0);
      }
    }
  }

  // Pedestrians: direct path and every valid single-bounce path.
  const double t = frame_id * scene.frame_period;
  const auto to_radar = scene.world_to_radar();
  const RigidTransform2D rotate_only{to_radar.theta, 0.0, 0.0};
  GroundTruthFrame truth;
  truth.frame_id = frame_id;
  for (const auto& walker : scene.pedestrians) {
    const Point2 p = to_radar.apply(walker.position_at(t));
    const Point2 v = rotate_only.apply(walker.velocity_at(t));
    const bool hidden = first_intersection(origin, p, walls).has_value();
    truth.pedestrians.push_back({p, hidden ? Regime::NLoS : Regime::LoS});

    std::vector<Return> returns;
    if (visible(p)) {
      returns.push_back({p, radial_velocity(p, v)});
    }
    for (std::size_t j = 0; j < walls.size(); ++j) {
      const auto ghost = mirror_path(p, walls[j], lines[j], walls);
      if (ghost && in_sensor_view(scene, *ghost)) {
        const Point2 n = lines[j].normal();
        const Point2 mirrored_v = v - n * (2.0 * dot(v, n));
        returns.push_back({*ghost, radial_velocity(*ghost, mirrored_v)});
      }
    }
    for (const auto& r : returns) {
      for (int k = 0; k < noise.returns_per_pedestrian; ++k) {
        emit(r.position, r.radial_velocity);
      }
    }
  }

  // Clutter: uniform over the sensed sector.
  if (noise.clutter_rate > 0.0) {
    std::poisson_distribution<int> count(noise.clutter_rate);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = count(rng);
    const double fov = deg_to_rad(scene.fov_deg);
    for (int k = 0; k < n; ++k) {
      const double r = scene.max_range * std::sqrt(unit(rng));
      const double a = fov * (2.0 * unit(rng) - 1.0);
      const double speed =
          doppler_threshold + (kMaxClutterSpeed - doppler_threshold) * unit(rng);
      const double v = unit(rng) < 0.5 ? -speed : speed;
      frame.points.push_back({{r * std::cos(a), r * std::sin(a)}, v, true});
    }
  }

  for (std::size_t i = 0; i < walls.size(); ++i) {
    truth.walls.push_back({scene.walls[i].label, lines[i]});
  }
  return {std::move(frame), std::move(truth)};
}

OccupancyGrid render_layout(const Scene& scene, const LayoutCalibration& cal, int width,
                            int height) {
  cal.validate();
  OccupancyGrid grid(width, height, OccupancyGrid::kDrivable);
  const auto to_world = scene.world_to_radar().inverse();
  for (int v = 0; v < height; ++v) {
    for (int u = 0; u < width; ++u) {
      const Point2 p = to_world.apply(pixel_to_world(u, v, cal));
      for (const auto& b : scene.blocks) {
        if (p.x >= b.min.x && p.x <= b.max.x && p.y >= b.min.y && p.y <= b.max.y) {
          grid.set(u, v, OccupancyGrid::kBlocked);
          break;
        }
      }
    }
  }
  return grid;
}

}  // namespace nlos
