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

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nlos/geometry.hpp"
#include "nlos/layout.hpp"
#include "nlos/localization.hpp"
#include "nlos/spatial_inference.hpp"

namespace nlos {

enum class ScenarioId { B1S1, B1S2, B2S3, B2S4 };

inline constexpr ScenarioId kAllScenarios[] = {ScenarioId::B1S1, ScenarioId::B1S2,
                                               ScenarioId::B2S3, ScenarioId::B2S4};

/// "b1-s1", "b1-s2", "b2-s3", "b2-s4".
std::string_view to_string(ScenarioId id);
std::optional<ScenarioId> parse_scenario(std::string_view name);

/// Piecewise-linear path; held at the last waypoint afterwards.
struct Trajectory {
  std::vector<std::pair<double, Point2>> waypoints;  ///< (time s, world position)
  double speed{1.5};

  Point2 position_at(double t) const;
  Point2 velocity_at(double t) const;
};

struct SceneWall {
  Segment2 segment;  ///< world frame
  WallLabel label{WallLabel::Other};
};

/// Axis-aligned undrivable area, world frame. Only used to draw the layout.
struct Block {
  Point2 min;
  Point2 max;
};

struct Scene {
  std::string name;
  std::vector<SceneWall> walls;
  std::vector<Block> blocks;
  Point2 ego_position;
  double ego_heading{0.0};  ///< radians, world frame
  Point2 radar_mount{1.5, -0.5};  ///< ego frame
  std::vector<Trajectory> pedestrians;
  int duration_frames{75};
  double frame_period{0.1};
  double fov_deg{75.0};  ///< half-angle
  double max_range{40.0};
  Point2 bound_min;
  Point2 bound_max;

  /// World -> radar frame.
  RigidTransform2D world_to_radar() const;
  /// Wall segments in the radar frame, tagged with their index in `walls`.
  std::vector<WallRef> radar_walls() const;
};

struct NoiseModel {
  double sigma_range{0.15};   ///< m
  double sigma_azimuth{1.0};  ///< degrees
  double clutter_rate{2.0};   ///< mean points per frame
  int returns_per_pedestrian{3};
  double wall_sample_spacing{0.5};  ///< m
  std::uint64_t seed{42};

  static NoiseModel noiseless();
  void validate() const;
};

struct RadarPoint {
  Point2 position;  ///< radar frame
  double radial_velocity{0.0};
  bool dynamic{false};

  bool operator==(const RadarPoint&) const = default;
};

struct RadarFrame {
  int frame_id{0};
  std::vector<RadarPoint> points;

  bool operator==(const RadarFrame&) const = default;
};

struct TruePedestrian {
  Point2 position;  ///< radar frame
  Regime regime{Regime::LoS};
};

struct TrueWall {
  WallLabel label{WallLabel::Other};
  LineModel line;  ///< radar frame
};

struct GroundTruthFrame {
  int frame_id{0};
  std::vector<TruePedestrian> pedestrians;
  std::vector<TrueWall> walls;
};

Scene build_scene(ScenarioId id);

/// Single-bounce forward model. Deterministic in (scene, frame_id, noise).
/// Returns with |radial velocity| >= doppler_threshold are flagged dynamic.
/// Throws FrameOutOfRange.
std::pair<RadarFrame, GroundTruthFrame> simulate_frame(const Scene& scene, int frame_id,
                                                       const NoiseModel& noise,
                                                       double doppler_threshold = 0.1);

/// Rasterizes the scene's blocks through `cal`: a pixel is undrivable when its
/// radar-frame position lies inside a block.
OccupancyGrid render_layout(const Scene& scene, const LayoutCalibration& cal, int width = 1400,
                            int height = 1400);

}  // namespace nlos
