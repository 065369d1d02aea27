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

#include "nlos/pipeline.hpp"

#include <chrono>

#include <spdlog/spdlog.h>

#include "nlos/errors.hpp"

namespace nlos {

std::string_view to_string(Method method) {
  return method == Method::Proposed ? "proposed" : "radar-only";
}

FramePipeline::FramePipeline(const PipelineConfig& config, const OccupancyGrid* layout,
                             Method method)
    : config_(config), method_(method) {
  config_.validate();
  if (method_ == Method::Proposed) {
    if (layout == nullptr) {
      throw EmptyInput("the layout-guided method needs a layout");
    }
    boundary_ = pixels_to_world(extract_edges(*layout), config_.calibration);
    if (boundary_.points.empty()) {
      throw EmptyInput("layout has no drivable boundary");
    }
  }
}

FrameResult FramePipeline::process(const RadarFrame& frame, SpatialTrace* spatial,
                                   LocalizationTrace* local) {
  const auto start = std::chrono::steady_clock::now();
  FrameResult result;
  result.frame_id = frame.frame_id;

  std::vector<Point2> statics;
  DynamicScan dynamic;
  for (const auto& p : frame.points) {
    if (p.dynamic) {
      dynamic.points.push_back({p.position, p.radial_velocity});
    } else {
      statics.push_back(p.position);
    }
  }

  StaticScan scan;
  if (config_.accumulate_statics) {
    window_.push_back(std::move(statics));
    while (window_.size() > static_cast<std::size_t>(config_.static_window)) {
      window_.pop_front();
    }
    for (const auto& w : window_) {
      scan.points.insert(scan.points.end(), w.begin(), w.end());
    }
  } else {
    scan.points = std::move(statics);
  }

  try {
    result.walls = method_ == Method::Proposed
                       ? infer_from_boundary(boundary_, scan, config_.spatial, spatial)
                       : infer_radar_only(scan, config_.spatial, spatial);
  } catch (const NoReflectorFound& e) {
    spdlog::debug("frame {}: {}", frame.frame_id, e.what());
  } catch (const EmptyInput& e) {
    spdlog::debug("frame {}: {}", frame.frame_id, e.what());
  }
  if (result.walls) {
    result.estimates = localize(dynamic, *result.walls, config_.pedestrian_dbscan, local);
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<FrameResult> run_pipeline(std::span<const RadarFrame> frames,
                                      const OccupancyGrid* layout, const PipelineConfig& config,
                                      Method method) {
  FramePipeline pipeline(config, layout, method);
  std::vector<FrameResult> out;
  out.reserve(frames.size());
  for (const auto& f : frames) {
    out.push_back(pipeline.process(f));
  }
  return out;
}

std::vector<WallsRecord> walls_records(std::span<const FrameResult> results) {
  std::vector<WallsRecord> out;
  out.reserve(results.size());
  for (const auto& r : results) {
    out.push_back({r.frame_id, r.walls ? r.walls->walls : std::vector<Wall>{}});
  }
  return out;
}

std::vector<EstimatesRecord> estimates_records(std::span<const FrameResult> results) {
  std::vector<EstimatesRecord> out;
  out.reserve(results.size());
  for (const auto& r : results) {
    out.push_back({r.frame_id, r.estimates});
  }
  return out;
}

EvaluationReport evaluate_records(std::string scenario, std::span<const WallsRecord> walls,
                                  std::span<const EstimatesRecord> estimates,
                                  std::span<const GroundTruthFrame> truth) {
  if (walls.size() != truth.size() || estimates.size() != truth.size()) {
    throw DegenerateInput("record counts differ from the truth frame count");
  }
  std::vector<FrameError> errors;
  std::vector<std::optional<AngularReport>> angular;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int id = truth[i].frame_id;
    if (walls[i].frame_id != id || estimates[i].frame_id != id) {
      throw DegenerateInput("frame id mismatch at truth frame " + std::to_string(id));
    }
    errors.push_back(absolute_error(estimates[i].estimates, truth[i]));
    try {
      angular.emplace_back(angular_differences(SpatialConfiguration{walls[i].walls}));
    } catch (const MissingFrontWall&) {
      angular.emplace_back(std::nullopt);
    }
  }
  if (truth.empty()) {
    throw EmptyInput("no frames to evaluate");
  }
  return aggregate_report(std::move(scenario), errors, angular,
                          angular_differences(truth.front().walls));
}

SimulatedRun simulate_run(ScenarioId id, const PipelineConfig& config) {
  config.validate();
  SimulatedRun run{build_scene(id), OccupancyGrid(2, 2, OccupancyGrid::kDrivable), {}, {}};
  run.layout = render_layout(run.scene, config.calibration);
  for (int f = 0; f < run.scene.duration_frames; ++f) {
    auto [frame, truth] = simulate_frame(run.scene, f, config.noise, config.doppler_threshold);
    run.frames.push_back(std::move(frame));
    run.truth.push_back(std::move(truth));
  }
  return run;
}

}  // namespace nlos
