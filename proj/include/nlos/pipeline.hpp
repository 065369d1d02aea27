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

#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlos/config.hpp"
#include "nlos/evaluation.hpp"
#include "nlos/formats.hpp"
#include "nlos/layout.hpp"
#include "nlos/localization.hpp"
#include "nlos/simulator.hpp"
#include "nlos/spatial_inference.hpp"

namespace nlos {

enum class Method {
  Proposed,   ///< layout-guided walls
  RadarOnly,  ///< walls from radar statics alone
};

std::string_view to_string(Method method);

struct FrameResult {
  int frame_id{0};
  std::optional<SpatialConfiguration> walls;  ///< nullopt when inference failed
  std::vector<PedestrianEstimate> estimates;
  double seconds{0.0};  ///< spatial inference plus localization
};

/// Per-frame processing with an optional sliding window of static returns.
/// Boundary points are computed once from the layout.
class FramePipeline {
 public:
  /// `layout` may be null only for Method::RadarOnly.
  FramePipeline(const PipelineConfig& config, const OccupancyGrid* layout, Method method);

  FrameResult process(const RadarFrame& frame, SpatialTrace* spatial = nullptr,
                      LocalizationTrace* local = nullptr);

  const BoundaryPointSet& boundary() const { return boundary_; }

 private:
  PipelineConfig config_;
  Method method_;
  BoundaryPointSet boundary_;
  std::deque<std::vector<Point2>> window_;
};

std::vector<FrameResult> run_pipeline(std::span<const RadarFrame> frames,
                                      const OccupancyGrid* layout, const PipelineConfig& config,
                                      Method method);

std::vector<WallsRecord> walls_records(std::span<const FrameResult> results);
std::vector<EstimatesRecord> estimates_records(std::span<const FrameResult> results);

/// Scores per-frame records against truth. Frame ids must match one to one,
/// otherwise DegenerateInput is thrown.
EvaluationReport evaluate_records(std::string scenario, std::span<const WallsRecord> walls,
                                  std::span<const EstimatesRecord> estimates,
                                  std::span<const GroundTruthFrame> truth);

struct SimulatedRun {
  Scene scene;
  OccupancyGrid layout;
  std::vector<RadarFrame> frames;
  std::vector<GroundTruthFrame> truth;
};

SimulatedRun simulate_run(ScenarioId id, const PipelineConfig& config);

}  // namespace nlos
