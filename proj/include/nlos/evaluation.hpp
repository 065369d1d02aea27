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

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlos/localization.hpp"
#include "nlos/simulator.hpp"
#include "nlos/spatial_inference.hpp"

namespace nlos {

/// Magnitudes of the Front-Right and Front-Left direction differences, degrees.
struct AngularReport {
  std::optional<double> f_r;
  std::optional<double> f_l;
  std::optional<double> max_diff_vs_truth;
};

/// Throws MissingFrontWall without a Front wall.
AngularReport angular_differences(const SpatialConfiguration& config);
/// Same metric from labeled true lines.
AngularReport angular_differences(std::span<const TrueWall> walls);
/// Core rule on direction angles in degrees.
AngularReport angular_from_angles(double front, std::optional<double> right,
                                  std::optional<double> left);

/// Absolute error of one frame. Each prediction is matched to its nearest
/// ground-truth pedestrian, several predictions may share one.
struct FrameError {
  int frame_id{0};
  std::vector<double> per_prediction;
  std::optional<double> nlos;  ///< mean over predictions matched to NLoS truth
  std::optional<double> los;
  std::optional<double> avg;
  bool missed{false};  ///< no prediction in this frame
  int missed_pedestrians{0};  ///< truth pedestrians no prediction was matched to
};

FrameError absolute_error(std::span<const PedestrianEstimate> preds, const GroundTruthFrame& gt);

struct EvaluationReport {
  std::string scenario;
  std::optional<double> f_r;  ///< mean over frames with the wall pair
  std::optional<double> f_l;
  std::optional<double> max_diff;  ///< max over F-R, F-L of |mean - truth|
  std::optional<double> mean_angular_error;  ///< mean per-frame |diff - truth|
  std::optional<double> ae_nlos;
  std::optional<double> ae_los;
  std::optional<double> ae_avg;
  int frames{0};
  int missed_frames{0};
  int missed_pedestrians{0};
  AngularReport truth;
};

/// Scenario means. `angular` holds one entry per frame, nullopt where no
/// Front wall was inferred. Throws EmptyInput for zero frames.
EvaluationReport aggregate_report(std::string scenario, std::span<const FrameError> frames,
                                  std::span<const std::optional<AngularReport>> angular,
                                  const AngularReport& truth);

inline constexpr const char* kCsvHeader =
    "scenario,f_r,f_l,max_diff,ae_nlos,ae_los,ae_avg,missed_frames";

/// One CSV row (no newline), two decimals, empty fields for missing values.
std::string csv_row(const EvaluationReport& report);
void write_csv(std::ostream& out, std::span<const EvaluationReport> reports);

}  // namespace nlos
