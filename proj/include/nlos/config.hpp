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

#include <filesystem>
#include <string>
#include <string_view>

#include "nlos/clustering.hpp"
#include "nlos/layout.hpp"
#include "nlos/simulator.hpp"
#include "nlos/spatial_inference.hpp"

namespace nlos {

struct PipelineConfig {
  SpatialParams spatial;
  DbscanParams pedestrian_dbscan{0.7, 2};
  double doppler_threshold{0.1};  ///< m/s, dynamic when |v| >= threshold
  bool accumulate_statics{false};
  int static_window{5};  ///< frames, used when accumulate_statics is set
  LayoutCalibration calibration;
  NoiseModel noise;

  void validate() const;
};

/// Parses flat `key = value` lines; '#' starts a comment. Unknown keys and bad
/// values throw ParseError naming the line. Unset keys keep `base` values.
PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
/// Throws IoError when the file cannot be read.
PipelineConfig load_config(const std::filesystem::path& path);
/// Every key with its current value, one per line, in parse_config syntax.
std::string dump_config(const PipelineConfig& config);

}  // namespace nlos
