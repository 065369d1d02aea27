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
#include <iosfwd>
#include <span>
#include <vector>

#include "nlos/localization.hpp"
#include "nlos/simulator.hpp"
#include "nlos/spatial_inference.hpp"

namespace nlos {

/// Inferred walls of one frame; empty when inference failed.
struct WallsRecord {
  int frame_id{0};
  std::vector<Wall> walls;
};

struct EstimatesRecord {
  int frame_id{0};
  std::vector<PedestrianEstimate> estimates;
};

// Line-delimited JSON, one record per frame. Readers skip blank lines and
// throw ParseError with the 1-based line number of a bad record.

void write_frames(std::ostream& out, std::span<const RadarFrame> frames);
std::vector<RadarFrame> read_frames(std::istream& in);

void write_truth(std::ostream& out, std::span<const GroundTruthFrame> truth);
std::vector<GroundTruthFrame> read_truth(std::istream& in);

void write_walls(std::ostream& out, std::span<const WallsRecord> records);
std::vector<WallsRecord> read_walls(std::istream& in);

void write_estimates(std::ostream& out, std::span<const EstimatesRecord> records);
std::vector<EstimatesRecord> read_estimates(std::istream& in);

/// Scene description (world frame) as a single JSON document.
void write_scene(std::ostream& out, const Scene& scene);

/// Opens files for the readers and writers above; throws IoError.
std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace nlos
