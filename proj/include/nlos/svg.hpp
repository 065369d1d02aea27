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

#include <string>

#include "nlos/pipeline.hpp"
#include "nlos/simulator.hpp"

namespace nlos {

/// Top-down SVG of one frame in the radar frame: true walls, inferred walls,
/// radar returns, estimates and true pedestrian positions.
std::string render_svg(const Scene& scene, const RadarFrame& frame, const GroundTruthFrame& truth,
                       const FrameResult& result);

}  // namespace nlos
