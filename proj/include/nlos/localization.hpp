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

#include <string_view>
#include <vector>

#include "nlos/clustering.hpp"
#include "nlos/geometry.hpp"
#include "nlos/spatial_inference.hpp"

namespace nlos {

enum class Regime { LoS, NLoS };

std::string_view to_string(Regime regime);

struct DynamicPoint {
  Point2 position;
  double radial_velocity{0.0};  ///< m/s
};

struct DynamicScan {
  std::vector<DynamicPoint> points;
};

struct PedestrianEstimate {
  Point2 position;
  Regime regime{Regime::LoS};
  int support{1};  ///< cluster size
};

struct DynamicSplit {
  DynamicScan direct;
  DynamicScan reflect;
};

/// reflect when the ray from the radar to the point crosses a wall extent.
DynamicSplit split_dynamic(const DynamicScan& scan, const SpatialConfiguration& walls);

/// Mirrors each point across the first wall its radar ray crosses; velocity is
/// carried unchanged.
DynamicScan relocate_dynamic(const DynamicScan& reflect, const SpatialConfiguration& walls);

struct BounceCheck {
  DynamicScan consistent;
  DynamicScan blocked;  ///< the leg from the wall to the relocated point crosses another wall
};

/// Keeps relocated points whose specular path radar -> wall -> point is open.
/// `relocated` must be relocate_dynamic(reflect, walls).
BounceCheck check_bounces(const DynamicScan& reflect, const DynamicScan& relocated,
                          const SpatialConfiguration& walls);

struct RegimeSplit {
  DynamicScan los;
  DynamicScan nlos;
};

/// NLoS when the relocated point is hidden from the radar by a wall extent.
RegimeSplit partition_los_nlos(const DynamicScan& relocated, const SpatialConfiguration& walls);

struct LocalizationTrace {
  DynamicScan direct;
  DynamicScan reflect;
  DynamicScan relocated;
  DynamicScan blocked;
  RegimeSplit regimes;
  std::vector<Point2> final_points;
  ClusterLabeling clusters;
};

/// Clusters direct returns together with relocated NLoS returns and reports one
/// estimate per cluster at its centroid. The regime follows the majority of
/// the members; a tie counts as NLoS.
std::vector<PedestrianEstimate> localize(const DynamicScan& scan,
                                         const SpatialConfiguration& walls,
                                         const DbscanParams& params,
                                         LocalizationTrace* trace = nullptr);

}  // namespace nlos
