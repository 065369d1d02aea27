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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nlos/alignment.hpp"
#include "nlos/clustering.hpp"
#include "nlos/geometry.hpp"
#include "nlos/layout.hpp"

namespace nlos {

enum class WallLabel { Front, Left, Right, Other };

std::string_view to_string(WallLabel label);
/// Accepts the lowercase names produced by to_string.
std::optional<WallLabel> parse_wall_label(std::string_view name);

struct StaticScan {
  std::vector<Point2> points;
};

struct Wall {
  LineModel line;
  Segment2 extent;  ///< support span on the line, padded
  int support_count{0};
  WallLabel label{WallLabel::Other};
};

struct SpatialConfiguration {
  std::vector<Wall> walls;

  /// Wall extents tagged with their index in `walls`.
  std::vector<WallRef> refs() const;
  const Wall* find(WallLabel label) const;
};

struct SpatialParams {
  double epsilon{1.5};  ///< boundary-to-static gate for alignment, m
  double delta{0.5};    ///< static-to-cluster and direct-return gate, m
  DbscanParams reflector_dbscan{1.0, 5};
  NelderMeadOptions nm_opts;

  void validate() const;
};

/// Intermediate sets of one inference run, for inspection and rendering.
struct SpatialTrace {
  BoundaryPointSet near;
  AlignmentResult alignment;
  ClusterLabeling clusters;
  SpatialConfiguration initial;
  StaticScan direct;
  StaticScan reflect;
  StaticScan clutter;
  StaticScan relocated;
};

/// Splits `statics` by boundary cluster: s joins the cluster holding its
/// nearest boundary point when that distance is < delta. Ties go to the lower
/// cluster id. Returns one scan per cluster.
std::vector<StaticScan> assign_static_to_clusters(const StaticScan& statics,
                                                  const BoundaryPointSet& boundary,
                                                  const ClusterLabeling& clusters, double delta);

/// Line fit plus extent over `support`. nullopt with fewer than two distinct
/// points. The support span is padded by min(delta, half the median support
/// spacing) and widened to cover `boundary` points lying within delta of the
/// fitted line.
std::optional<Wall> fit_wall(std::span<const Point2> support, double delta,
                             std::span<const Point2> boundary = {});

struct StaticClasses {
  StaticScan direct;
  StaticScan reflect;
  StaticScan clutter;
};

/// direct: within delta of a wall line, with the projection inside that wall's
/// extent grown by delta. reflect: the ray from the radar crosses a wall.
/// Everything else is clutter.
StaticClasses classify_static(const StaticScan& statics, const SpatialConfiguration& walls,
                              double delta);

/// Mirrors each point across the first wall its radar ray crosses. Points
/// crossing nothing are returned unchanged.
StaticScan relocate_reflected(const StaticScan& reflect, const SpatialConfiguration& walls);

/// Assigns Front, Left and Right, leaving the rest as Other.
std::vector<Wall> label_walls(std::vector<Wall> walls);

/// Full wall inference from a layout image.
SpatialConfiguration infer_spatial_configuration(const OccupancyGrid& layout,
                                                 const LayoutCalibration& cal,
                                                 const StaticScan& statics,
                                                 const SpatialParams& params,
                                                 SpatialTrace* trace = nullptr);

/// Same inference from precomputed radar-frame boundary points.
SpatialConfiguration infer_from_boundary(const BoundaryPointSet& boundary,
                                         const StaticScan& statics, const SpatialParams& params,
                                         SpatialTrace* trace = nullptr);

/// Baseline without a layout: the statics stand in for the boundary points and
/// the selection and alignment steps are skipped.
SpatialConfiguration infer_radar_only(const StaticScan& statics, const SpatialParams& params,
                                      SpatialTrace* trace = nullptr);

}  // namespace nlos
