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

#include "nlos/spatial_inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <spdlog/spdlog.h>

#include "nlos/errors.hpp"
#include "nlos/point_index.hpp"

namespace nlos {

namespace {

constexpr double kFrontBandLow = 45.0;
constexpr double kFrontBandHigh = 135.0;
// Far enough to leave any scene, used for the forward probe ray.
constexpr double kProbeRange = 1e4;

bool in_front_band(const LineModel& line) {
  const double t = line.theta_deg();
  return t > kFrontBandLow && t < kFrontBandHigh;
}

struct ExtentRange {
  double lo;
  double hi;
};

ExtentRange extent_range(const Wall& wall) {
  const double a = wall.line.along(wall.extent.a());
  const double b = wall.line.along(wall.extent.b());
  return {std::min(a, b), std::max(a, b)};
}

std::vector<Wall> fit_clusters(const std::vector<StaticScan>& per_cluster,
                               const BoundaryPointSet& boundary, const ClusterLabeling& clusters,
                               double delta) {
  std::vector<std::vector<Point2>> members(per_cluster.size());
  for (std::size_t i = 0; i < boundary.points.size(); ++i) {
    if (clusters.labels[i] != ClusterLabeling::kNoise) {
      members[static_cast<std::size_t>(clusters.labels[i])].push_back(boundary.points[i]);
    }
  }
  std::vector<Wall> walls;
  for (std::size_t j = 0; j < per_cluster.size(); ++j) {
    if (auto wall = fit_wall(per_cluster[j].points, delta, members[j])) {
      walls.push_back(std::move(*wall));
    }
  }
  return walls;
}

SpatialConfiguration run_on_clusters(const BoundaryPointSet& boundary,
                                     const ClusterLabeling& clusters, const StaticScan& statics,
                                     const SpatialParams& params, SpatialTrace* trace) {
  const auto initial_support =
      assign_static_to_clusters(statics, boundary, clusters, params.delta);
  SpatialConfiguration initial{fit_clusters(initial_support, boundary, clusters, params.delta)};
  if (initial.walls.empty()) {
    throw NoReflectorFound("no boundary cluster has two distinct static points");
  }

  auto classes = classify_static(statics, initial, params.delta);
  StaticScan relocated = relocate_reflected(classes.reflect, initial);

  StaticScan final_scan;
  final_scan.points.reserve(classes.direct.points.size() + relocated.points.size());
  final_scan.points = classes.direct.points;
  final_scan.points.insert(final_scan.points.end(), relocated.points.begin(),
                           relocated.points.end());

  const auto final_support =
      assign_static_to_clusters(final_scan, boundary, clusters, params.delta);
  SpatialConfiguration result{
      label_walls(fit_clusters(final_support, boundary, clusters, params.delta))};

  spdlog::debug("walls: {} initial, {} final; statics {} direct, {} reflect, {} clutter",
                initial.walls.size(), result.walls.size(), classes.direct.points.size(),
                classes.reflect.points.size(), classes.clutter.points.size());

  if (trace != nullptr) {
    trace->clusters = clusters;
    trace->initial = std::move(initial);
    trace->direct = std::move(classes.direct);
    trace->reflect = std::move(classes.reflect);
    trace->clutter = std::move(classes.clutter);
    trace->relocated = std::move(relocated);
  }
  if (result.walls.empty()) {
    throw NoReflectorFound("no wall survived the refit");
  }
  return result;
}

}  // namespace

std::string_view to_string(WallLabel label) {
  switch (label) {
    case WallLabel::Front:
      return "front";
    case WallLabel::Left:
      return "left";
    case WallLabel::Right:
      return "right";
    case WallLabel::Other:
      break;
  }
  return "other";
}

std::optional<WallLabel> parse_wall_label(std::string_view name) {
  for (auto label : {WallLabel::Front, WallLabel::Left, WallLabel::Right, WallLabel::Other}) {
    if (name == to_string(label)) {
      return label;
    }
  }
  return std::nullopt;
}

std::vector<WallRef> SpatialConfiguration::refs() const {
  std::vector<WallRef> out;
  out.reserve(walls.size());
  for (std::size_t i = 0; i < walls.size(); ++i) {
    out.push_back({static_cast<int>(i), walls[i].extent});
  }
  return out;
}

const Wall* SpatialConfiguration::find(WallLabel label) const {
  for (const auto& w : walls) {
    if (w.label == label) {
      return &w;
    }
  }
  return nullptr;
}

void SpatialParams::validate() const {
  if (!(epsilon > 0.0) || !(delta > 0.0)) {
    throw DegenerateInput("epsilon and delta must be positive");
  }
  reflector_dbscan.validate();
  nm_opts.validate();
}

std::vector<StaticScan> assign_static_to_clusters(const StaticScan& statics,
                                                  const BoundaryPointSet& boundary,
                                                  const ClusterLabeling& clusters, double delta) {
  if (!(delta > 0.0)) {
    throw DegenerateInput("delta must be positive");
  }
  if (clusters.labels.size() != boundary.points.size()) {
    throw DegenerateInput("cluster labels do not match the boundary points");
  }
  std::vector<StaticScan> out(static_cast<std::size_t>(clusters.k));
  if (clusters.k == 0 || statics.points.empty()) {
    return out;
  }

  std::vector<Point2> members;
  std::vector<int> member_cluster;
  for (std::size_t i = 0; i < boundary.points.size(); ++i) {
    if (clusters.labels[i] != ClusterLabeling::kNoise) {
      members.push_back(boundary.points[i]);
      member_cluster.push_back(clusters.labels[i]);
    }
  }
  const PointIndex index(members, delta);
  std::vector<std::size_t> hits;
  for (const auto& s : statics.points) {
    index.within(s, delta, hits);
    int best_cluster = -1;
    double best = std::numeric_limits<double>::infinity();
    for (auto h : hits) {
      const double d = distance(s, members[h]);
      const int c = member_cluster[h];
      if (d < delta && (d < best || (d == best && c < best_cluster))) {
        best = d;
        best_cluster = c;
      }
    }
    if (best_cluster >= 0) {
      out[static_cast<std::size_t>(best_cluster)].points.push_back(s);
    }
  }
  return out;
}

std::optional<Wall> fit_wall(std::span<const Point2> support, double delta,
                             std::span<const Point2> boundary) {
  if (support.size() < 2 ||
      std::all_of(support.begin(), support.end(),
                  [&](const Point2& p) { return p == support.front(); })) {
    return std::nullopt;
  }
  const LineModel line = fit_line(support);

  std::vector<double> t;
  t.reserve(support.size());
  for (const auto& p : support) {
    t.push_back(line.along(p));
  }
  std::sort(t.begin(), t.end());
  std::vector<double> gaps;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i] - t[i - 1] > 1e-9) {
      gaps.push_back(t[i] - t[i - 1]);
    }
  }
  double pad = 0.0;
  if (!gaps.empty()) {
    auto mid = gaps.begin() + static_cast<std::ptrdiff_t>(gaps.size() / 2);
    std::nth_element(gaps.begin(), mid, gaps.end());
    pad = std::min(delta, 0.5 * *mid);
  }
  double lo = t.front() - pad;
  double hi = t.back() + pad;
  for (const auto& b : boundary) {
    if (std::abs(line.signed_distance(b)) < delta) {
      lo = std::min(lo, line.along(b));
      hi = std::max(hi, line.along(b));
    }
  }
  if (!(hi - lo > 0.0)) {
    return std::nullopt;
  }
  return Wall{line, Segment2(line.at(lo), line.at(hi)), static_cast<int>(support.size()),
              WallLabel::Other};
}

StaticClasses classify_static(const StaticScan& statics, const SpatialConfiguration& walls,
                              double delta) {
  if (walls.walls.empty()) {
    throw EmptyInput("static classification needs at least one wall");
  }
  std::vector<ExtentRange> ranges;
  ranges.reserve(walls.walls.size());
  for (const auto& w : walls.walls) {
    ranges.push_back(extent_range(w));
  }
  const auto refs = walls.refs();
  const Point2 origin{};

  StaticClasses out;
  for (const auto& s : statics.points) {
    bool direct = false;
    for (std::size_t i = 0; i < walls.walls.size() && !direct; ++i) {
      const auto& line = walls.walls[i].line;
      const double t = line.along(s);
      direct = std::abs(line.signed_distance(s)) < delta && t >= ranges[i].lo - delta &&
               t <= ranges[i].hi + delta;
    }
    if (direct) {
      out.direct.points.push_back(s);
    } else if (!(s == origin) && first_intersection(origin, s, refs)) {
      out.reflect.points.push_back(s);
    } else {
      out.clutter.points.push_back(s);
    }
  }
  return out;
}

StaticScan relocate_reflected(const StaticScan& reflect, const SpatialConfiguration& walls) {
  const auto refs = walls.refs();
  const Point2 origin{};
  StaticScan out;
  out.points.reserve(reflect.points.size());
  for (const auto& r : reflect.points) {
    const auto hit = r == origin ? std::nullopt : first_intersection(origin, r, refs);
    out.points.push_back(
        hit ? reflect_point(r, walls.walls[static_cast<std::size_t>(hit->wall_id)].line) : r);
  }
  return out;
}

std::vector<Wall> label_walls(std::vector<Wall> walls) {
  for (auto& w : walls) {
    w.label = WallLabel::Other;
  }

  // Front: the first front-band wall hit by the forward axis; without one,
  // the front-band wall ahead of the radar whose extent midpoint is nearest.
  std::vector<WallRef> band;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    if (in_front_band(walls[i].line)) {
      band.push_back({static_cast<int>(i), walls[i].extent});
    }
  }
  int front = -1;
  if (const auto hit = first_intersection({0.0, 0.0}, {kProbeRange, 0.0}, band)) {
    front = hit->wall_id;
  } else {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ref : band) {
      const Point2 mid = ref.segment.midpoint();
      if (mid.x > 0.0 && norm(mid) < best) {
        best = norm(mid);
        front = ref.id;
      }
    }
  }
  if (front >= 0) {
    walls[static_cast<std::size_t>(front)].label = WallLabel::Front;
  }

  int right = -1;
  int left = -1;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    if (in_front_band(walls[i].line)) {
      continue;
    }
    const double y = walls[i].extent.midpoint().y;
    if (y == 0.0) {
      continue;
    }
    int& slot = y < 0.0 ? right : left;
    if (slot < 0 || walls[i].support_count > walls[static_cast<std::size_t>(slot)].support_count) {
      slot = static_cast<int>(i);
    }
  }
  if (right >= 0) {
    walls[static_cast<std::size_t>(right)].label = WallLabel::Right;
  }
  if (left >= 0) {
    walls[static_cast<std::size_t>(left)].label = WallLabel::Left;
  }
  return walls;
}

SpatialConfiguration infer_spatial_configuration(const OccupancyGrid& layout,
                                                 const LayoutCalibration& cal,
                                                 const StaticScan& statics,
                                                 const SpatialParams& params,
                                                 SpatialTrace* trace) {
  cal.validate();
  const auto edges = extract_edges(layout);
  if (edges.empty()) {
    throw EmptyInput("layout has no drivable boundary");
  }
  return infer_from_boundary(pixels_to_world(edges, cal), statics, params, trace);
}

SpatialConfiguration infer_from_boundary(const BoundaryPointSet& boundary,
                                         const StaticScan& statics, const SpatialParams& params,
                                         SpatialTrace* trace) {
  params.validate();
  if (statics.points.empty()) {
    throw EmptyInput("no static points");
  }
  if (boundary.points.empty()) {
    throw EmptyInput("no boundary points");
  }
  BoundaryPointSet near = select_near(boundary, statics.points, params.epsilon);
  if (near.points.empty()) {
    throw NoReflectorFound("no boundary point lies near a static point");
  }
  AlignmentResult aligned = align(near, statics.points, params.nm_opts);
  const ClusterLabeling clusters = dbscan(aligned.aligned.points, params.reflector_dbscan);
  spdlog::debug("alignment cost {:.4f} -> {:.4f} in {} iterations, {} clusters",
                aligned.identity_cost, aligned.cost, aligned.iterations, clusters.k);

  auto result = run_on_clusters(aligned.aligned, clusters, statics, params, trace);
  if (trace != nullptr) {
    trace->near = std::move(near);
    trace->alignment = std::move(aligned);
  }
  return result;
}

SpatialConfiguration infer_radar_only(const StaticScan& statics, const SpatialParams& params,
                                      SpatialTrace* trace) {
  params.validate();
  if (statics.points.empty()) {
    throw EmptyInput("no static points");
  }
  const BoundaryPointSet boundary{statics.points};
  const ClusterLabeling clusters = dbscan(boundary.points, params.reflector_dbscan);
  auto result = run_on_clusters(boundary, clusters, statics, params, trace);
  if (trace != nullptr) {
    trace->near = boundary;
    trace->alignment = AlignmentResult{{}, boundary, 0.0, 0.0, 0};
  }
  return result;
}

}  // namespace nlos
