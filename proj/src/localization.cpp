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

#include "nlos/localization.hpp"

namespace nlos {

namespace {

// Crossings this close to a wall end do not block a bounce. Noise in range and
// azimuth moves a relocated point by tens of centimeters, enough to graze the
// end of a neighboring wall on a genuine path around a corner.
constexpr double kBounceEndMargin = 1.0;

bool occluded(const Point2& p, std::span<const WallRef> refs) {
  const Point2 origin{};
  return !(p == origin) && first_intersection(origin, p, refs).has_value();
}

}  // namespace

std::string_view to_string(Regime regime) { return regime == Regime::NLoS ? "nlos" : "los"; }

DynamicSplit split_dynamic(const DynamicScan& scan, const SpatialConfiguration& walls) {
  const auto refs = walls.refs();
  DynamicSplit out;
  for (const auto& d : scan.points) {
    (occluded(d.position, refs) ? out.reflect : out.direct).points.push_back(d);
  }
  return out;
}

DynamicScan relocate_dynamic(const DynamicScan& reflect, const SpatialConfiguration& walls) {
  const auto refs = walls.refs();
  const Point2 origin{};
  DynamicScan out;
  out.points.reserve(reflect.points.size());
  for (const auto& d : reflect.points) {
    DynamicPoint moved = d;
    if (!(d.position == origin)) {
      if (const auto hit = first_intersection(origin, d.position, refs)) {
        moved.position =
            reflect_point(d.position, walls.walls[static_cast<std::size_t>(hit->wall_id)].line);
      }
    }
    out.points.push_back(moved);
  }
  return out;
}

BounceCheck check_bounces(const DynamicScan& reflect, const DynamicScan& relocated,
                          const SpatialConfiguration& walls) {
  const auto refs = walls.refs();
  const Point2 origin{};
  BounceCheck out;
  for (std::size_t i = 0; i < reflect.points.size(); ++i) {
    const auto& moved = relocated.points[i];
    const auto hit = reflect.points[i].position == origin
                         ? std::nullopt
                         : first_intersection(origin, reflect.points[i].position, refs);
    bool clear = true;
    if (hit) {
      std::vector<WallRef> others;
      others.reserve(refs.size());
      for (const auto& r : refs) {
        const Point2 a = r.segment.a();
        const Point2 b = r.segment.b();
        const double len = distance(a, b);
        if (r.id == hit->wall_id || len <= 2.0 * kBounceEndMargin) {
          continue;
        }
        const Point2 step = (b - a) * (kBounceEndMargin / len);
        others.push_back({r.id, Segment2(a + step, b - step)});
      }
      clear = segment_clear(hit->point, moved.position, others);
    }
    (clear ? out.consistent : out.blocked).points.push_back(moved);
  }
  return out;
}

RegimeSplit partition_los_nlos(const DynamicScan& relocated, const SpatialConfiguration& walls) {
  const auto refs = walls.refs();
  RegimeSplit out;
  for (const auto& d : relocated.points) {
    (occluded(d.position, refs) ? out.nlos : out.los).points.push_back(d);
  }
  return out;
}

std::vector<PedestrianEstimate> localize(const DynamicScan& scan,
                                         const SpatialConfiguration& walls,
                                         const DbscanParams& params, LocalizationTrace* trace) {
  params.validate();
  auto split = split_dynamic(scan, walls);
  auto relocated = relocate_dynamic(split.reflect, walls);
  auto bounces = check_bounces(split.reflect, relocated, walls);
  auto regimes = partition_los_nlos(bounces.consistent, walls);

  std::vector<Point2> final_points;
  std::vector<bool> from_nlos;
  final_points.reserve(split.direct.points.size() + regimes.nlos.points.size());
  for (const auto& d : split.direct.points) {
    final_points.push_back(d.position);
    from_nlos.push_back(false);
  }
  for (const auto& d : regimes.nlos.points) {
    final_points.push_back(d.position);
    from_nlos.push_back(true);
  }

  auto clusters = dbscan(final_points, params);
  std::vector<PedestrianEstimate> estimates;
  estimates.reserve(static_cast<std::size_t>(clusters.k));
  for (const auto& members : clusters.members()) {
    Point2 sum{};
    std::size_t nlos = 0;
    for (auto i : members) {
      sum = sum + final_points[i];
      nlos += from_nlos[i] ? 1 : 0;
    }
    const auto n = members.size();
    estimates.push_back({sum * (1.0 / static_cast<double>(n)),
                         2 * nlos >= n ? Regime::NLoS : Regime::LoS, static_cast<int>(n)});
  }

  if (trace != nullptr) {
    trace->direct = std::move(split.direct);
    trace->reflect = std::move(split.reflect);
    trace->relocated = std::move(relocated);
    trace->blocked = std::move(bounces.blocked);
    trace->regimes = std::move(regimes);
    trace->final_points = std::move(final_points);
    trace->clusters = std::move(clusters);
  }
  return estimates;
}

}  // namespace nlos
