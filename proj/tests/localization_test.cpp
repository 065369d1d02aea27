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


#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "nlos/errors.hpp"
#include "nlos/localization.hpp"
#include "oracles.hpp"

namespace nlos {
namespace {

Wall wall(Point2 a, Point2 b) {
  const std::vector<Point2> ends{a, b};
  return {fit_line(ends), Segment2(a, b), 10, WallLabel::Other};
}

// Front wall across the junction, stem walls on both sides of the radar.
SpatialConfiguration junction() {
  return {{wall({16, -16}, {16, 16}), wall({-4, -4}, {8, -4}), wall({-4, 5}, {8, 5})}};
}

const LineModel& front_line() {
  static const LineModel line = junction().walls[0].line;
  return line;
}

DynamicScan repeat(Point2 p, int n, double v = 1.0) {
  DynamicScan s;
  for (int i = 0; i < n; ++i) {
    s.points.push_back({p, v});
  }
  return s;
}

void append(DynamicScan& into, const DynamicScan& more) {
  into.points.insert(into.points.end(), more.points.begin(), more.points.end());
}

std::vector<Point2> positions(const DynamicScan& s) {
  std::vector<Point2> out;
  for (const auto& d : s.points) {
    out.push_back(d.position);
  }
  return out;
}

TEST(Regime, Names) {
  EXPECT_EQ(to_string(Regime::LoS), "los");
  EXPECT_EQ(to_string(Regime::NLoS), "nlos");
}

TEST(SplitDynamic, Examples) {
  DynamicScan s;
  s.points = {{{6, 1}, 1.0}, {{20, -9}, -1.0}};
  const auto split = split_dynamic(s, junction());
  EXPECT_EQ(positions(split.direct), (std::vector<Point2>{{6, 1}}));
  EXPECT_EQ(positions(split.reflect), (std::vector<Point2>{{20, -9}}));

  const auto open = split_dynamic(s, {});
  EXPECT_EQ(open.direct.points.size(), 2u);
  EXPECT_TRUE(open.reflect.points.empty());
}

TEST(RelocateDynamic, Examples) {
  const SpatialConfiguration front{{wall({10, -5}, {10, 5})}};
  DynamicScan s;
  s.points = {{{13, -2}, 0.7}, {{10, 1}, -0.3}};
  const auto r = relocate_dynamic(s, front);
  EXPECT_NEAR(r.points[0].position.x, 7.0, 1e-12);
  EXPECT_NEAR(r.points[0].position.y, -2.0, 1e-12);
  EXPECT_EQ(r.points[0].radial_velocity, 0.7);
  EXPECT_EQ(r.points[1].position, (Point2{10, 1}));
  EXPECT_EQ(r.points[1].radial_velocity, -0.3);

  const SpatialConfiguration two{{wall({10, -5}, {10, 5}), wall({6, -4}, {6, 0})}};
  const auto m = relocate_dynamic(repeat({13, -2}, 1), two);
  EXPECT_NEAR(m.points[0].position.x, -1.0, 1e-12);
  EXPECT_NEAR(m.points[0].position.y, -2.0, 1e-12);
}

TEST(PartitionLosNlos, Examples) {
  DynamicScan s;
  s.points = {{{12, -9}, 1.0}, {{6, 1}, 1.0}};
  const auto r = partition_los_nlos(s, junction());
  EXPECT_EQ(positions(r.nlos), (std::vector<Point2>{{12, -9}}));
  EXPECT_EQ(positions(r.los), (std::vector<Point2>{{6, 1}}));
  const auto open = partition_los_nlos(s, {});
  EXPECT_EQ(open.los.points.size(), 2u);
}

TEST(CheckBounces, Examples) {
  const auto walls = junction();
  DynamicScan reflect;
  // Ghost of (12, -6) behind the front wall: open path around the corner.
  reflect.points.push_back({{20, -6}, 1.0});
  // Mirrored across the left wall, the return leg crosses the right wall 4 m from its end.
  reflect.points.push_back({{6, 20}, 1.0});
  // Same across the left wall, but the crossing is 0.6 m from the right wall end.
  reflect.points.push_back({{9.5, 18}, 1.0});
  // Mirrored across the right wall the point lands beyond the front wall.
  reflect.points.push_back({{26.9, -21.3}, 1.0});
  const auto relocated = relocate_dynamic(reflect, walls);
  const auto check = check_bounces(reflect, relocated, walls);
  ASSERT_EQ(check.consistent.points.size(), 2u);
  ASSERT_EQ(check.blocked.points.size(), 2u);
  EXPECT_NEAR(distance(check.consistent.points[0].position, {12, -6}), 0.0, 1e-9);
  EXPECT_NEAR(distance(check.consistent.points[1].position, {9.5, -8}), 0.0, 1e-9);
  EXPECT_NEAR(distance(check.blocked.points[0].position, {6, -10}), 0.0, 1e-9);
  EXPECT_NEAR(check.blocked.points[1].position.y, 13.3, 1e-9);
}

TEST(Localize, BlockedBounceIsDropped) {
  DynamicScan scan = repeat({26.9, -21.3}, 3);
  LocalizationTrace trace;
  EXPECT_TRUE(localize(scan, junction(), {0.7, 2}, &trace).empty());
  EXPECT_EQ(trace.blocked.points.size(), 3u);
}

TEST(Localize, SingleNlosPedestrian) {
  const Point2 ped{12, -9};
  const auto scan = repeat(reflect_point(ped, front_line()), 4, -0.8);
  const auto est = localize(scan, junction(), {0.7, 2});
  ASSERT_EQ(est.size(), 1u);
  EXPECT_LT(distance(est[0].position, ped), 1e-6);
  EXPECT_EQ(est[0].regime, Regime::NLoS);
  EXPECT_EQ(est[0].support, 4);
}

TEST(Localize, LosGhostIsExcluded) {
  const Point2 ped{6, 1};
  DynamicScan scan = repeat(ped, 3, 1.2);
  append(scan, repeat(reflect_point(ped, front_line()), 3, 1.2));
  append(scan, repeat(reflect_point(ped, junction().walls[2].line), 3, 1.2));
  LocalizationTrace trace;
  const auto est = localize(scan, junction(), {0.7, 2}, &trace);
  ASSERT_EQ(est.size(), 1u);
  EXPECT_EQ(est[0].support, 3);
  EXPECT_EQ(est[0].regime, Regime::LoS);
  EXPECT_LT(distance(est[0].position, ped), 1e-9);
  EXPECT_EQ(trace.regimes.los.points.size(), 6u);
  EXPECT_TRUE(trace.regimes.nlos.points.empty());
  EXPECT_EQ(trace.final_points.size(), 3u);
}

TEST(Localize, ThreePedestrians) {
  const std::vector<Point2> peds{{11, 9}, {14, 9.5}, {12, -9}};
  DynamicScan scan;
  for (const auto& p : peds) {
    append(scan, repeat(reflect_point(p, front_line()), 3, 0.9));
  }
  const auto est = localize(scan, junction(), {0.7, 2});
  ASSERT_EQ(est.size(), 3u);
  std::vector<bool> used(peds.size(), false);
  for (const auto& e : est) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < peds.size(); ++i) {
      if (distance(e.position, peds[i]) < distance(e.position, peds[best])) {
        best = i;
      }
    }
    EXPECT_LT(distance(e.position, peds[best]), 0.7);
    EXPECT_FALSE(used[best]);
    used[best] = true;
    EXPECT_EQ(e.regime, Regime::NLoS);
  }
}

TEST(Localize, MixedClusterTieIsNlos) {
  // Two direct returns at the corridor mouth and two relocated ones just
  // around the corner, close enough to merge.
  DynamicScan scan = repeat({8.3, -3.7}, 2);
  append(scan, repeat(reflect_point({8.3, -4.3}, front_line()), 2));
  const auto est = localize(scan, junction(), {0.7, 2});
  ASSERT_EQ(est.size(), 1u);
  EXPECT_EQ(est[0].support, 4);
  EXPECT_EQ(est[0].regime, Regime::NLoS);
}

TEST(Localize, EmptyScan) {
  EXPECT_TRUE(localize({}, junction(), {0.7, 2}).empty());
  EXPECT_THROW(localize({}, junction(), {0.0, 2}), DegenerateInput);
}

TEST(Localize, Invariants) {
  oracle::Rng rng(81);
  const auto walls = junction();
  for (int trial = 0; trial < 100; ++trial) {
    DynamicScan scan;
    const int n = rng.integer(0, 40);
    for (int i = 0; i < n; ++i) {
      scan.points.push_back({rng.point(-5.0, 30.0), rng.uniform(-2.0, 2.0)});
    }
    LocalizationTrace trace;
    const auto est = localize(scan, walls, {0.7, 2}, &trace);

    // D_final holds the direct returns followed by the NLoS ones, nothing from LoS.
    ASSERT_EQ(trace.final_points.size(),
              trace.direct.points.size() + trace.regimes.nlos.points.size());
    for (std::size_t i = 0; i < trace.direct.points.size(); ++i) {
      EXPECT_EQ(trace.final_points[i], trace.direct.points[i].position);
    }
    for (const auto& p : trace.regimes.nlos.points) {
      EXPECT_TRUE(std::find(trace.final_points.begin(), trace.final_points.end(), p.position) !=
                  trace.final_points.end());
    }
    // Every reflected return ends up blocked, LoS or NLoS.
    EXPECT_EQ(trace.blocked.points.size() + trace.regimes.los.points.size() +
                  trace.regimes.nlos.points.size(),
              trace.reflect.points.size());
    for (const auto& p : trace.blocked.points) {
      EXPECT_TRUE(std::find(trace.final_points.begin(), trace.final_points.end(), p.position) ==
                  trace.final_points.end());
    }

    // Each estimate is the mean of its cluster.
    const auto members = trace.clusters.members();
    ASSERT_EQ(est.size(), members.size());
    EXPECT_LE(est.size(), trace.final_points.size());
    for (std::size_t k = 0; k < est.size(); ++k) {
      Point2 sum{};
      for (auto i : members[k]) {
        sum = sum + trace.final_points[i];
      }
      const Point2 mean = sum * (1.0 / static_cast<double>(members[k].size()));
      EXPECT_LT(distance(mean, est[k].position), 1e-9);
      EXPECT_EQ(est[k].support, static_cast<int>(members[k].size()));
    }
  }
}

}  // namespace
}  // namespace nlos
