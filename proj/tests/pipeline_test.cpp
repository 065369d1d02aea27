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

#include <cmath>
#include <vector>

#include "nlos/errors.hpp"
#include "nlos/pipeline.hpp"
#include "nlos/svg.hpp"

namespace nlos {
namespace {

PipelineConfig noiseless() {
  PipelineConfig c;
  c.noise = NoiseModel::noiseless();
  return c;
}

TEST(Pipeline, NoiselessIsExact) {
  const auto config = noiseless();
  for (auto id : kAllScenarios) {
    const auto run = simulate_run(id, config);
    const auto results = run_pipeline(run.frames, &run.layout, config, Method::Proposed);
    ASSERT_EQ(results.size(), run.truth.size());
    const auto truth_angles = angular_differences(run.truth.front().walls);
    for (std::size_t i = 0; i < results.size(); ++i) {
      ASSERT_TRUE(results[i].walls) << to_string(id) << " frame " << i;
      const auto e = absolute_error(results[i].estimates, run.truth[i]);
      ASSERT_TRUE(e.avg) << to_string(id) << " frame " << i;
      for (double d : e.per_prediction) {
        EXPECT_LT(d, 1e-3) << to_string(id) << " frame " << i;
      }
      const auto a = angular_differences(*results[i].walls);
      ASSERT_TRUE(a.f_r && a.f_l);
      EXPECT_NEAR(*a.f_r, *truth_angles.f_r, 0.1);
      EXPECT_NEAR(*a.f_l, *truth_angles.f_l, 0.1);
    }
  }
}

TEST(Pipeline, DefaultNoiseReport) {
  PipelineConfig config;
  config.noise.seed = 42;
  const auto run = simulate_run(ScenarioId::B1S1, config);
  const auto results = run_pipeline(run.frames, &run.layout, config, Method::Proposed);
  const auto report =
      evaluate_records("b1-s1", walls_records(results), estimates_records(results), run.truth);
  ASSERT_TRUE(report.f_r && report.f_l && report.max_diff && report.ae_nlos && report.ae_avg);
  EXPECT_LE(*report.ae_avg, 0.5);
  EXPECT_EQ(report.frames, 75);
  EXPECT_NEAR(*report.truth.f_r, 90.0, 1e-9);
}

TEST(Pipeline, RadarOnlyNeedsNoLayout) {
  const auto config = noiseless();
  const auto run = simulate_run(ScenarioId::B2S3, config);
  const auto results = run_pipeline(run.frames, nullptr, config, Method::RadarOnly);
  int with_walls = 0;
  for (const auto& r : results) {
    with_walls += r.walls ? 1 : 0;
  }
  EXPECT_GT(with_walls, 60);
  EXPECT_THROW(FramePipeline(config, nullptr, Method::Proposed), EmptyInput);
  const OccupancyGrid blank(32, 32, OccupancyGrid::kDrivable);
  EXPECT_THROW(FramePipeline(config, &blank, Method::Proposed), EmptyInput);
}

TEST(Pipeline, StaticWindowAccumulates) {
  auto config = noiseless();
  config.accumulate_statics = true;
  config.static_window = 3;
  const auto run = simulate_run(ScenarioId::B1S1, config);
  FramePipeline pipeline(config, &run.layout, Method::Proposed);
  std::size_t statics = 0;
  for (const auto& p : run.frames[0].points) {
    statics += p.dynamic ? 0 : 1;
  }
  std::vector<std::size_t> sizes;
  for (int f = 0; f < 5; ++f) {
    SpatialTrace trace;
    const auto r = pipeline.process(run.frames[f], &trace);
    ASSERT_TRUE(r.walls);
    sizes.push_back(trace.direct.points.size() + trace.reflect.points.size() +
                    trace.clutter.points.size());
  }
  EXPECT_EQ(sizes[0], statics);
  EXPECT_EQ(sizes[2], sizes[3]);
  EXPECT_EQ(sizes[3], sizes[4]);
  EXPECT_GT(sizes[2], sizes[0]);
}

TEST(Pipeline, FramesWithoutStaticsAreMissed) {
  const auto config = noiseless();
  const auto run = simulate_run(ScenarioId::B1S1, config);
  FramePipeline pipeline(config, &run.layout, Method::Proposed);
  RadarFrame empty;
  empty.frame_id = 7;
  const auto r = pipeline.process(empty);
  EXPECT_EQ(r.frame_id, 7);
  EXPECT_FALSE(r.walls);
  EXPECT_TRUE(r.estimates.empty());
}

TEST(Pipeline, EvaluateRejectsMismatch) {
  const auto config = noiseless();
  const auto run = simulate_run(ScenarioId::B1S2, config);
  const std::vector<RadarFrame> frames(run.frames.begin(), run.frames.begin() + 3);
  const std::vector<GroundTruthFrame> truth(run.truth.begin(), run.truth.begin() + 3);
  const auto results = run_pipeline(frames, &run.layout, config, Method::Proposed);
  auto walls = walls_records(results);
  auto ests = estimates_records(results);
  EXPECT_NO_THROW(evaluate_records("b1-s2", walls, ests, truth));
  ests[1].frame_id = 9;
  EXPECT_THROW(evaluate_records("b1-s2", walls, ests, truth), DegenerateInput);
  walls.pop_back();
  EXPECT_THROW(evaluate_records("b1-s2", walls, estimates_records(results), truth),
               DegenerateInput);
  EXPECT_THROW(evaluate_records("x", {}, {}, {}), EmptyInput);
}

TEST(Pipeline, Deterministic) {
  PipelineConfig config;
  config.noise.seed = 9;
  const auto a = simulate_run(ScenarioId::B2S4, config);
  const auto b = simulate_run(ScenarioId::B2S4, config);
  EXPECT_EQ(a.frames, b.frames);
  EXPECT_EQ(a.layout, b.layout);
  const auto ra = run_pipeline(a.frames, &a.layout, config, Method::Proposed);
  const auto rb = run_pipeline(b.frames, &b.layout, config, Method::Proposed);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    ASSERT_EQ(ra[i].estimates.size(), rb[i].estimates.size());
    for (std::size_t k = 0; k < ra[i].estimates.size(); ++k) {
      EXPECT_EQ(ra[i].estimates[k].position, rb[i].estimates[k].position);
    }
  }
}

TEST(Svg, RendersFrame) {
  const auto config = noiseless();
  const auto run = simulate_run(ScenarioId::B1S1, config);
  FramePipeline pipeline(config, &run.layout, Method::Proposed);
  const auto result = pipeline.process(run.frames[0]);
  const auto svg = render_svg(run.scene, run.frames[0], run.truth[0], result);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("<line"), std::string::npos);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
}

}  // namespace
}  // namespace nlos
