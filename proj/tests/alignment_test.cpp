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
#include <limits>
#include <numeric>
#include <vector>

#include "fixtures.hpp"
#include "nlos/alignment.hpp"
#include "nlos/errors.hpp"
#include "nlos/nelder_mead.hpp"
#include "oracles.hpp"

namespace nlos {
namespace {

TEST(SelectNear, Examples) {
  const BoundaryPointSet w{{{0, 0}, {10, 10}}};
  const std::vector<Point2> s{{0.5, 0}};
  EXPECT_EQ(select_near(w, s, 1.0).points, (std::vector<Point2>{{0, 0}}));
  EXPECT_EQ(select_near(w, s, std::numeric_limits<double>::infinity()).points, w.points);
  EXPECT_TRUE(select_near(w, {}, 1.0).points.empty());
  EXPECT_TRUE(select_near(w, s, 0.5).points.empty());
  EXPECT_THROW(select_near(w, s, 0.0), DegenerateInput);
}

TEST(SelectNear, MatchesBruteForce) {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = rng.points(static_cast<std::size_t>(rng.integer(0, 120)), -10.0, 10.0);
    const auto s = rng.points(static_cast<std::size_t>(rng.integer(0, 40)), -10.0, 10.0);
    const double eps = trial % 2 == 0 ? 2.0 : rng.uniform(0.1, 4.0);
    ASSERT_EQ(select_near({w}, s, eps).points, oracle::select_near(w, s, eps));
  }
}

TEST(AlignmentCost, Examples) {
  const std::vector<Point2> s{{0, 0}, {1, 2}, {3, -1}};
  EXPECT_EQ(alignment_cost({}, {s}, s), 0.0);
  EXPECT_DOUBLE_EQ(alignment_cost({}, {{{1, 0}}}, std::vector<Point2>{{0, 0}}), 1.0);
  EXPECT_THROW(alignment_cost({}, {}, s), EmptyInput);
  EXPECT_THROW(alignment_cost({}, {s}, {}), EmptyInput);
}

TEST(AlignmentCost, MatchesBruteForce) {
  oracle::Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = rng.points(static_cast<std::size_t>(rng.integer(1, 150)), -10.0, 10.0);
    const auto s = rng.points(static_cast<std::size_t>(rng.integer(1, 60)), -10.0, 10.0);
    const RigidTransform2D t{rng.uniform(-0.5, 0.5), rng.uniform(-3.0, 3.0),
                             rng.uniform(-3.0, 3.0)};
    const double got = alignment_cost(t, {w}, s);
    const double want = oracle::alignment_cost(t, w, s);
    ASSERT_NEAR(got, want, 1e-9 * std::max(1.0, want));
  }
}

TEST(AlignmentCost, PermutationInvariant) {
  oracle::Rng rng(41);
  auto w = rng.points(50, -5.0, 5.0);
  auto s = rng.points(30, -5.0, 5.0);
  const RigidTransform2D t{0.1, 0.3, -0.2};
  const double base = alignment_cost(t, {w}, s);
  std::shuffle(w.begin(), w.end(), rng.engine());
  std::shuffle(s.begin(), s.end(), rng.engine());
  EXPECT_NEAR(alignment_cost(t, {w}, s), base, 1e-9);
}

TEST(Align, CoincidentSetsStayPut) {
  const auto w = fixture::junction_points(0.25);
  const auto r = align({w}, w, {});
  EXPECT_EQ(r.cost, 0.0);
  EXPECT_LT(std::abs(r.transform.theta), 1e-3);
  EXPECT_LT(std::abs(r.transform.tx), 1e-3);
  EXPECT_LT(std::abs(r.transform.ty), 1e-3);
}

TEST(Align, RecoversKnownMotion) {
  const auto w = fixture::junction_points();
  ASSERT_GE(w.size(), 100u);
  const RigidTransform2D g{0.1, 0.4, -0.2};
  const auto s = apply_rigid(g, w);
  const auto r = align({w}, s, {});
  EXPECT_LT(std::abs(rad_to_deg(r.transform.theta - g.theta)), 0.5);
  EXPECT_LT(std::hypot(r.transform.tx - g.tx, r.transform.ty - g.ty), 0.05);
  ASSERT_EQ(r.aligned.points.size(), w.size());
  EXPECT_EQ(r.aligned.points, apply_rigid(r.transform, w));
  EXPECT_NEAR(r.cost, alignment_cost(r.transform, {w}, s), 1e-9);
}

TEST(Align, NeverWorseThanIdentity) {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = rng.points(40, -5.0, 5.0);
    const auto s = rng.points(25, -5.0, 5.0);
    NelderMeadOptions opts;
    opts.max_iterations = rng.integer(1, 50);
    const auto r = align({w}, s, opts);
    EXPECT_LE(r.cost, alignment_cost({}, {w}, s));
    EXPECT_EQ(r.identity_cost, alignment_cost({}, {w}, s));
    EXPECT_LE(r.iterations, opts.max_iterations);
  }
}

TEST(Align, EmptyInputs) {
  EXPECT_THROW(align({}, std::vector<Point2>{{0, 0}}, {}), EmptyInput);
  EXPECT_THROW(align({{{0, 0}}}, {}, {}), EmptyInput);
}

TEST(NelderMeadOptions, Validate) {
  NelderMeadOptions o;
  EXPECT_NO_THROW(o.validate());
  o.max_iterations = 0;
  EXPECT_THROW(o.validate(), DegenerateInput);
  o = {};
  o.f_tolerance = 0.0;
  EXPECT_THROW(o.validate(), DegenerateInput);
  o = {};
  o.initial_step_angle = -1.0;
  EXPECT_THROW(o.validate(), DegenerateInput);
}

TEST(NelderMead, Rosenbrock) {
  auto f = [](const std::array<double, 2>& x) {
    return 100.0 * (x[1] - x[0] * x[0]) * (x[1] - x[0] * x[0]) + (1.0 - x[0]) * (1.0 - x[0]);
  };
  const auto r = nelder_mead<2>(f, {-1.2, 1.0}, {0.5, 0.5}, 1e-14, 5000);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-3);
  EXPECT_NEAR(r.x[1], 1.0, 1e-3);
}

}  // namespace
}  // namespace nlos
