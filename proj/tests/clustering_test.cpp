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
#include <numeric>
#include <vector>

#include "nlos/clustering.hpp"
#include "nlos/errors.hpp"
#include "oracles.hpp"

namespace nlos {
namespace {

TEST(Dbscan, Empty) {
  const auto c = dbscan(std::vector<Point2>{}, {1.0, 3});
  EXPECT_EQ(c.k, 0);
  EXPECT_TRUE(c.labels.empty());
}

TEST(Dbscan, TwoSeparatedGroups) {
  std::vector<Point2> pts;
  for (int i = 0; i < 5; ++i) {
    pts.push_back({0.1 * i, 0.0});
  }
  for (int i = 0; i < 5; ++i) {
    pts.push_back({10.0 + 0.1 * i, 0.0});
  }
  const auto c = dbscan(pts, {0.5, 3});
  EXPECT_EQ(c.k, 2);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(c.labels[static_cast<std::size_t>(i)], 0);
    EXPECT_EQ(c.labels[static_cast<std::size_t>(i + 5)], 1);
  }
}

TEST(Dbscan, BorderJoinsLowerCluster) {
  // Two cores at +-1 with a border point between them, reachable from both.
  const std::vector<Point2> pts{{-1.0, 0.0}, {-1.1, 0.0}, {-1.2, 0.0}, {0.0, 0.0},
                                {1.0, 0.0},  {1.1, 0.0},  {1.2, 0.0}};
  const auto c = dbscan(pts, {1.0, 4});
  EXPECT_EQ(c.k, 2);
  EXPECT_EQ(c.labels[3], 0);
  EXPECT_EQ(c.labels, oracle::dbscan(pts, 1.0, 4).labels);
}

TEST(Dbscan, MatchesNaiveReference) {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(0, 50));
    const auto pts = rng.points(n, 0.0, rng.uniform(2.0, 10.0));
    const DbscanParams params{rng.uniform(0.2, 1.5), rng.integer(1, 6)};
    const auto got = dbscan(pts, params);
    const auto want = oracle::dbscan(pts, params.eps, params.min_pts);
    ASSERT_EQ(got.k, want.k);
    ASSERT_EQ(got.labels, want.labels);
    ASSERT_EQ(got.core, oracle::core_flags(pts, params.eps, params.min_pts));
  }
}

TEST(Dbscan, Properties) {
  oracle::Rng rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = rng.points(60, 0.0, 8.0);
    const DbscanParams params{0.9, 4};
    const auto c = dbscan(pts, params);
    const auto core = oracle::core_flags(pts, params.eps, params.min_pts);

    // Contiguous ids, each non-noise point has a witness in its cluster.
    std::vector<int> seen(static_cast<std::size_t>(c.k), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int l = c.labels[i];
      if (l == ClusterLabeling::kNoise) {
        continue;
      }
      ASSERT_GE(l, 0);
      ASSERT_LT(l, c.k);
      seen[static_cast<std::size_t>(l)] = 1;
      bool witness = false;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        witness = witness || (j != i && c.labels[j] == l && core[j] &&
                              distance(pts[i], pts[j]) <= params.eps);
      }
      EXPECT_TRUE(witness || core[i]);
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));

    // Core partition does not depend on input order.
    std::vector<std::size_t> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    std::vector<Point2> shuffled;
    for (auto i : perm) {
      shuffled.push_back(pts[i]);
    }
    const auto d = dbscan(shuffled, params);
    for (std::size_t a = 0; a < perm.size(); ++a) {
      for (std::size_t b = 0; b < perm.size(); ++b) {
        const auto i = perm[a];
        const auto j = perm[b];
        if (core[i] && core[j]) {
          ASSERT_EQ(c.labels[i] == c.labels[j], d.labels[a] == d.labels[b]);
        }
      }
      ASSERT_EQ(c.labels[perm[a]] == ClusterLabeling::kNoise,
                d.labels[a] == ClusterLabeling::kNoise);
    }
  }
}

TEST(Dbscan, MinPtsOneHasNoNoise) {
  oracle::Rng rng(5);
  const auto pts = rng.points(40, 0.0, 50.0);
  const auto c = dbscan(pts, {0.5, 1});
  EXPECT_TRUE(std::none_of(c.labels.begin(), c.labels.end(),
                           [](int l) { return l == ClusterLabeling::kNoise; }));
}

TEST(Dbscan, Members) {
  const std::vector<Point2> pts{{0, 0}, {50, 50}, {0.1, 0}, {0.2, 0}};
  const auto c = dbscan(pts, {0.5, 3});
  const auto m = c.members();
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_EQ(c.labels[1], ClusterLabeling::kNoise);
}

TEST(DbscanParams, Validate) {
  EXPECT_THROW(dbscan(std::vector<Point2>{{0, 0}}, {0.0, 3}), DegenerateInput);
  EXPECT_THROW(dbscan(std::vector<Point2>{{0, 0}}, {1.0, 0}), DegenerateInput);
}

}  // namespace
}  // namespace nlos
