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


// Shared fixtures for the alignment recovery checks.

#pragma once

#include <vector>

#include "nlos/geometry.hpp"
#include "oracles.hpp"

namespace nlos::fixture {

/// Wall samples of an orthogonal T-junction, spaced `step` meters apart.
inline std::vector<Point2> junction_points(double step = 0.1) {
  const Point2 corners[][2] = {{{-4, -4}, {8, -4}},   {{8, -4}, {8, -12}}, {{-4, 5}, {8, 5}},
                               {{8, 5}, {8, 12}},     {{16, -12}, {16, 2}}, {{16, 2}, {22, 2}},
                               {{22, 2}, {22, 12}}};
  std::vector<Point2> out;
  for (const auto& c : corners) {
    const Segment2 s(c[0], c[1]);
    const Point2 dir = (s.b() - s.a()) * (1.0 / s.length());
    for (double t = 0.0; t <= s.length(); t += step) {
      out.push_back(s.a() + dir * t);
    }
  }
  return out;
}

/// Random rigid displacement with |theta| <= max_theta and |t| <= max_t.
inline RigidTransform2D random_motion(oracle::Rng& rng, double max_theta, double max_t) {
  const double r = max_t * std::sqrt(rng.uniform(0.0, 1.0));
  const double a = rng.uniform(-3.14159, 3.14159);
  return {rng.uniform(-max_theta, max_theta), r * std::cos(a), r * std::sin(a)};
}

}  // namespace nlos::fixture
