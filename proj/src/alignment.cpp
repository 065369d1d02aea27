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

#include "nlos/alignment.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "nlos/errors.hpp"
#include "nlos/nelder_mead.hpp"
#include "nlos/point_index.hpp"

namespace nlos {

namespace {

// Bucket size for nearest-static lookups; statics are meters apart at most.
constexpr double kIndexCell = 1.0;
// Displacement budget covered by the per-point candidate lists.
constexpr double kCandidateReach = 0.75;

/// Exact sum of nearest-static distances for transformed boundary points.
///
/// Each boundary point w keeps the statics within d0(w) + 2R of it, where d0 is
/// its untransformed nearest distance. While a transform moves w by at most R,
/// its nearest static is in that list; larger moves use the grid.
class NearestSum {
 public:
  NearestSum(std::span<const Point2> near, std::span<const Point2> statics)
      : near_(near), statics_(statics), index_(statics, kIndexCell) {
    starts_.reserve(near.size() + 1);
    starts_.push_back(0);
    std::vector<std::size_t> hits;
    for (const auto& w : near) {
      norms_.push_back(norm(w));
      index_.within(w, index_.nearest_distance(w) + 2.0 * kCandidateReach, hits);
      for (auto h : hits) {
        candidates_.push_back(static_cast<std::uint32_t>(h));
      }
      starts_.push_back(candidates_.size());
    }
  }

  double operator()(const RigidTransform2D& t) const {
    const double c = std::cos(t.theta);
    const double s = std::sin(t.theta);
    const double spin = 2.0 * std::abs(std::sin(0.5 * t.theta));
    const double shift = std::hypot(t.tx, t.ty);
    double sum = 0.0;
    for (std::size_t k = 0; k < near_.size(); ++k) {
      const Point2& w = near_[k];
      const Point2 moved{c * w.x - s * w.y + t.tx, s * w.x + c * w.y + t.ty};
      if (spin * norms_[k] + shift > kCandidateReach) {
        sum += index_.nearest_distance(moved);
        continue;
      }
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = starts_[k]; j < starts_[k + 1]; ++j) {
        const Point2 d = statics_[candidates_[j]] - moved;
        best = std::min(best, d.x * d.x + d.y * d.y);
      }
      sum += std::sqrt(best);
    }
    return sum;
  }

 private:
  std::span<const Point2> near_;
  std::span<const Point2> statics_;
  PointIndex index_;
  std::vector<double> norms_;
  std::vector<std::size_t> starts_;
  std::vector<std::uint32_t> candidates_;
};

}  // namespace

void NelderMeadOptions::validate() const {
  if (!(initial_step_angle > 0.0) || !(initial_step_trans > 0.0) || !(f_tolerance > 0.0)) {
    throw DegenerateInput("Nelder-Mead steps and tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw DegenerateInput("Nelder-Mead needs at least one iteration");
  }
}

BoundaryPointSet select_near(const BoundaryPointSet& boundary, std::span<const Point2> statics,
                             double epsilon) {
  if (!(epsilon > 0.0)) {
    throw DegenerateInput("selection radius must be positive");
  }
  BoundaryPointSet out;
  if (statics.empty()) {
    return out;
  }
  const PointIndex index(statics, std::isfinite(epsilon) ? epsilon : kIndexCell);
  for (const auto& w : boundary.points) {
    if (index.any_within(w, epsilon)) {
      out.points.push_back(w);
    }
  }
  return out;
}

double alignment_cost(const RigidTransform2D& t, const BoundaryPointSet& near,
                      std::span<const Point2> statics) {
  if (near.points.empty() || statics.empty()) {
    throw EmptyInput("alignment cost needs boundary and static points");
  }
  return NearestSum(near.points, statics)(t);
}

AlignmentResult align(const BoundaryPointSet& near, std::span<const Point2> statics,
                      const NelderMeadOptions& opts) {
  opts.validate();
  if (near.points.empty() || statics.empty()) {
    throw EmptyInput("alignment needs boundary and static points");
  }
  const NearestSum sum(near.points, statics);
  auto cost = [&](const std::array<double, 3>& x) { return sum({x[0], x[1], x[2]}); };

  const auto found = nelder_mead<3>(
      cost, {0.0, 0.0, 0.0},
      {opts.initial_step_angle, opts.initial_step_trans, opts.initial_step_trans},
      opts.f_tolerance, opts.max_iterations);

  AlignmentResult result;
  result.identity_cost = cost({0.0, 0.0, 0.0});
  result.iterations = found.iterations;
  if (found.value <= result.identity_cost) {
    result.transform = {found.x[0], found.x[1], found.x[2]};
    result.cost = found.value;
  } else {
    result.cost = result.identity_cost;
  }
  result.aligned.points = apply_rigid(result.transform, near.points);
  return result;
}

}  // namespace nlos
