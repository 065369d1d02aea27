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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "nlos/geometry.hpp"

namespace nlos {

/// Uniform bucket grid over a fixed point set. Queries are exact: they return
/// the same answers as a linear scan, with ties broken by lowest point index.
class PointIndex {
 public:
  PointIndex(std::span<const Point2> points, double cell_size);

  std::size_t size() const { return points_.size(); }
  const Point2& point(std::size_t i) const { return points_[i]; }

  /// Index of the nearest point; nullopt only for an empty set.
  std::optional<std::size_t> nearest(const Point2& q) const;
  /// Distance to the nearest point (infinity for an empty set).
  double nearest_distance(const Point2& q) const;
  /// True when some point lies at distance < r (strict).
  bool any_within(const Point2& q, double r) const;
  /// Indices of points at distance <= r (closed ball), ascending unless
  /// `sorted` is false.
  void within(const Point2& q, double r, std::vector<std::size_t>& out,
              bool sorted = true) const;

 private:
  struct Cell {
    std::int64_t cx;
    std::int64_t cy;
  };

  Cell cell_of(const Point2& p) const {
    constexpr double kLimit = 1e15;  // keeps infinite query radii castable
    auto axis = [&](double d) {
      return static_cast<std::int64_t>(std::clamp(std::floor(d / cell_), -kLimit, kLimit));
    };
    return {axis(p.x - min_.x), axis(p.y - min_.y)};
  }
  std::span<const std::uint32_t> bucket(std::int64_t cx, std::int64_t cy) const;

  template <typename Better>
  std::optional<std::size_t> search(const Point2& q, Better&& better, double& best_sq) const;

  template <typename Visit>
  void visit_ring(const Cell& c, std::int64_t k, Visit&& visit) const;

  std::vector<Point2> points_;
  double cell_;
  Point2 min_{};
  std::int64_t nx_{0};
  std::int64_t ny_{0};
  std::vector<std::uint32_t> starts_;  // CSR layout, size nx*ny + 1
  std::vector<std::uint32_t> items_;
};

}  // namespace nlos
