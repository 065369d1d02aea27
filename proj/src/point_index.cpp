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

#include "nlos/point_index.hpp"

#include "nlos/errors.hpp"

namespace nlos {

PointIndex::PointIndex(std::span<const Point2> points, double cell_size)
    : points_(points.begin(), points.end()), cell_(cell_size) {
  if (!(cell_ > 0.0)) {
    throw DegenerateInput("point index cell size must be positive");
  }
  if (points_.empty()) {
    return;
  }
  Point2 max = points_.front();
  min_ = points_.front();
  for (const auto& p : points_) {
    min_.x = std::min(min_.x, p.x);
    min_.y = std::min(min_.y, p.y);
    max.x = std::max(max.x, p.x);
    max.y = std::max(max.y, p.y);
  }
  // Keep the table bounded for pathological spreads; queries stay exact.
  const double span = std::max(max.x - min_.x, max.y - min_.y);
  const double max_cells_per_axis = 2048.0;
  if (span / cell_ > max_cells_per_axis) {
    cell_ = span / max_cells_per_axis;
  }
  nx_ = static_cast<std::int64_t>(std::floor((max.x - min_.x) / cell_)) + 1;
  ny_ = static_cast<std::int64_t>(std::floor((max.y - min_.y) / cell_)) + 1;

  std::vector<std::uint32_t> counts(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
  std::vector<std::size_t> slot(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Cell c = cell_of(points_[i]);
    slot[i] = static_cast<std::size_t>(c.cy * nx_ + c.cx);
    ++counts[slot[i] + 1];
  }
  for (std::size_t i = 1; i < counts.size(); ++i) {
    counts[i] += counts[i - 1];
  }
  starts_ = counts;
  items_.resize(points_.size());
  // Filling in index order keeps every bucket sorted ascending.
  for (std::size_t i = 0; i < points_.size(); ++i) {
    items_[counts[slot[i]]++] = static_cast<std::uint32_t>(i);
  }
}

std::span<const std::uint32_t> PointIndex::bucket(std::int64_t cx, std::int64_t cy) const {
  if (cx < 0 || cy < 0 || cx >= nx_ || cy >= ny_) {
    return {};
  }
  const auto s = static_cast<std::size_t>(cy * nx_ + cx);
  return std::span<const std::uint32_t>(items_).subspan(starts_[s], starts_[s + 1] - starts_[s]);
}

template <typename Visit>
void PointIndex::visit_ring(const Cell& c, std::int64_t k, Visit&& visit) const {
  if (k == 0) {
    for (auto i : bucket(c.cx, c.cy)) {
      visit(i);
    }
    return;
  }
  const std::int64_t x0 = c.cx - k;
  const std::int64_t x1 = c.cx + k;
  const std::int64_t y0 = c.cy - k;
  const std::int64_t y1 = c.cy + k;
  for (std::int64_t x = std::max<std::int64_t>(x0, 0); x <= std::min(x1, nx_ - 1); ++x) {
    for (auto i : bucket(x, y0)) visit(i);
    for (auto i : bucket(x, y1)) visit(i);
  }
  for (std::int64_t y = std::max<std::int64_t>(y0 + 1, 0); y <= std::min(y1 - 1, ny_ - 1); ++y) {
    for (auto i : bucket(x0, y)) visit(i);
    for (auto i : bucket(x1, y)) visit(i);
  }
}

template <typename Better>
std::optional<std::size_t> PointIndex::search(const Point2& q, Better&& better,
                                              double& best_sq) const {
  best_sq = std::numeric_limits<double>::infinity();
  if (points_.empty()) {
    return std::nullopt;
  }
  const Cell c = cell_of(q);
  // Chebyshev ring distance from the query cell to the occupied rectangle.
  const std::int64_t gx = std::max<std::int64_t>({0, -c.cx, c.cx - (nx_ - 1)});
  const std::int64_t gy = std::max<std::int64_t>({0, -c.cy, c.cy - (ny_ - 1)});
  const std::int64_t k_start = std::max(gx, gy);
  const std::int64_t k_end = std::max({std::abs(c.cx), std::abs(c.cx - (nx_ - 1)),
                                       std::abs(c.cy), std::abs(c.cy - (ny_ - 1))});
  // Distance from q to the nearest side of its own cell, so that every point
  // outside rings 0..k is at least (k + margin) cells away.
  const double fx = (q.x - min_.x) / cell_ - static_cast<double>(c.cx);
  const double fy = (q.y - min_.y) / cell_ - static_cast<double>(c.cy);
  double margin = std::min({fx, 1.0 - fx, fy, 1.0 - fy});
  if (!(margin >= 0.0 && margin <= 1.0)) {
    margin = 0.0;  // query outside the clamped cell range
  }

  std::size_t best_index = 0;
  for (std::int64_t k = k_start; k <= k_end; ++k) {
    visit_ring(c, k, [&](std::uint32_t i) {
      const Point2 d = points_[i] - q;
      const double sq = d.x * d.x + d.y * d.y;
      if (better(sq, i, best_sq, best_index)) {
        best_sq = sq;
        best_index = i;
      }
    });
    const double reach = (static_cast<double>(k) + margin) * cell_;
    if (best_sq < reach * reach) {
      break;
    }
  }
  return best_index;
}

std::optional<std::size_t> PointIndex::nearest(const Point2& q) const {
  double best_sq = 0.0;
  // Exact distances decide ties, so compare on the true metric.
  const auto i = search(
      q,
      [&](double sq, std::uint32_t i, double best, std::size_t best_index) {
        if (sq > best) {
          return false;
        }
        if (sq < best) {
          return true;
        }
        return i < best_index;
      },
      best_sq);
  return i;
}

double PointIndex::nearest_distance(const Point2& q) const {
  double best_sq = 0.0;
  search(
      q, [](double sq, std::uint32_t, double best, std::size_t) { return sq < best; }, best_sq);
  return std::sqrt(best_sq);
}

bool PointIndex::any_within(const Point2& q, double r) const {
  if (points_.empty()) {
    return false;
  }
  const Cell lo = cell_of({q.x - r, q.y - r});
  const Cell hi = cell_of({q.x + r, q.y + r});
  for (std::int64_t y = std::max<std::int64_t>(lo.cy, 0); y <= std::min(hi.cy, ny_ - 1); ++y) {
    for (std::int64_t x = std::max<std::int64_t>(lo.cx, 0); x <= std::min(hi.cx, nx_ - 1); ++x) {
      for (auto i : bucket(x, y)) {
        if (distance(points_[i], q) < r) {
          return true;
        }
      }
    }
  }
  return false;
}

void PointIndex::within(const Point2& q, double r, std::vector<std::size_t>& out,
                        bool sorted) const {
  out.clear();
  if (points_.empty()) {
    return;
  }
  const Cell lo = cell_of({q.x - r, q.y - r});
  const Cell hi = cell_of({q.x + r, q.y + r});
  for (std::int64_t y = std::max<std::int64_t>(lo.cy, 0); y <= std::min(hi.cy, ny_ - 1); ++y) {
    for (std::int64_t x = std::max<std::int64_t>(lo.cx, 0); x <= std::min(hi.cx, nx_ - 1); ++x) {
      for (auto i : bucket(x, y)) {
        if (distance(points_[i], q) <= r) {
          out.push_back(i);
        }
      }
    }
  }
  if (sorted) {
    std::sort(out.begin(), out.end());
  }
}

}  // namespace nlos
