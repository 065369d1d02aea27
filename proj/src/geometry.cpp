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

#include "nlos/geometry.hpp"

#include <algorithm>
#include <limits>

#include "nlos/errors.hpp"

namespace nlos {

namespace {

constexpr double kVerticalToleranceDeg = 1e-6;
constexpr double kTargetExclusion = 1e-9;
constexpr double kParamSlack = 1e-12;

double normalize_theta(double theta_deg, double& rho) {
  double t = std::fmod(theta_deg, 360.0);
  if (t < 0.0) {
    t += 360.0;
  }
  if (t >= 180.0) {
    t -= 180.0;
    rho = -rho;
  }
  // fmod can land exactly on 180 after the subtraction above for tiny negatives.
  if (t >= 180.0) {
    t = 0.0;
  }
  return t;
}

struct Crossing {
  double t;  // along the query segment, [0, 1]
  Point2 point;
};

std::optional<Crossing> cross_segment(const Point2& o, const Point2& r, const Segment2& wall) {
  const Point2 s = wall.b() - wall.a();
  const double denom = cross(r, s);
  const double scale = norm(r) * norm(s);
  if (std::abs(denom) <= 1e-15 * scale) {
    return std::nullopt;  // parallel or collinear: grazing contact is not a crossing
  }
  const Point2 ao = wall.a() - o;
  const double t = cross(ao, s) / denom;
  const double u = cross(ao, r) / denom;
  if (t < 0.0 || t > 1.0 || u < -kParamSlack || u > 1.0 + kParamSlack) {
    return std::nullopt;
  }
  return Crossing{t, o + r * t};
}

}  // namespace

LineModel LineModel::from_normal_form(double theta_deg, double rho) {
  const double t = normalize_theta(theta_deg, rho);
  return LineModel(t, rho);
}

LineModel LineModel::through(const Point2& p, double theta_deg) {
  const double rad = deg_to_rad(theta_deg);
  const Point2 n{-std::sin(rad), std::cos(rad)};
  return from_normal_form(theta_deg, dot(n, p));
}

LineModel LineModel::from_slope_intercept(double slope, double intercept) {
  return through({0.0, intercept}, rad_to_deg(std::atan(slope)));
}

Point2 LineModel::direction() const {
  const double rad = deg_to_rad(theta_deg_);
  return {std::cos(rad), std::sin(rad)};
}

Point2 LineModel::normal() const {
  const double rad = deg_to_rad(theta_deg_);
  return {-std::sin(rad), std::cos(rad)};
}

double LineModel::slope() const {
  if (std::abs(theta_deg_ - 90.0) < kVerticalToleranceDeg) {
    throw DegenerateInput("line is vertical; slope is undefined");
  }
  return std::tan(deg_to_rad(theta_deg_));
}

double LineModel::intercept() const {
  if (std::abs(theta_deg_ - 90.0) < kVerticalToleranceDeg) {
    throw DegenerateInput("line is vertical; intercept is undefined");
  }
  return rho_ / std::cos(deg_to_rad(theta_deg_));
}

RigidTransform2D RigidTransform2D::inverse() const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // R^T (p - t)
  return {-theta, -(c * tx + s * ty), -(-s * tx + c * ty)};
}

RigidTransform2D RigidTransform2D::compose(const RigidTransform2D& other) const {
  const Point2 t = apply({other.tx, other.ty});
  return {theta + other.theta, t.x, t.y};
}

Segment2::Segment2(Point2 a, Point2 b) : a_(a), b_(b) {
  if (!(distance(a_, b_) > 0.0)) {
    throw DegenerateInput("segment endpoints coincide");
  }
}

double Segment2::distance_to(const Point2& p) const {
  const Point2 d = b_ - a_;
  const double t = std::clamp(dot(p - a_, d) / dot(d, d), 0.0, 1.0);
  return distance(p, a_ + d * t);
}

LineModel fit_line(std::span<const Point2> points) {
  if (points.size() < 2) {
    throw DegenerateInput("line fit needs at least two points");
  }
  const bool distinct = std::any_of(points.begin() + 1, points.end(),
                                    [&](const Point2& p) { return !(p == points.front()); });
  if (!distinct) {
    throw DegenerateInput("line fit needs at least two distinct points");
  }

  Point2 c{};
  for (const auto& p : points) {
    c = c + p;
  }
  c = c * (1.0 / static_cast<double>(points.size()));

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (const auto& p : points) {
    const Point2 d = p - c;
    sxx += d.x * d.x;
    syy += d.y * d.y;
    sxy += d.x * d.y;
  }
  // Major axis of the scatter matrix.
  const double phi = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
  return LineModel::through(c, rad_to_deg(phi));
}

Point2 reflect_point(const Point2& p, const LineModel& line) {
  const double d = line.signed_distance(p);
  return p - line.normal() * (2.0 * d);
}

std::optional<WallHit> first_intersection(const Point2& origin, const Point2& target,
                                          std::span<const WallRef> walls) {
  const Point2 r = target - origin;
  std::optional<WallHit> best;
  for (const auto& wall : walls) {
    const auto hit = cross_segment(origin, r, wall.segment);
    if (!hit || distance(hit->point, target) < kTargetExclusion) {
      continue;
    }
    const double range = distance(origin, hit->point);
    if (!best || range < best->range) {
      best = WallHit{wall.id, hit->point, range};
    }
  }
  return best;
}

bool segment_clear(const Point2& a, const Point2& b, std::span<const WallRef> walls,
                   double end_tolerance) {
  const Point2 r = b - a;
  for (const auto& wall : walls) {
    const auto hit = cross_segment(a, r, wall.segment);
    if (hit && distance(hit->point, a) >= end_tolerance &&
        distance(hit->point, b) >= end_tolerance) {
      return false;
    }
  }
  return true;
}

std::vector<Point2> apply_rigid(const RigidTransform2D& t, std::span<const Point2> points) {
  const double c = std::cos(t.theta);
  const double s = std::sin(t.theta);
  std::vector<Point2> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    out.push_back({c * p.x - s * p.y + t.tx, s * p.x + c * p.y + t.ty});
  }
  return out;
}

double fold_angle_difference(double diff_deg) {
  double d = std::fmod(diff_deg, 180.0);
  if (d > 90.0) {
    d -= 180.0;
  } else if (d <= -90.0) {
    d += 180.0;
  }
  return d;
}

}  // namespace nlos
