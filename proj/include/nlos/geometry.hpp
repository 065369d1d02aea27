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

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace nlos {

/// Planar point in the radar frame (x forward, y left, meters).
struct Point2 {
  double x{0.0};
  double y{0.0};

  constexpr Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Point2&) const = default;
};

constexpr double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point2& p) { return std::sqrt(dot(p, p)); }
inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Infinite line in normal form: n . p = rho with n = (-sin theta, cos theta).
///
/// theta is the direction angle with the +x axis, kept in [0, 180) degrees.
/// Near-vertical walls are common in the radar frame, so the slope/intercept
/// pair is only a derived view.
class LineModel {
 public:
  LineModel() = default;

  /// Normalizes theta into [0, 180), flipping the sign of rho when needed.
  static LineModel from_normal_form(double theta_deg, double rho);
  /// Line through `p` with direction angle `theta_deg`.
  static LineModel through(const Point2& p, double theta_deg);
  /// y = slope * x + intercept.
  static LineModel from_slope_intercept(double slope, double intercept);

  double theta_deg() const { return theta_deg_; }
  double rho() const { return rho_; }

  Point2 direction() const;
  Point2 normal() const;
  double signed_distance(const Point2& p) const { return dot(normal(), p) - rho_; }
  /// Coordinate of the orthogonal projection of `p` along direction().
  double along(const Point2& p) const { return dot(direction(), p); }
  /// Point on the line at coordinate `t` along direction().
  Point2 at(double t) const { return normal() * rho_ + direction() * t; }

  /// Throws DegenerateInput when theta is within 1e-6 degrees of 90.
  double slope() const;
  double intercept() const;

 private:
  LineModel(double theta_deg, double rho) : theta_deg_(theta_deg), rho_(rho) {}

  double theta_deg_{0.0};
  double rho_{0.0};
};

/// p -> R(theta) p + (tx, ty), theta in radians.
struct RigidTransform2D {
  double theta{0.0};
  double tx{0.0};
  double ty{0.0};

  Point2 apply(const Point2& p) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * p.x - s * p.y + tx, s * p.x + c * p.y + ty};
  }
  RigidTransform2D inverse() const;
  /// (*this) o other: apply `other` first.
  RigidTransform2D compose(const RigidTransform2D& other) const;
};

/// Finite wall extent. Endpoints must differ.
class Segment2 {
 public:
  Segment2(Point2 a, Point2 b);

  const Point2& a() const { return a_; }
  const Point2& b() const { return b_; }
  double length() const { return distance(a_, b_); }
  Point2 midpoint() const { return (a_ + b_) * 0.5; }
  double distance_to(const Point2& p) const;

 private:
  Point2 a_;
  Point2 b_;
};

struct WallRef {
  int id{0};
  Segment2 segment;
};

struct WallHit {
  int wall_id{0};
  Point2 point;
  double range{0.0};  ///< distance from the query origin
};

/// Orthogonal (total) least-squares line. Throws DegenerateInput for fewer
/// than two distinct points.
LineModel fit_line(std::span<const Point2> points);

/// Exact specular mirror image of `p` across `line`.
Point2 reflect_point(const Point2& p, const LineModel& line);

/// Nearest wall crossing of the segment origin -> target. Crossings within
/// 1e-9 m of the target are ignored (the target sits on that wall).
std::optional<WallHit> first_intersection(const Point2& origin, const Point2& target,
                                          std::span<const WallRef> walls);

/// True when the open segment a -> b touches no wall, ignoring contacts within
/// `end_tolerance` of either endpoint.
bool segment_clear(const Point2& a, const Point2& b, std::span<const WallRef> walls,
                   double end_tolerance = 1e-9);

std::vector<Point2> apply_rigid(const RigidTransform2D& t, std::span<const Point2> points);

/// Direction angle in [0, 180) degrees.
inline double angle_with_x_axis(const LineModel& line) { return line.theta_deg(); }

/// Rotation-invariant angle between two line directions, folded into (-90, 90].
double fold_angle_difference(double diff_deg);

}  // namespace nlos
