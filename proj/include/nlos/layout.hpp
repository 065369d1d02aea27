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

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "nlos/geometry.hpp"

namespace nlos {

/// Binary bird's-eye-view road layout: 255 = drivable, 0 = undrivable.
/// Row-major, v indexes rows (top to bottom), u indexes columns.
class OccupancyGrid {
 public:
  static constexpr std::uint8_t kDrivable = 255;
  static constexpr std::uint8_t kBlocked = 0;

  /// Throws DegenerateInput unless width, height >= 2 and every cell is 0 or 255.
  OccupancyGrid(int width, int height, std::vector<std::uint8_t> cells);
  /// Grid filled with `value`.
  OccupancyGrid(int width, int height, std::uint8_t value);

  int width() const { return width_; }
  int height() const { return height_; }
  std::uint8_t at(int u, int v) const { return cells_[index(u, v)]; }
  void set(int u, int v, std::uint8_t value);
  std::span<const std::uint8_t> cells() const { return cells_; }

  bool operator==(const OccupancyGrid&) const = default;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(u);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> cells_;
};

/// Pixel-to-radar-frame transform parameters of the layout image.
struct LayoutCalibration {
  double o_x{700.0};  ///< horizontal camera-center column
  double o_y{1399.0};  ///< bottom row
  double x_scale{53.5 / 1400.0};  ///< m / pixel
  double y_scale{33.5 / 1400.0};  ///< m / pixel
  double x_offset{22.75};
  double y_offset{-16.75};

  void validate() const;
};

struct Pixel {
  int u{0};
  int v{0};
  bool operator==(const Pixel&) const = default;
};

/// Road-boundary samples in the radar frame.
struct BoundaryPointSet {
  std::vector<Point2> points;
};

/// Reads a binary PGM (P5, maxval 255) or an ASCII '0'/'1' grid. Values >= 128
/// become drivable. Throws IoError or ParseError.
OccupancyGrid load_occupancy(const std::filesystem::path& path);
/// Parses the same formats from memory.
OccupancyGrid parse_occupancy(std::span<const char> bytes);
void write_pgm(const OccupancyGrid& grid, const std::filesystem::path& path);

/// Drivable pixels with at least one undrivable 4-neighbor, in row-major
/// order. Out-of-image neighbors count as drivable.
std::vector<Pixel> extract_edges(const OccupancyGrid& grid);

Point2 pixel_to_world(double u, double v, const LayoutCalibration& cal);
/// Inverse of pixel_to_world; returns fractional pixel coordinates.
Point2 world_to_pixel(const Point2& p, const LayoutCalibration& cal);

BoundaryPointSet pixels_to_world(std::span<const Pixel> edges, const LayoutCalibration& cal);

}  // namespace nlos
