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

#include "nlos/layout.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "nlos/errors.hpp"

namespace nlos {

namespace {

constexpr std::uint8_t threshold(unsigned value) {
  return value >= 128 ? OccupancyGrid::kDrivable : OccupancyGrid::kBlocked;
}

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const char> bytes) : bytes_(bytes) {}

  // Next whitespace-delimited token, skipping '#' comments.
  std::string token() {
    skip_space_and_comments();
    std::string out;
    while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      if (bytes_[pos_] == '#') {
        break;
      }
      out.push_back(bytes_[pos_++]);
    }
    if (out.empty()) {
      throw ParseError("PGM header ended early");
    }
    return out;
  }

  int integer() {
    const std::string t = token();
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw ParseError("PGM header field is not an integer: '" + t + "'");
    }
    if (used != t.size()) {
      throw ParseError("PGM header field is not an integer: '" + t + "'");
    }
    return value;
  }

  // The raster starts after exactly one whitespace byte.
  std::size_t payload_start() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw ParseError("PGM header not terminated by whitespace");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
          ++pos_;
        }
      } else if (std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::span<const char> bytes_;
  std::size_t pos_{0};
};

OccupancyGrid parse_pgm(std::span<const char> bytes) {
  HeaderReader reader(bytes);
  if (reader.token() != "P5") {
    throw ParseError("not a binary PGM");
  }
  const int width = reader.integer();
  const int height = reader.integer();
  const int maxval = reader.integer();
  if (width < 2 || height < 2) {
    throw ParseError("PGM dimensions must be at least 2x2");
  }
  if (maxval != 255) {
    throw ParseError("PGM maxval must be 255, got " + std::to_string(maxval));
  }
  const std::size_t start = reader.payload_start();
  const std::size_t expected = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (bytes.size() - start < expected) {
    throw ParseError("PGM payload truncated: expected " + std::to_string(expected) +
                     " bytes, got " + std::to_string(bytes.size() - start));
  }
  if (bytes.size() - start > expected) {
    throw ParseError("PGM payload has trailing data");
  }
  std::vector<std::uint8_t> cells(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    cells[i] = threshold(static_cast<unsigned char>(bytes[start + i]));
  }
  return OccupancyGrid(width, height, std::move(cells));
}

OccupancyGrid parse_ascii(std::span<const char> bytes) {
  std::vector<std::uint8_t> cells;
  int width = -1;
  int height = 0;
  int line_no = 0;
  std::string line;
  auto flush = [&]() {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      return;
    }
    if (width >= 0 && static_cast<int>(line.size()) != width) {
      throw ParseError("ASCII grid rows differ in length", line_no);
    }
    width = static_cast<int>(line.size());
    for (char c : line) {
      if (c != '0' && c != '1') {
        throw ParseError(std::string("unexpected character '") + c + "' in ASCII grid", line_no);
      }
      cells.push_back(c == '1' ? OccupancyGrid::kDrivable : OccupancyGrid::kBlocked);
    }
    ++height;
    line.clear();
  };
  for (char c : bytes) {
    if (c == '\n') {
      flush();
    } else {
      line.push_back(c);
    }
  }
  if (!line.empty()) {
    flush();
  }
  if (width < 2 || height < 2) {
    throw ParseError("ASCII grid must be at least 2x2");
  }
  return OccupancyGrid(width, height, std::move(cells));
}

}  // namespace

OccupancyGrid::OccupancyGrid(int width, int height, std::vector<std::uint8_t> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
  if (width_ < 2 || height_ < 2) {
    throw DegenerateInput("occupancy grid must be at least 2x2");
  }
  if (cells_.size() != static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_)) {
    throw DegenerateInput("occupancy grid cell count does not match its dimensions");
  }
  for (auto c : cells_) {
    if (c != kDrivable && c != kBlocked) {
      throw DegenerateInput("occupancy grid cells must be 0 or 255");
    }
  }
}

OccupancyGrid::OccupancyGrid(int width, int height, std::uint8_t value)
    : OccupancyGrid(width, height,
                    std::vector<std::uint8_t>(static_cast<std::size_t>(std::max(width, 0)) *
                                                  static_cast<std::size_t>(std::max(height, 0)),
                                              value)) {}

void OccupancyGrid::set(int u, int v, std::uint8_t value) {
  if (value != kDrivable && value != kBlocked) {
    throw DegenerateInput("occupancy grid cells must be 0 or 255");
  }
  cells_[index(u, v)] = value;
}

void LayoutCalibration::validate() const {
  if (!(x_scale > 0.0) || !(y_scale > 0.0)) {
    throw DegenerateInput("layout scales must be positive");
  }
}

OccupancyGrid parse_occupancy(std::span<const char> bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') {
    return parse_pgm(bytes);
  }
  return parse_ascii(bytes);
}

OccupancyGrid load_occupancy(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open layout file " + path.string());
  }
  const std::vector<char> bytes((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("failed reading layout file " + path.string());
  }
  return parse_occupancy(bytes);
}

void write_pgm(const OccupancyGrid& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << "P5\n" << grid.width() << ' ' << grid.height() << "\n255\n";
  const auto cells = grid.cells();
  out.write(reinterpret_cast<const char*>(cells.data()),
            static_cast<std::streamsize>(cells.size()));
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

std::vector<Pixel> extract_edges(const OccupancyGrid& grid) {
  const int w = grid.width();
  const int h = grid.height();
  auto blocked = [&](int u, int v) {
    if (u < 0 || v < 0 || u >= w || v >= h) {
      return false;
    }
    return grid.at(u, v) == OccupancyGrid::kBlocked;
  };
  std::vector<Pixel> edges;
  for (int v = 0; v < h; ++v) {
    for (int u = 0; u < w; ++u) {
      if (grid.at(u, v) != OccupancyGrid::kDrivable) {
        continue;
      }
      if (blocked(u - 1, v) || blocked(u + 1, v) || blocked(u, v - 1) || blocked(u, v + 1)) {
        edges.push_back({u, v});
      }
    }
  }
  return edges;
}

Point2 pixel_to_world(double u, double v, const LayoutCalibration& cal) {
  return {(u - cal.o_x) * cal.x_scale + cal.x_offset, (cal.o_y - v) * cal.y_scale + cal.y_offset};
}

Point2 world_to_pixel(const Point2& p, const LayoutCalibration& cal) {
  return {(p.x - cal.x_offset) / cal.x_scale + cal.o_x,
          cal.o_y - (p.y - cal.y_offset) / cal.y_scale};
}

BoundaryPointSet pixels_to_world(std::span<const Pixel> edges, const LayoutCalibration& cal) {
  BoundaryPointSet out;
  out.points.reserve(edges.size());
  for (const auto& px : edges) {
    out.points.push_back(pixel_to_world(px.u, px.v, cal));
  }
  return out;
}

}  // namespace nlos
