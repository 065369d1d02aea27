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

#include "nlos/svg.hpp"

#include <fmt/format.h>

namespace nlos {

namespace {

constexpr double kPixelsPerMeter = 12.0;
constexpr double kMargin = 10.0;

class Canvas {
 public:
  Canvas(Point2 lo, Point2 hi) : lo_(lo), hi_(hi) {}

  double width() const { return (hi_.x - lo_.x) * kPixelsPerMeter + 2 * kMargin; }
  double height() const { return (hi_.y - lo_.y) * kPixelsPerMeter + 2 * kMargin; }
  // Radar x points right on the page, y points up.
  double px(const Point2& p) const { return kMargin + (p.x - lo_.x) * kPixelsPerMeter; }
  double py(const Point2& p) const { return kMargin + (hi_.y - p.y) * kPixelsPerMeter; }

  void line(const Point2& a, const Point2& b, const char* color, double w) {
    body_ += fmt::format(
        "<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"{}\" "
        "stroke-width=\"{}\"/>\n",
        px(a), py(a), px(b), py(b), color, w);
  }
  void dot(const Point2& p, double r, const char* fill) {
    body_ += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"{}\" fill=\"{}\"/>\n", px(p),
                         py(p), r, fill);
  }
  void ring(const Point2& p, double r, const char* stroke) {
    body_ += fmt::format(
        "<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"{}\" fill=\"none\" stroke=\"{}\" "
        "stroke-width=\"1.5\"/>\n",
        px(p), py(p), r, stroke);
  }
  void cross(const Point2& p, double r, const char* stroke) {
    const Point2 dx{r / kPixelsPerMeter, 0.0};
    const Point2 dy{0.0, r / kPixelsPerMeter};
    line(p - dx - dy, p + dx + dy, stroke, 2.0);
    line(p - dx + dy, p + dx - dy, stroke, 2.0);
  }
  void text(const Point2& p, const std::string& s) {
    body_ += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\">{}</text>\n", px(p),
                         py(p), s);
  }

  std::string finish() const {
    return fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
        width(), height(), body_);
  }

 private:
  Point2 lo_;
  Point2 hi_;
  std::string body_;
};

const char* wall_color(WallLabel label) {
  switch (label) {
    case WallLabel::Front:
      return "#1f77b4";
    case WallLabel::Left:
      return "#2ca02c";
    case WallLabel::Right:
      return "#d62728";
    case WallLabel::Other:
      break;
  }
  return "#9467bd";
}

}  // namespace

std::string render_svg(const Scene& scene, const RadarFrame& frame, const GroundTruthFrame& truth,
                       const FrameResult& result) {
  const auto to_radar = scene.world_to_radar();
  const Point2 c1 = to_radar.apply(scene.bound_min);
  const Point2 c2 = to_radar.apply(scene.bound_max);
  Canvas canvas({std::min(c1.x, c2.x), std::min(c1.y, c2.y)},
                {std::max(c1.x, c2.x), std::max(c1.y, c2.y)});

  for (const auto& w : scene.radar_walls()) {
    canvas.line(w.segment.a(), w.segment.b(), "#bbbbbb", 5.0);
  }
  if (result.walls) {
    for (const auto& w : result.walls->walls) {
      canvas.line(w.extent.a(), w.extent.b(), wall_color(w.label), 2.0);
    }
  }
  for (const auto& p : frame.points) {
    canvas.dot(p.position, p.dynamic ? 2.5 : 1.5, p.dynamic ? "#ff7f0e" : "#555555");
  }
  for (const auto& p : truth.pedestrians) {
    canvas.ring(p.position, 6.0, "#2ca02c");
  }
  for (const auto& e : result.estimates) {
    canvas.cross(e.position, 5.0, "#d62728");
  }
  canvas.dot({0.0, 0.0}, 4.0, "black");
  canvas.text({c1.x + 0.5, std::max(c1.y, c2.y) - 1.0},
              fmt::format("{} frame {}", scene.name, frame.frame_id));
  return canvas.finish();
}

}  // namespace nlos
