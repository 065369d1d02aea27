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

#include "nlos/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>

#include "nlos/errors.hpp"

namespace nlos {

namespace {

struct Mean {
  double sum{0.0};
  int n{0};

  void add(double v) {
    sum += v;
    ++n;
  }
  std::optional<double> value() const {
    return n > 0 ? std::optional<double>(sum / n) : std::nullopt;
  }
};

std::string field(const std::optional<double>& v) {
  return v ? fmt::format("{:.2f}", *v) : std::string();
}

}  // namespace

AngularReport angular_from_angles(double front, std::optional<double> right,
                                  std::optional<double> left) {
  AngularReport out;
  if (right) {
    out.f_r = std::abs(fold_angle_difference(front - *right));
  }
  if (left) {
    out.f_l = std::abs(fold_angle_difference(front - *left));
  }
  return out;
}

AngularReport angular_differences(const SpatialConfiguration& config) {
  const Wall* front = config.find(WallLabel::Front);
  if (front == nullptr) {
    throw MissingFrontWall("no wall labeled front");
  }
  auto angle = [&](WallLabel label) -> std::optional<double> {
    const Wall* w = config.find(label);
    return w ? std::optional<double>(angle_with_x_axis(w->line)) : std::nullopt;
  };
  return angular_from_angles(angle_with_x_axis(front->line), angle(WallLabel::Right),
                             angle(WallLabel::Left));
}

AngularReport angular_differences(std::span<const TrueWall> walls) {
  auto angle = [&](WallLabel label) -> std::optional<double> {
    for (const auto& w : walls) {
      if (w.label == label) {
        return angle_with_x_axis(w.line);
      }
    }
    return std::nullopt;
  };
  const auto front = angle(WallLabel::Front);
  if (!front) {
    throw MissingFrontWall("no wall labeled front");
  }
  return angular_from_angles(*front, angle(WallLabel::Right), angle(WallLabel::Left));
}

FrameError absolute_error(std::span<const PedestrianEstimate> preds, const GroundTruthFrame& gt) {
  FrameError out;
  out.frame_id = gt.frame_id;
  out.missed = preds.empty();
  std::vector<bool> matched(gt.pedestrians.size(), false);
  Mean nlos;
  Mean los;
  Mean all;
  for (const auto& pred : preds) {
    std::size_t best = gt.pedestrians.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < gt.pedestrians.size(); ++i) {
      const double d = distance(pred.position, gt.pedestrians[i].position);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best == gt.pedestrians.size()) {
      continue;
    }
    matched[best] = true;
    out.per_prediction.push_back(best_d);
    all.add(best_d);
    (gt.pedestrians[best].regime == Regime::NLoS ? nlos : los).add(best_d);
  }
  out.nlos = nlos.value();
  out.los = los.value();
  out.avg = all.value();
  out.missed_pedestrians =
      static_cast<int>(std::count(matched.begin(), matched.end(), false));
  return out;
}

EvaluationReport aggregate_report(std::string scenario, std::span<const FrameError> frames,
                                  std::span<const std::optional<AngularReport>> angular,
                                  const AngularReport& truth) {
  if (frames.empty()) {
    throw EmptyInput("no frames to aggregate");
  }
  EvaluationReport out;
  out.scenario = std::move(scenario);
  out.frames = static_cast<int>(frames.size());
  out.truth = truth;

  Mean nlos;
  Mean los;
  Mean avg;
  for (const auto& f : frames) {
    if (f.nlos) nlos.add(*f.nlos);
    if (f.los) los.add(*f.los);
    if (f.avg) avg.add(*f.avg);
    out.missed_frames += f.missed ? 1 : 0;
    out.missed_pedestrians += f.missed_pedestrians;
  }
  out.ae_nlos = nlos.value();
  out.ae_los = los.value();
  out.ae_avg = avg.value();

  Mean fr;
  Mean fl;
  Mean err;
  for (const auto& a : angular) {
    if (!a) {
      continue;
    }
    if (a->f_r) {
      fr.add(*a->f_r);
      if (truth.f_r) err.add(std::abs(*a->f_r - *truth.f_r));
    }
    if (a->f_l) {
      fl.add(*a->f_l);
      if (truth.f_l) err.add(std::abs(*a->f_l - *truth.f_l));
    }
  }
  out.f_r = fr.value();
  out.f_l = fl.value();
  out.mean_angular_error = err.value();

  std::optional<double> worst;
  if (out.f_r && truth.f_r) {
    worst = std::abs(*out.f_r - *truth.f_r);
  }
  if (out.f_l && truth.f_l) {
    const double d = std::abs(*out.f_l - *truth.f_l);
    worst = worst ? std::max(*worst, d) : d;
  }
  out.max_diff = worst;
  return out;
}

std::string csv_row(const EvaluationReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{}", r.scenario, field(r.f_r), field(r.f_l),
                     field(r.max_diff), field(r.ae_nlos), field(r.ae_los), field(r.ae_avg),
                     r.missed_frames);
}

void write_csv(std::ostream& out, std::span<const EvaluationReport> reports) {
  out << kCsvHeader << '\n';
  for (const auto& r : reports) {
    out << csv_row(r) << '\n';
  }
}

}  // namespace nlos
