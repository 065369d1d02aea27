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

#include "nlos/clustering.hpp"

#include <deque>

#include "nlos/errors.hpp"
#include "nlos/point_index.hpp"

namespace nlos {

void DbscanParams::validate() const {
  if (!(eps > 0.0)) {
    throw DegenerateInput("dbscan eps must be positive");
  }
  if (min_pts < 1) {
    throw DegenerateInput("dbscan min_pts must be at least 1");
  }
}

std::vector<std::vector<std::size_t>> ClusterLabeling::members() const {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != kNoise) {
      out[static_cast<std::size_t>(labels[i])].push_back(i);
    }
  }
  return out;
}

ClusterLabeling dbscan(std::span<const Point2> points, const DbscanParams& params) {
  params.validate();
  constexpr int kUnvisited = -2;

  ClusterLabeling result;
  result.labels.assign(points.size(), kUnvisited);
  result.core.assign(points.size(), false);
  if (points.empty()) {
    return result;
  }

  const PointIndex index(points, params.eps);
  const auto min_pts = static_cast<std::size_t>(params.min_pts);
  std::vector<std::size_t> neighbors;
  std::deque<std::size_t> frontier;

  int cluster = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (result.labels[i] != kUnvisited) {
      continue;
    }
    index.within(points[i], params.eps, neighbors, false);
    if (neighbors.size() < min_pts) {
      result.labels[i] = ClusterLabeling::kNoise;
      continue;
    }
    // Points are labeled when queued, so each enters the frontier once.
    result.labels[i] = cluster;
    result.core[i] = true;
    frontier.clear();
    auto claim = [&](std::size_t j) {
      if (result.labels[j] == kUnvisited) {
        result.labels[j] = cluster;
        frontier.push_back(j);
      } else if (result.labels[j] == ClusterLabeling::kNoise) {
        result.labels[j] = cluster;  // border point, never expanded
      }
    };
    for (auto j : neighbors) {
      claim(j);
    }
    while (!frontier.empty()) {
      const std::size_t j = frontier.front();
      frontier.pop_front();
      index.within(points[j], params.eps, neighbors, false);
      if (neighbors.size() >= min_pts) {
        result.core[j] = true;
        for (auto n : neighbors) {
          claim(n);
        }
      }
    }
    ++cluster;
  }
  result.k = cluster;
  return result;
}

}  // namespace nlos
