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

#include <span>
#include <vector>

#include "nlos/geometry.hpp"

namespace nlos {

struct DbscanParams {
  double eps{1.0};  ///< closed neighborhood radius, meters
  int min_pts{5};   ///< core threshold; the neighborhood includes the point itself

  void validate() const;
};

/// Per-point cluster ids. Ids are contiguous from 0 in order of each cluster's
/// lowest-index core point; kNoise marks noise.
struct ClusterLabeling {
  static constexpr int kNoise = -1;

  std::vector<int> labels;
  int k{0};
  std::vector<bool> core{};  ///< filled by dbscan, may be empty elsewhere

  /// Point indices grouped by cluster id.
  std::vector<std::vector<std::size_t>> members() const;
};

/// Deterministic DBSCAN with Euclidean distance and index-ordered expansion.
/// Border points join the lowest-id cluster whose core reaches them.
ClusterLabeling dbscan(std::span<const Point2> points, const DbscanParams& params);

}  // namespace nlos
