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

#include "nlos/geometry.hpp"
#include "nlos/layout.hpp"

namespace nlos {

struct NelderMeadOptions {
  double initial_step_angle{0.1};  ///< radians, simplex offset on theta
  double initial_step_trans{0.5};  ///< meters, simplex offset on tx and ty
  double f_tolerance{1e-6};
  int max_iterations{500};

  void validate() const;
};

struct AlignmentResult {
  RigidTransform2D transform;
  BoundaryPointSet aligned;
  double cost{0.0};
  double identity_cost{0.0};
  int iterations{0};
};

/// Boundary points closer than `epsilon` (strict) to some static point, in
/// input order. Empty when `statics` is empty.
BoundaryPointSet select_near(const BoundaryPointSet& boundary, std::span<const Point2> statics,
                             double epsilon);

/// Sum over boundary points w of min over statics s of |s - t(w)|.
/// Throws EmptyInput if either set is empty.
double alignment_cost(const RigidTransform2D& t, const BoundaryPointSet& near,
                      std::span<const Point2> statics);

/// Rigidly aligns `near` onto `statics` by Nelder-Mead over (theta, tx, ty),
/// starting from the identity. The returned cost never exceeds the identity cost.
AlignmentResult align(const BoundaryPointSet& near, std::span<const Point2> statics,
                      const NelderMeadOptions& opts);

}  // namespace nlos
