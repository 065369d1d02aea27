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

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>

namespace nlos {

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x{};
  double value{0.0};
  int iterations{0};
  bool converged{false};
};

/// Downhill simplex minimization with the classic coefficients
/// (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
///
/// The initial simplex is `x0` plus one vertex per axis offset by `steps[i]`.
/// Stops when max - min over the simplex drops below `f_tolerance`, or after
/// `max_iterations` iterations.
template <std::size_t N, typename F>
NelderMeadResult<N> nelder_mead(F&& f, const std::array<double, N>& x0,
                                const std::array<double, N>& steps, double f_tolerance,
                                int max_iterations) {
  using Vec = std::array<double, N>;
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  std::array<Vec, N + 1> simplex;
  std::array<double, N + 1> values;
  simplex[0] = x0;
  for (std::size_t i = 0; i < N; ++i) {
    simplex[i + 1] = x0;
    simplex[i + 1][i] += steps[i];
  }
  for (std::size_t i = 0; i <= N; ++i) {
    values[i] = f(simplex[i]);
  }

  auto along = [](const Vec& from, const Vec& to, double t) {
    Vec out;
    for (std::size_t i = 0; i < N; ++i) {
      out[i] = from[i] + t * (to[i] - from[i]);
    }
    return out;
  };

  std::array<std::size_t, N + 1> order;
  NelderMeadResult<N> result;
  int iteration = 0;
  for (;;) {
    // Stable sort keeps the earlier vertex first on ties.
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[N - 1];

    if (values[worst] - values[best] < f_tolerance) {
      result.converged = true;
      break;
    }
    if (iteration >= max_iterations) {
      break;
    }
    ++iteration;

    Vec centroid{};
    for (std::size_t k = 0; k < N; ++k) {
      const Vec& v = simplex[order[k]];
      for (std::size_t i = 0; i < N; ++i) {
        centroid[i] += v[i] / static_cast<double>(N);
      }
    }

    const Vec reflected = along(centroid, simplex[worst], -kReflect);
    const double f_reflected = f(reflected);

    if (f_reflected < values[best]) {
      const Vec expanded = along(centroid, simplex[worst], -kReflect * kExpand);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    bool accepted = false;
    if (f_reflected < values[worst]) {
      const Vec outside = along(centroid, reflected, kContract);
      const double f_outside = f(outside);
      if (f_outside <= f_reflected) {
        simplex[worst] = outside;
        values[worst] = f_outside;
        accepted = true;
      }
    } else {
      const Vec inside = along(centroid, simplex[worst], kContract);
      const double f_inside = f(inside);
      if (f_inside < values[worst]) {
        simplex[worst] = inside;
        values[worst] = f_inside;
        accepted = true;
      }
    }
    if (!accepted) {
      for (std::size_t k = 1; k <= N; ++k) {
        const std::size_t idx = order[k];
        simplex[idx] = along(simplex[best], simplex[idx], kShrink);
        values[idx] = f(simplex[idx]);
      }
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best_idx = static_cast<std::size_t>(best_it - values.begin());
  result.x = simplex[best_idx];
  result.value = *best_it;
  result.iterations = iteration;
  return result;
}

}  // namespace nlos
