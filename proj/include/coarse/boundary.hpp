// Copyright 2026 The Coarse Authors
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
#include <span>
#include <vector>

#include "coarse/graph.hpp"

namespace coarse {

/// Vertices at hop distance exactly r from o, sorted ascending. These deep
/// sphere vertices stand in for boundary-at-infinity points at finite depth.
std::vector<int> boundary_points(const DistMatrix& d, int o, int r);

/// Finite-depth boundary model: the depth-r sphere representatives, their
/// pairwise Gromov products with respect to the base, and the visual
/// distance matrix d_a(x, y) = a^{-(x|y)_o} with zero diagonal. Two
/// representatives are never merged; the finite-depth error scale a^{-r}
/// is reported alongside.
struct BoundaryApprox {
  int base = 0;
  int depth = 0;
  double a = 2.0;
  std::vector<int> representatives;
  std::vector<std::int32_t> doubled_products;  // m x m, doubled half-integers
  std::vector<double> visual;                  // m x m, 0 on the diagonal
  double depth_error = 0.0;                    // a^{-depth}
};

BoundaryApprox boundary_approx(const DistMatrix& d, int o, int r, double a);

/// Visual distances a^{-product} from a doubled-product table (m x m);
/// requires a > 1. Exact powers of two are used when a == 2 and the product
/// is an integer, so dyadic scale ratios stay exact.
std::vector<double> visual_metric(std::span<const std::int32_t> doubled, int m, double a);

/// Uniform perfectness scan of a finite metric: for each point, sort its
/// distinct distance values within eps0; the minimal annulus constant at
/// that point is the largest consecutive ratio. A point with fewer than two
/// scales admits no finite constant down to the resolution floor and
/// reports infinity.
struct PerfectnessReport {
  double s_star = 0.0;            // +inf when not uniformly perfect at this depth
  bool uniformly_perfect = false; // s_star finite
  bool degenerate = false;        // fewer than two points
  double resolution = 0.0;        // smallest off-diagonal distance
  double eps0 = 0.0;
  std::vector<double> per_point;  // per-point minimal constants
};

/// dist: m x m symmetric matrix with zero diagonal. eps0 <= 0 selects the
/// default (the largest off-diagonal distance).
PerfectnessReport uniform_perfectness_scan(std::span<const double> dist, int m,
                                           double eps0 = 0.0);

}  // namespace coarse
