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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coarse/graph.hpp"

namespace coarse {

/// Gromov products (x|y)_o over all vertex pairs, with respect to base o.
/// Products are half-integers; they are stored doubled so every comparison
/// stays exact: doubled(x,y) = d(x,o) + d(y,o) - d(x,y).
struct GromovTable {
  int base = 0;
  int n = 0;
  std::vector<std::int32_t> doubled;  // n x n, row-major

  std::int32_t at(int x, int y) const { return doubled[static_cast<std::size_t>(x) * n + y]; }
  double product(int x, int y) const { return at(x, y) / 2.0; }
};

GromovTable gromov_table(const DistMatrix& d, int o);

/// Sharp four-point constant with an attaining quadruple. The value is the
/// max over ordered quadruples (x,y,z,o) of min{(x|z)_o,(z|y)_o} - (x|y)_o,
/// stored doubled. exact is false when the graph was too large for the full
/// base-point sweep and a fixed-base lower bound was computed instead.
struct DeltaWitness {
  std::int32_t doubled = 0;
  std::array<int, 4> quad{0, 0, 0, 0};  // (x, y, z, o)
  bool exact = true;

  double value() const { return doubled / 2.0; }
  std::string value_str() const { return std::to_string(doubled) + "/2"; }
};

/// Exhaustive scan over all base points when order <= full_scan_limit;
/// otherwise a fixed-base lower bound (base = smallest index of maximum
/// eccentricity). Ties resolve to the lexicographically smallest quadruple.
DeltaWitness delta_four_point(const DistMatrix& d, int full_scan_limit = 400);

/// Witness for the thin-triangle (Rips) constant: a triangle, the side
/// geodesic and point on it realizing the bound, and the two opposite-side
/// geodesics whose union the point is far from. Hop distances only, so the
/// value is an integer.
struct ThinWitness {
  int value = 0;
  std::array<int, 3> corners{0, 0, 0};
  Geodesic side;        // geodesic containing the witness point
  Geodesic opposite_a;  // farthest geodesic choice for the second side
  Geodesic opposite_b;  // farthest geodesic choice for the third side
  int point = -1;       // vertex on side realizing value
  bool exact = false;   // true when no cap truncated the enumeration
};

/// Lower-bound estimate of the thin-triangle constant over an enumerated
/// triangle sample: all vertex triples when n <= 60, otherwise a
/// deterministic sample stratified by pairwise distances. Exact when neither
/// cap truncates.
ThinWitness delta_thin(const Graph& g, const DistMatrix& d,
                       std::size_t triangle_cap = 200000,
                       std::size_t geodesic_cap = 64);

}  // namespace coarse
