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
#include <optional>
#include <span>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/rational.hpp"

namespace coarse {

/// Union of the geodesics from v to the truncation sphere S(v, r): w belongs
/// iff d(v,w) + d(w,s) = r for some s in S(v,r). Exact membership via the
/// distance-sum certificate; no geodesic enumeration.
struct RayHull {
  int base = 0;
  int radius = 0;
  std::vector<int> members;           // sorted ascending
  std::vector<std::uint8_t> in_hull;  // indicator over all vertices
};

RayHull ray_hull(const Graph& g, const DistMatrix& d, int v, int r);

/// Max over the buffered ball B(v, r - buffer) of the hop distance to the
/// hull. Interior points far from every truncated ray witness the absence
/// of a pole.
int pole_margin(const Graph& g, const DistMatrix& d, const RayHull& hull, int buffer);

/// Finite-data decision: pole-like iff the margin series stabilized (last
/// three margins equal); the estimate is the stabilized value. Otherwise
/// no-pole-like, with the overall growth slope reported.
struct PoleVerdict {
  bool pole_like = false;
  int m_estimate = 0;
  double growth_slope = 0.0;
};

PoleVerdict pole_verdict(std::span<const int> radii, std::span<const int> margins);

/// Margin series over increasing truncation radii from base v, with the
/// default buffer r/4 (buffer >= 0 overrides). Requires at least 3 radii,
/// each with a nonempty sphere.
struct PoleReport {
  int base = 0;
  std::vector<int> radii;
  std::vector<int> margins;
  std::vector<int> buffers;
  PoleVerdict verdict;
};

PoleReport pole_report(const Graph& g, const DistMatrix& d, int v,
                       std::span<const int> radii, int buffer = -1);

/// M = floor(delta_th) + h^-1 * mu^floor(delta_th), the explicit pole bound
/// for a uniform graph with positive Cheeger constant. Requires h > 0.
struct TheoremBound {
  double delta_th = 0.0;
  Rational h;
  long long mu = 1;
  Rational bound;
};

TheoremBound theorem_bound(double delta_th, Rational h, long long mu);

}  // namespace coarse
