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

#include <span>
#include <vector>

#include "coarse/graph.hpp"
#include "coarse/rational.hpp"

namespace coarse {

/// Exterior vertex boundary of A in the ambient graph:
/// all v outside A at hop distance exactly 1 from A. A must be nonempty.
std::vector<int> boundary_of(const Graph& g, std::span<const int> a);

/// Search region for candidate sets inside an ambient graph. Simulates a
/// finite subset of an infinite graph inside a larger truncation: candidate
/// sets live in the window, their boundaries are measured in the ambient
/// graph.
struct Window {
  const Graph* ambient = nullptr;
  std::vector<int> vertices;  // sorted ascending, nonempty
};

Window make_ball_window(const Graph& g, int center, int radius);

/// A candidate set with its exterior boundary and exact isoperimetric
/// ratio. exact marks a window optimum (vs. a certified upper bound).
struct CheegerWitness {
  std::vector<int> set;       // sorted
  std::vector<int> boundary;  // sorted
  Rational ratio;             // |boundary| / |set|
  bool exact = false;
};

/// Exact minimizer of |boundary(A)| / |A| over nonempty A inside the window
/// with |A| <= size_cap (size_cap < 0 means no cap). Windows are limited to
/// 24 vertices so the subset enumeration stays below 2^24; larger windows
/// raise capacity_exceeded and should go through cheeger_upper_bounds.
/// Ties resolve to the lexicographically smallest set.
CheegerWitness cheeger_exact_window(const Window& w, int size_cap = -1);

enum class CandidateFamily { balls, segments, teeth };

/// Best (smallest-ratio) witness over a structured candidate family:
///  - balls: closed balls B(v,k) for every center, k up to radius_budget
///    (default: eccentricity - 1),
///  - segments: the lexicographically first geodesic of every vertex pair,
///  - teeth: bridge sides (components hanging off a bridge edge).
/// Always flagged as an upper bound.
CheegerWitness cheeger_upper_bounds(const Graph& g, CandidateFamily family,
                                    int radius_budget = -1);

enum class ProfileMethod { automatic, exact_only, upper_only };

struct ProfilePoint {
  int radius = 0;
  Rational ratio;
  bool exact = false;
  int witness_size = 0;
};

/// Best witness ratio per window B(v, r) over increasing radii. Windows of
/// at most 24 vertices are solved exactly; larger ones fall back to
/// center-ball and bridge-side upper bounds inside the window. Every radius
/// must keep a one-vertex margin inside the truncation (r + 1 <= ecc(v)).
std::vector<ProfilePoint> cheeger_profile(const Graph& g, int v,
                                          std::span<const int> radii,
                                          ProfileMethod method = ProfileMethod::automatic);

enum class ProfileTrend { bounded_below, decaying };

/// Empirical trend rule for finite data: decaying iff the last ratio fell
/// to half of the first or less.
ProfileTrend classify_profile(std::span<const ProfilePoint> profile);

/// Smallest Dirichlet eigenvalue of the window Laplacian
///   (L f)(v) = deg_ambient(v) f(v) - sum over w ~ v, w in W of f(w),
/// via inverse power iteration (all-ones start, conjugate-gradient solves).
struct SpectralReport {
  double lambda1 = 0.0;
  int iterations = 0;
  double residual = 0.0;
  double tolerance = 0.0;
};

SpectralReport dirichlet_lambda1(const Window& w, double tolerance = 1e-10);

}  // namespace coarse
