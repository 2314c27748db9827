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

#include "coarse/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coarse/error.hpp"
#include "coarse/parallel.hpp"

namespace coarse {

namespace {
constexpr const char* kModule = "boundary";

// a^(-doubled/2); exact ldexp when that is a power of two.
double visual_value(double a, std::int32_t doubled) {
  if (a == 2.0 && doubled % 2 == 0) return std::ldexp(1.0, -doubled / 2);
  return std::pow(a, -0.5 * static_cast<double>(doubled));
}

}  // namespace

std::vector<int> boundary_points(const DistMatrix& d, int o, int r) {
  if (o < 0 || o >= d.order() || r < 0) {
    raise(errc::invalid_argument, kModule, "base point or depth out of range");
  }
  std::vector<int> reps = d.sphere(o, r);
  if (reps.empty()) {
    raise(errc::empty_sphere, kModule,
          "no vertices at distance " + std::to_string(r) + " from base " + std::to_string(o));
  }
  return reps;
}

std::vector<double> visual_metric(std::span<const std::int32_t> doubled, int m, double a) {
  if (a <= 1.0 || !std::isfinite(a)) {
    raise(errc::invalid_argument, kModule, "visual parameter must satisfy a > 1");
  }
  if (m < 1 || doubled.size() != static_cast<std::size_t>(m) * m) {
    raise(errc::invalid_argument, kModule, "product table must be m x m");
  }
  std::vector<double> out(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j) out[static_cast<std::size_t>(i) * m + j] =
          visual_value(a, doubled[static_cast<std::size_t>(i) * m + j]);
    }
  }
  return out;
}

BoundaryApprox boundary_approx(const DistMatrix& d, int o, int r, double a) {
  BoundaryApprox out;
  out.base = o;
  out.depth = r;
  out.a = a;
  out.representatives = boundary_points(d, o, r);
  const int m = static_cast<int>(out.representatives.size());
  out.doubled_products.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    int x = out.representatives[i];
    for (int j = 0; j < m; ++j) {
      int y = out.representatives[j];
      // All representatives sit at distance r from o.
      out.doubled_products[static_cast<std::size_t>(i) * m + j] = 2 * r - d(x, y);
    }
  }
  out.visual = visual_metric(out.doubled_products, m, a);
  out.depth_error = visual_value(a, 2 * r);
  return out;
}

PerfectnessReport uniform_perfectness_scan(std::span<const double> dist, int m, double eps0) {
  if (m < 1 || dist.size() != static_cast<std::size_t>(m) * m) {
    raise(errc::invalid_argument, kModule, "distance matrix must be m x m");
  }
  PerfectnessReport out;
  const double inf = std::numeric_limits<double>::infinity();

  double max_off = 0.0, min_off = inf;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      max_off = std::max(max_off, dist[static_cast<std::size_t>(i) * m + j]);
      min_off = std::min(min_off, dist[static_cast<std::size_t>(i) * m + j]);
    }
  }
  out.eps0 = eps0 > 0 ? eps0 : max_off;
  out.resolution = (m > 1) ? min_off : 0.0;

  if (m == 1) {
    out.degenerate = true;
    out.s_star = inf;
    out.per_point = {inf};
    return out;
  }

  out.per_point.assign(m, 0.0);
  const double cap = out.eps0;
  chunked_for(m, [&](int lo, int hi) {
    std::vector<double> scales;
    for (int i = lo; i < hi; ++i) {
      scales.clear();
      for (int j = 0; j < m; ++j) {
        double v = dist[static_cast<std::size_t>(i) * m + j];
        if (i != j && v <= cap) scales.push_back(v);
      }
      std::sort(scales.begin(), scales.end());
      scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
      if (scales.size() < 2) {
        // A single scale (or none) gives no annulus to descend through.
        out.per_point[i] = inf;
        continue;
      }
      double worst = 1.0;
      for (std::size_t t = 0; t + 1 < scales.size(); ++t) {
        worst = std::max(worst, scales[t + 1] / scales[t]);
      }
      out.per_point[i] = worst;
    }
  });

  out.s_star = *std::max_element(out.per_point.begin(), out.per_point.end());
  out.uniformly_perfect = std::isfinite(out.s_star);
  return out;
}

}  // namespace coarse
