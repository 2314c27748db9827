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

#include "coarse/pole.hpp"

#include <algorithm>
#include <cmath>

#include "coarse/error.hpp"
#include "coarse/kernels.hpp"
#include "coarse/parallel.hpp"

namespace coarse {

namespace {
constexpr const char* kModule = "pole";
}

RayHull ray_hull(const Graph& g, const DistMatrix& d, int v, int r) {
  const int n = g.order();
  if (v < 0 || v >= n || r < 0) raise(errc::invalid_argument, kModule, "base or radius out of range");
  std::vector<int> sphere = d.sphere(v, r);
  if (sphere.empty()) {
    raise(errc::empty_sphere, kModule,
          "no vertices at distance " + std::to_string(r) + " from base " + std::to_string(v));
  }

  RayHull hull;
  hull.base = v;
  hull.radius = r;
  hull.in_hull.assign(n, 0);
  const int m = static_cast<int>(sphere.size());
  const std::int32_t* dv = d.row(v);

  // Contiguous sphere-restricted distance rows keep the membership test a
  // flat equality scan.
  chunked_for(n, [&](int lo, int hi) {
    std::vector<std::int32_t> sub(m);
    for (int w = lo; w < hi; ++w) {
      if (dv[w] > r) continue;
      const std::int32_t* dw = d.row(w);
      for (int j = 0; j < m; ++j) sub[j] = dw[sphere[j]];
      if (kern::contains_value(sub.data(), m, r - dv[w])) hull.in_hull[w] = 1;
    }
  });
  for (int w = 0; w < n; ++w) {
    if (hull.in_hull[w]) hull.members.push_back(w);
  }
  return hull;
}

int pole_margin(const Graph& g, const DistMatrix& d, const RayHull& hull, int buffer) {
  if (buffer < 0 || hull.radius - buffer < 0) {
    raise(errc::invalid_argument, kModule, "buffer must satisfy 0 <= buffer <= radius");
  }
  const int n = g.order();
  // Multi-source BFS from the hull gives hop distances to it.
  std::vector<std::int32_t> dist(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int w : hull.members) {
    dist[w] = 0;
    queue.push_back(w);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  const std::int32_t* dv = d.row(hull.base);
  const int ball_radius = hull.radius - buffer;
  int margin = 0;
  for (int w = 0; w < n; ++w) {
    if (dv[w] <= ball_radius) margin = std::max(margin, static_cast<int>(dist[w]));
  }
  return margin;
}

PoleVerdict pole_verdict(std::span<const int> radii, std::span<const int> margins) {
  if (radii.size() != margins.size() || radii.size() < 3) {
    raise(errc::invalid_argument, kModule, "verdict needs at least 3 (radius, margin) pairs");
  }
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    if (radii[i] >= radii[i + 1]) {
      raise(errc::invalid_argument, kModule, "radii must be strictly increasing");
    }
  }
  PoleVerdict v;
  const std::size_t k = margins.size();
  if (margins[k - 1] == margins[k - 2] && margins[k - 2] == margins[k - 3]) {
    v.pole_like = true;
    v.m_estimate = margins[k - 1];
    v.growth_slope = 0.0;
  } else {
    v.pole_like = false;
    v.m_estimate = margins[k - 1];
    v.growth_slope = static_cast<double>(margins[k - 1] - margins[0]) /
                     static_cast<double>(radii[k - 1] - radii[0]);
  }
  return v;
}

PoleReport pole_report(const Graph& g, const DistMatrix& d, int v,
                       std::span<const int> radii, int buffer) {
  PoleReport rep;
  rep.base = v;
  for (int r : radii) {
    int b = buffer >= 0 ? std::min(buffer, r) : r / 4;
    RayHull hull = ray_hull(g, d, v, r);
    rep.radii.push_back(r);
    rep.buffers.push_back(b);
    rep.margins.push_back(pole_margin(g, d, hull, b));
  }
  rep.verdict = pole_verdict(rep.radii, rep.margins);
  return rep;
}

TheoremBound theorem_bound(double delta_th, Rational h, long long mu) {
  if (!(h > Rational(0, 1))) {
    raise(errc::invalid_argument, kModule,
          "the pole bound requires a positive Cheeger estimate");
  }
  if (mu < 1 || delta_th < 0) {
    raise(errc::invalid_argument, kModule, "need mu >= 1 and delta_th >= 0");
  }
  long long floor_th = static_cast<long long>(std::floor(delta_th));
  long long power = 1;
  for (long long i = 0; i < floor_th; ++i) {
    if (power > (1LL << 60) / std::max(mu, 1LL)) {
      raise(errc::capacity_exceeded, kModule, "mu^floor(delta_th) overflows");
    }
    power *= mu;
  }
  TheoremBound out;
  out.delta_th = delta_th;
  out.h = h;
  out.mu = mu;
  out.bound = Rational(floor_th, 1) + h.reciprocal() * Rational(power, 1);
  return out;
}

}  // namespace coarse
