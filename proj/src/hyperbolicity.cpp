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

#include "coarse/hyperbolicity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "coarse/error.hpp"
#include "coarse/kernels.hpp"
#include "coarse/parallel.hpp"

namespace coarse {

namespace {
constexpr const char* kModule = "hyperbolicity";
}

GromovTable gromov_table(const DistMatrix& d, int o) {
  const int n = d.order();
  if (o < 0 || o >= n) raise(errc::invalid_argument, kModule, "base point out of range");
  GromovTable t;
  t.base = o;
  t.n = n;
  t.doubled.resize(static_cast<std::size_t>(n) * n);
  const std::int32_t* dist_o = d.row(o);
  for (int x = 0; x < n; ++x) {
    kern::gromov_row(dist_o, d.row(x), dist_o[x], t.doubled.data() + static_cast<std::size_t>(x) * n, n);
  }
  return t;
}

namespace {

struct DeltaAcc {
  std::int32_t best = 0;
  std::array<int, 4> quad{0, 0, 0, 0};
};

bool quad_less(const std::array<int, 4>& a, const std::array<int, 4>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

DeltaAcc merge(DeltaAcc a, const DeltaAcc& b) {
  if (b.best > a.best || (b.best == a.best && quad_less(b.quad, a.quad))) return b;
  return a;
}

// Scans all (x,y,z) for the given base points, maintaining the running
// best. Base-point pruning: when every product w.r.t. o is already below
// the running best, no quadruple over o can improve it. Pair pruning: the
// defect for fixed (x,z) is at most the product (x|z)_o.
DeltaAcc scan_bases(const DistMatrix& d, int base_lo, int base_hi, DeltaAcc acc) {
  const int n = d.order();
  std::vector<std::int32_t> g(static_cast<std::size_t>(n) * n);
  for (int o = base_lo; o < base_hi; ++o) {
    const std::int32_t* dist_o = d.row(o);
    std::int32_t gmax = std::numeric_limits<std::int32_t>::min();
    for (int x = 0; x < n; ++x) {
      std::int32_t* row = g.data() + static_cast<std::size_t>(x) * n;
      kern::gromov_row(dist_o, d.row(x), dist_o[x], row, n);
      gmax = std::max(gmax, kern::row_max(row, n));
    }
    if (gmax < acc.best) continue;
    for (int x = 0; x < n; ++x) {
      const std::int32_t* gx = g.data() + static_cast<std::size_t>(x) * n;
      for (int z = 0; z < n; ++z) {
        std::int32_t cap = gx[z];
        if (cap < acc.best) continue;  // defect <= (x|z)_o
        const std::int32_t* gz = g.data() + static_cast<std::size_t>(z) * n;
        std::int32_t m = kern::four_point_row_max(gz, gx, cap, n);
        if (m > acc.best) {
          int y = kern::four_point_row_first(gz, gx, cap, m, n);
          acc.best = m;
          acc.quad = {x, y, z, o};
        } else if (m == acc.best && x <= acc.quad[0]) {
          int y = kern::four_point_row_first(gz, gx, cap, m, n);
          std::array<int, 4> cand{x, y, z, o};
          if (quad_less(cand, acc.quad)) acc.quad = cand;
        }
      }
    }
  }
  return acc;
}

}  // namespace

DeltaWitness delta_four_point(const DistMatrix& d, int full_scan_limit) {
  const int n = d.order();
  if (n < 1) raise(errc::invalid_argument, kModule, "empty distance matrix");

  DeltaWitness out;
  if (n <= full_scan_limit) {
    DeltaAcc acc = chunked_reduce(
        n, DeltaAcc{},
        [&](int lo, int hi) { return scan_bases(d, lo, hi, DeltaAcc{}); }, merge);
    out.doubled = acc.best;
    out.quad = acc.quad;
    out.exact = true;
    return out;
  }

  // Fixed-base lower bound: base = smallest index of maximum eccentricity.
  int base = 0, ecc = -1;
  for (int v = 0; v < n; ++v) {
    int e = d.eccentricity(v);
    if (e > ecc) {
      ecc = e;
      base = v;
    }
  }
  std::vector<std::int32_t> g(static_cast<std::size_t>(n) * n);
  const std::int32_t* dist_o = d.row(base);
  for (int x = 0; x < n; ++x) {
    kern::gromov_row(dist_o, d.row(x), dist_o[x], g.data() + static_cast<std::size_t>(x) * n, n);
  }
  DeltaAcc acc = chunked_reduce(
      n, DeltaAcc{},
      [&](int lo, int hi) {
        DeltaAcc local;
        for (int x = lo; x < hi; ++x) {
          const std::int32_t* gx = g.data() + static_cast<std::size_t>(x) * n;
          for (int z = 0; z < n; ++z) {
            std::int32_t cap = gx[z];
            if (cap < local.best) continue;
            const std::int32_t* gz = g.data() + static_cast<std::size_t>(z) * n;
            std::int32_t m = kern::four_point_row_max(gz, gx, cap, n);
            if (m > local.best) {
              int y = kern::four_point_row_first(gz, gx, cap, m, n);
              local.best = m;
              local.quad = {x, y, z, base};
            } else if (m == local.best && x <= local.quad[0]) {
              int y = kern::four_point_row_first(gz, gx, cap, m, n);
              std::array<int, 4> cand{x, y, z, base};
              if (quad_less(cand, local.quad)) local.quad = cand;
            }
          }
        }
        return local;
      },
      merge);
  out.doubled = acc.best;
  out.quad = acc.quad;
  out.exact = false;
  return out;
}

namespace {

// Hop distance from vertex p to the vertex set of a geodesic.
int dist_to_path(const DistMatrix& d, int p, const Geodesic& g) {
  int best = std::numeric_limits<int>::max();
  const std::int32_t* dp = d.row(p);
  for (int q : g.vertices) best = std::min(best, static_cast<int>(dp[q]));
  return best;
}

struct ThinScratch {
  std::map<std::pair<int, int>, GeodesicList> cache;
  bool truncated_geodesics = false;
};

const GeodesicList& sides_for(const Graph& g, const DistMatrix& d, int u, int v,
                              std::size_t cap, ThinScratch& s) {
  auto key = std::minmax(u, v);
  auto it = s.cache.find(key);
  if (it == s.cache.end()) {
    it = s.cache.emplace(key, geodesics_between(g, d, key.first, key.second, cap)).first;
    if (it->second.truncated) s.truncated_geodesics = true;
  }
  return it->second;
}

// For the triangle (a, b, c): consider every enumerated geodesic for side
// [a b] and every point p on it. Over all geodesic triangles with these
// corners, the largest distance from p to the union of the other two sides
// is min(max_g d(p, g in [b c]), max_g d(p, g in [c a])), because the two
// opposite sides vary independently.
void scan_role(const Graph& g, const DistMatrix& d, int a, int b, int c,
               std::size_t geodesic_cap, ThinScratch& s, ThinWitness& best) {
  const GeodesicList& ab = sides_for(g, d, a, b, geodesic_cap, s);
  const GeodesicList& bc = sides_for(g, d, b, c, geodesic_cap, s);
  const GeodesicList& ca = sides_for(g, d, c, a, geodesic_cap, s);
  for (const Geodesic& side : ab.paths) {
    for (int p : side.vertices) {
      int far_bc = 0, far_ca = 0;
      const Geodesic* arg_bc = &bc.paths.front();
      const Geodesic* arg_ca = &ca.paths.front();
      for (const Geodesic& h : bc.paths) {
        int v = dist_to_path(d, p, h);
        if (v > far_bc) {
          far_bc = v;
          arg_bc = &h;
        }
      }
      for (const Geodesic& h : ca.paths) {
        int v = dist_to_path(d, p, h);
        if (v > far_ca) {
          far_ca = v;
          arg_ca = &h;
        }
      }
      int value = std::min(far_bc, far_ca);
      if (value > best.value) {
        best.value = value;
        best.corners = {a, b, c};
        best.side = side;
        best.opposite_a = *arg_bc;
        best.opposite_b = *arg_ca;
        best.point = p;
      }
    }
  }
}

}  // namespace

ThinWitness delta_thin(const Graph& g, const DistMatrix& d, std::size_t triangle_cap,
                       std::size_t geodesic_cap) {
  if (triangle_cap < 1 || geodesic_cap < 1) {
    raise(errc::invalid_argument, kModule, "caps must be >= 1");
  }
  const int n = g.order();
  ThinWitness best;
  best.value = 0;
  ThinScratch scratch;

  std::size_t triples_seen = 0;
  bool triples_truncated = false;
  bool sampled = false;

  auto visit = [&](int a, int b, int c) {
    if (triples_seen == triangle_cap) {
      triples_truncated = true;
      return false;
    }
    ++triples_seen;
    scan_role(g, d, a, b, c, geodesic_cap, scratch, best);
    scan_role(g, d, b, c, a, geodesic_cap, scratch, best);
    scan_role(g, d, c, a, b, geodesic_cap, scratch, best);
    return true;
  };

  if (n <= 60) {
    for (int a = 0; a < n && !triples_truncated; ++a) {
      for (int b = a + 1; b < n && !triples_truncated; ++b) {
        for (int c = b + 1; c < n; ++c) {
          if (!visit(a, b, c)) break;
        }
      }
    }
  } else {
    // Deterministic sample stratified by pairwise distances: from a strided
    // base set, one partner per distance class d(i,j), then one third vertex
    // per joint class (d(i,k), d(j,k)).
    sampled = true;
    int stride = (n + 47) / 48;
    for (int i = 0; i < n && !triples_truncated; i += stride) {
      const std::int32_t* di = d.row(i);
      std::set<int> seen_dist;
      std::vector<int> partners;
      for (int j = 0; j < n; ++j) {
        if (j != i && seen_dist.insert(di[j]).second) partners.push_back(j);
      }
      for (int j : partners) {
        if (triples_truncated) break;
        const std::int32_t* dj = d.row(j);
        std::set<std::pair<std::int32_t, std::int32_t>> seen_class;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (!seen_class.insert({di[k], dj[k]}).second) continue;
          if (!visit(i, j, k)) break;
        }
      }
    }
  }

  best.exact = !sampled && !triples_truncated && !scratch.truncated_geodesics;
  return best;
}

}  // namespace coarse
