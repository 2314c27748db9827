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

#include "coarse/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

#include "coarse/error.hpp"
#include "coarse/parallel.hpp"

namespace coarse {

namespace {
constexpr const char* kModule = "cheeger";
constexpr int kExactWindowLimit = 24;
}  // namespace

std::vector<int> boundary_of(const Graph& g, std::span<const int> a) {
  if (a.empty()) raise(errc::invalid_argument, kModule, "boundary of an empty set");
  std::vector<char> in_a(g.order(), 0);
  for (int v : a) {
    if (v < 0 || v >= g.order()) raise(errc::invalid_argument, kModule, "set vertex out of range");
    in_a[v] = 1;
  }
  std::vector<char> in_b(g.order(), 0);
  std::vector<int> out;
  for (int v : a) {
    for (int w : g.neighbors(v)) {
      if (!in_a[w] && !in_b[w]) {
        in_b[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Window make_ball_window(const Graph& g, int center, int radius) {
  if (center < 0 || center >= g.order() || radius < 0) {
    raise(errc::invalid_argument, kModule, "bad window center or radius");
  }
  auto dist = bfs_distances(g, center);
  Window w;
  w.ambient = &g;
  for (int v = 0; v < g.order(); ++v) {
    if (dist[v] <= radius) w.vertices.push_back(v);
  }
  return w;
}

namespace {

void check_window(const Window& w) {
  if (w.ambient == nullptr || w.vertices.empty()) {
    raise(errc::invalid_argument, kModule, "window must reference a graph and be nonempty");
  }
  int n = w.ambient->order();
  int prev = -1;
  for (int v : w.vertices) {
    if (v < 0 || v >= n || v <= prev) {
      raise(errc::invalid_argument, kModule, "window vertices must be sorted, unique, in range");
    }
    prev = v;
  }
}

// Subset scan state: the window vertices and their ambient neighborhoods are
// mapped into a compact bit universe (window plus exterior boundary
// candidates) so each subset evaluates with a few word operations.
struct SubsetUniverse {
  int k = 0;                        // window size
  int words = 0;                    // universe words
  std::vector<int> universe;        // sorted ambient ids
  std::vector<std::uint64_t> nbr;   // k * words: ambient neighborhoods
  std::vector<std::uint64_t> self;  // k * words: the vertex's own bit
};

SubsetUniverse build_universe(const Window& w) {
  const Graph& g = *w.ambient;
  SubsetUniverse u;
  u.k = static_cast<int>(w.vertices.size());
  u.universe = w.vertices;
  for (int v : w.vertices) {
    for (int nb : g.neighbors(v)) u.universe.push_back(nb);
  }
  std::sort(u.universe.begin(), u.universe.end());
  u.universe.erase(std::unique(u.universe.begin(), u.universe.end()), u.universe.end());
  u.words = static_cast<int>((u.universe.size() + 63) / 64);
  auto bit_of = [&](int v) {
    return static_cast<int>(std::lower_bound(u.universe.begin(), u.universe.end(), v) -
                            u.universe.begin());
  };
  u.nbr.assign(static_cast<std::size_t>(u.k) * u.words, 0);
  u.self.assign(static_cast<std::size_t>(u.k) * u.words, 0);
  for (int i = 0; i < u.k; ++i) {
    int v = w.vertices[i];
    std::uint64_t* nrow = u.nbr.data() + static_cast<std::size_t>(i) * u.words;
    std::uint64_t* srow = u.self.data() + static_cast<std::size_t>(i) * u.words;
    int b = bit_of(v);
    srow[b >> 6] |= 1ULL << (b & 63);
    for (int nb : g.neighbors(v)) {
      int bb = bit_of(nb);
      nrow[bb >> 6] |= 1ULL << (bb & 63);
    }
  }
  return u;
}

struct SubsetBest {
  long long boundary = -1;  // -1: nothing found yet
  long long size = 1;
  std::uint32_t mask = 0;  // members by window position

  bool better_than(long long b, long long s) const {
    if (boundary < 0) return false;
    return boundary * s > b * size;  // strict ratio improvement
  }
  bool ties_with(long long b, long long s) const {
    return boundary >= 0 && boundary * s == b * size;
  }
};

// Lexicographic order on the sorted member lists, via window positions.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  while (a != 0 && b != 0) {
    int pa = std::countr_zero(a);
    int pb = std::countr_zero(b);
    if (pa != pb) return pa < pb;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == 0 && b != 0) return true;  // proper prefix first
  return false;
}

// Depth-first include/exclude scan from window position `start`, with the
// partial selection described by (mask, count, acc). Unions are snapshotted
// per depth for O(words) undo.
void subset_dfs(const SubsetUniverse& u, int start, std::uint32_t mask, int count,
                std::vector<std::uint64_t>& stack, int depth, int size_cap,
                SubsetBest& best) {
  const int words = u.words;
  if (start == u.k) {
    if (count == 0) return;
    const std::uint64_t* acc = stack.data() + static_cast<std::size_t>(depth) * words;
    long long boundary = 0;
    std::uint32_t m = mask;
    // acc holds the neighborhood union; strip members to get the boundary.
    // Member bits are collected on the fly from self rows.
    // To avoid a second array we recompute the member mask words here.
    std::uint64_t member[16];
    for (int wdx = 0; wdx < words; ++wdx) member[wdx] = 0;
    while (m != 0) {
      int i = std::countr_zero(m);
      m &= m - 1;
      const std::uint64_t* srow = u.self.data() + static_cast<std::size_t>(i) * words;
      for (int wdx = 0; wdx < words; ++wdx) member[wdx] |= srow[wdx];
    }
    for (int wdx = 0; wdx < words; ++wdx) {
      boundary += std::popcount(acc[wdx] & ~member[wdx]);
    }
    if (best.better_than(boundary, count)) {
      best = {boundary, count, mask};
    } else if (best.ties_with(boundary, count) && mask_lex_less(mask, best.mask)) {
      best.mask = mask;
    }
    return;
  }
  // Include start.
  if (size_cap < 0 || count < size_cap) {
    const std::uint64_t* acc = stack.data() + static_cast<std::size_t>(depth) * words;
    std::uint64_t* next = stack.data() + static_cast<std::size_t>(depth + 1) * words;
    const std::uint64_t* nrow = u.nbr.data() + static_cast<std::size_t>(start) * words;
    for (int wdx = 0; wdx < words; ++wdx) next[wdx] = acc[wdx] | nrow[wdx];
    subset_dfs(u, start + 1, mask | (1U << start), count + 1, stack, depth + 1, size_cap, best);
  }
  // Exclude start.
  const std::uint64_t* acc = stack.data() + static_cast<std::size_t>(depth) * words;
  std::uint64_t* next = stack.data() + static_cast<std::size_t>(depth + 1) * words;
  for (int wdx = 0; wdx < words; ++wdx) next[wdx] = acc[wdx];
  subset_dfs(u, start + 1, mask, count, stack, depth + 1, size_cap, best);
}

SubsetBest merge_best(SubsetBest a, const SubsetBest& b) {
  if (b.boundary < 0) return a;
  if (a.boundary < 0) return b;
  if (a.better_than(b.boundary, b.size)) return b;
  if (b.ties_with(a.boundary, a.size) && mask_lex_less(b.mask, a.mask)) return b;
  return a;
}

CheegerWitness witness_from_mask(const Window& w, std::uint32_t mask) {
  CheegerWitness out;
  for (int i = 0; i < static_cast<int>(w.vertices.size()); ++i) {
    if (mask & (1U << i)) out.set.push_back(w.vertices[i]);
  }
  out.boundary = boundary_of(*w.ambient, out.set);
  out.ratio = Rational(static_cast<long long>(out.boundary.size()),
                       static_cast<long long>(out.set.size()));
  return out;
}

}  // namespace

CheegerWitness cheeger_exact_window(const Window& w, int size_cap) {
  check_window(w);
  const int k = static_cast<int>(w.vertices.size());
  if (k > kExactWindowLimit) {
    raise(errc::capacity_exceeded, kModule,
          "window of " + std::to_string(k) + " vertices exceeds the exact enumeration limit (" +
              std::to_string(kExactWindowLimit) + "); use cheeger_upper_bounds");
  }
  if (size_cap == 0) raise(errc::invalid_argument, kModule, "size cap must be nonzero");

  SubsetUniverse u = build_universe(w);
  if (u.words > 16) raise(errc::capacity_exceeded, kModule, "window neighborhood too large");

  // Partition the scan by the first two include/exclude decisions when the
  // window is big enough to be worth it.
  SubsetBest best;
  if (k >= 10) {
    best = chunked_reduce(
        4, SubsetBest{},
        [&](int lo, int hi) {
          SubsetBest local;
          std::vector<std::uint64_t> stack(static_cast<std::size_t>(k + 1) * u.words, 0);
          for (int t = lo; t < hi; ++t) {
            bool take0 = (t & 1) != 0;
            bool take1 = (t & 2) != 0;
            std::uint32_t mask = 0;
            int count = 0;
            std::fill(stack.begin(), stack.begin() + u.words, 0);
            int depth = 0;
            auto apply = [&](int pos, bool take) {
              const std::uint64_t* acc = stack.data() + static_cast<std::size_t>(depth) * u.words;
              std::uint64_t* next = stack.data() + static_cast<std::size_t>(depth + 1) * u.words;
              if (take) {
                const std::uint64_t* nrow = u.nbr.data() + static_cast<std::size_t>(pos) * u.words;
                for (int wdx = 0; wdx < u.words; ++wdx) next[wdx] = acc[wdx] | nrow[wdx];
                mask |= 1U << pos;
                ++count;
              } else {
                for (int wdx = 0; wdx < u.words; ++wdx) next[wdx] = acc[wdx];
              }
              ++depth;
            };
            apply(0, take0);
            apply(1, take1);
            if (size_cap >= 0 && count > size_cap) continue;
            subset_dfs(u, 2, mask, count, stack, depth, size_cap, local);
          }
          return local;
        },
        merge_best);
  } else {
    std::vector<std::uint64_t> stack(static_cast<std::size_t>(k + 1) * u.words, 0);
    subset_dfs(u, 0, 0, 0, stack, 0, size_cap, best);
  }

  if (best.boundary < 0) raise(errc::invalid_argument, kModule, "no feasible candidate set");
  CheegerWitness out = witness_from_mask(w, best.mask);
  out.exact = true;
  return out;
}

namespace {

struct UpperAcc {
  bool found = false;
  Rational ratio;
  std::vector<int> set;
};

void offer(UpperAcc& acc, Rational ratio, std::vector<int> set) {
  if (!acc.found || ratio < acc.ratio ||
      (ratio == acc.ratio && std::lexicographical_compare(set.begin(), set.end(),
                                                          acc.set.begin(), acc.set.end()))) {
    acc.found = true;
    acc.ratio = ratio;
    acc.set = std::move(set);
  }
}

// Bridges (cut edges) by iterative lowpoint DFS.
std::vector<std::pair<int, int>> bridges_of(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> out;
  int timer = 0;
  std::vector<std::pair<int, std::size_t>> stack;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    stack.push_back({root, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      auto nb = g.neighbors(v);
      if (idx < nb.size()) {
        int w = nb[idx++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          stack.push_back({w, 0});
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().first;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.push_back({std::min(p, v), std::max(p, v)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Component of `from` in g minus the edge (from, avoid_to).
std::vector<int> side_of_bridge(const Graph& g, int from, int avoid_to) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> queue{from};
  seen[from] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v)) {
      if (v == from && w == avoid_to) continue;
      if (w == from && v == avoid_to) continue;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

}  // namespace

CheegerWitness cheeger_upper_bounds(const Graph& g, CandidateFamily family,
                                    int radius_budget) {
  const int n = g.order();
  UpperAcc acc;

  if (family == CandidateFamily::balls) {
    for (int v = 0; v < n; ++v) {
      auto dist = bfs_distances(g, v);
      int ecc = *std::max_element(dist.begin(), dist.end());
      int kmax = ecc - 1;
      if (radius_budget >= 0) kmax = std::min(kmax, radius_budget);
      std::vector<int> count_at(ecc + 2, 0);
      for (int u = 0; u < n; ++u) ++count_at[dist[u]];
      long long ball = 0;
      for (int k = 0; k <= kmax; ++k) {
        ball += count_at[k];
        long long sphere = count_at[k + 1];
        Rational ratio(sphere, ball);
        if (!acc.found || ratio <= acc.ratio) {
          std::vector<int> set;
          for (int u = 0; u < n; ++u) {
            if (dist[u] <= k) set.push_back(u);
          }
          offer(acc, ratio, std::move(set));
        }
      }
    }
  } else if (family == CandidateFamily::segments) {
    DistMatrix d = apsp(g);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        auto geo = geodesics_between(g, d, u, v, 1);
        std::vector<int> set = geo.paths.front().vertices;
        std::sort(set.begin(), set.end());
        auto b = boundary_of(g, set);
        if (b.empty()) continue;  // the segment swallowed the graph
        offer(acc, Rational(static_cast<long long>(b.size()), static_cast<long long>(set.size())),
              std::move(set));
      }
    }
  } else {
    for (const auto& [u, v] : bridges_of(g)) {
      for (auto [from, avoid] : {std::pair{u, v}, std::pair{v, u}}) {
        std::vector<int> side = side_of_bridge(g, from, avoid);
        if (static_cast<int>(side.size()) == n) continue;
        offer(acc, Rational(1, static_cast<long long>(side.size())), std::move(side));
      }
    }
  }

  if (!acc.found) {
    raise(errc::invalid_argument, kModule, "candidate family is empty on this graph");
  }
  CheegerWitness out;
  out.set = std::move(acc.set);
  out.boundary = boundary_of(g, out.set);
  out.ratio = Rational(static_cast<long long>(out.boundary.size()),
                       static_cast<long long>(out.set.size()));
  out.exact = false;
  return out;
}

std::vector<ProfilePoint> cheeger_profile(const Graph& g, int v, std::span<const int> radii,
                                          ProfileMethod method) {
  if (v < 0 || v >= g.order()) raise(errc::invalid_argument, kModule, "center out of range");
  if (radii.empty()) raise(errc::invalid_argument, kModule, "radii list is empty");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    if (radii[i] >= radii[i + 1]) {
      raise(errc::invalid_argument, kModule, "radii must be strictly increasing");
    }
  }
  if (radii.front() < 1) raise(errc::invalid_argument, kModule, "radii must be >= 1");

  auto dist = bfs_distances(g, v);
  int ecc = *std::max_element(dist.begin(), dist.end());

  // Precompute bridge sides once; candidates must fit inside each window.
  std::vector<std::vector<int>> sides;
  for (const auto& [u, w] : bridges_of(g)) {
    for (auto [from, avoid] : {std::pair{u, w}, std::pair{w, u}}) {
      auto side = side_of_bridge(g, from, avoid);
      if (static_cast<int>(side.size()) < g.order()) sides.push_back(std::move(side));
    }
  }

  std::vector<int> count_at(ecc + 2, 0);
  for (int u = 0; u < g.order(); ++u) ++count_at[dist[u]];

  std::vector<ProfilePoint> out;
  for (int r : radii) {
    if (r + 1 > ecc) {
      raise(errc::radius_margin, kModule,
            "radius " + std::to_string(r) + " leaves no truncation margin (eccentricity " +
                std::to_string(ecc) + ")");
    }
    long long wsize = 0;
    for (int k = 0; k <= r; ++k) wsize += count_at[k];

    ProfilePoint pt;
    pt.radius = r;
    if (method != ProfileMethod::upper_only && wsize <= kExactWindowLimit) {
      Window w = make_ball_window(g, v, r);
      CheegerWitness cw = cheeger_exact_window(w);
      pt.ratio = cw.ratio;
      pt.exact = true;
      pt.witness_size = static_cast<int>(cw.set.size());
    } else if (method == ProfileMethod::exact_only) {
      raise(errc::capacity_exceeded, kModule,
            "window at radius " + std::to_string(r) + " too large for exact enumeration");
    } else {
      // Center balls: boundary of B(v,k) is exactly S(v,k+1).
      bool found = false;
      Rational best;
      long long best_size = 0;
      long long ball = 0;
      for (int k = 0; k <= r; ++k) {
        ball += count_at[k];
        long long sphere = count_at[k + 1];
        Rational ratio(sphere, ball);
        if (!found || ratio < best) {
          found = true;
          best = ratio;
          best_size = ball;
        }
      }
      for (const auto& side : sides) {
        bool inside = std::all_of(side.begin(), side.end(),
                                  [&](int u) { return dist[u] <= r; });
        if (!inside) continue;
        Rational ratio(1, static_cast<long long>(side.size()));
        if (!found || ratio < best) {
          found = true;
          best = ratio;
          best_size = static_cast<long long>(side.size());
        }
      }
      pt.ratio = best;
      pt.exact = false;
      pt.witness_size = static_cast<int>(best_size);
    }
    out.push_back(pt);
  }
  return out;
}

ProfileTrend classify_profile(std::span<const ProfilePoint> profile) {
  if (profile.empty()) raise(errc::invalid_argument, kModule, "empty profile");
  const Rational& first = profile.front().ratio;
  const Rational& last = profile.back().ratio;
  // decaying iff last <= first / 2
  return (last * Rational(2, 1) <= first) ? ProfileTrend::decaying
                                          : ProfileTrend::bounded_below;
}

namespace {

struct DirichletOp {
  int n = 0;
  std::vector<double> diag;
  std::vector<int> offsets, nbrs;  // edges within the window, local indices

  void apply(const double* x, double* y) const {
    for (int i = 0; i < n; ++i) {
      double acc = diag[i] * x[i];
      for (int j = offsets[i]; j < offsets[i + 1]; ++j) acc -= x[nbrs[j]];
      y[i] = acc;
    }
  }
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Conjugate gradient for the SPD window Laplacian.
bool cg_solve(const DirichletOp& op, const std::vector<double>& b, std::vector<double>& x) {
  const int n = op.n;
  x.assign(n, 0.0);
  std::vector<double> r = b, p = b, ap(n);
  double rr = dot(r, r);
  double target = 1e-26 * std::max(1.0, dot(b, b));
  for (int it = 0; it < 20 * n + 100; ++it) {
    if (rr <= target) return true;
    op.apply(p.data(), ap.data());
    double alpha = rr / dot(p, ap);
    for (int i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    double rr_next = dot(r, r);
    double beta = rr_next / rr;
    rr = rr_next;
    for (int i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  return rr <= target;
}

}  // namespace

SpectralReport dirichlet_lambda1(const Window& w, double tolerance) {
  check_window(w);
  if (tolerance <= 0) raise(errc::invalid_argument, kModule, "tolerance must be positive");
  const Graph& g = *w.ambient;
  if (boundary_of(g, w.vertices).empty()) {
    raise(errc::invalid_argument, kModule,
          "window has no ambient boundary; the Dirichlet operator is singular");
  }

  const int n = static_cast<int>(w.vertices.size());
  DirichletOp op;
  op.n = n;
  op.diag.resize(n);
  op.offsets.assign(n + 1, 0);
  auto local_of = [&](int v) {
    auto it = std::lower_bound(w.vertices.begin(), w.vertices.end(), v);
    return (it != w.vertices.end() && *it == v)
               ? static_cast<int>(it - w.vertices.begin())
               : -1;
  };
  std::vector<std::vector<int>> local_adj(n);
  for (int i = 0; i < n; ++i) {
    int v = w.vertices[i];
    op.diag[i] = g.degree(v);
    for (int nb : g.neighbors(v)) {
      int j = local_of(nb);
      if (j >= 0) local_adj[i].push_back(j);
    }
  }
  for (int i = 0; i < n; ++i) op.offsets[i + 1] = op.offsets[i] + static_cast<int>(local_adj[i].size());
  op.nbrs.reserve(op.offsets[n]);
  for (int i = 0; i < n; ++i) {
    for (int j : local_adj[i]) op.nbrs.push_back(j);
  }

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n), lx(n);
  double lambda = 0.0, residual = 0.0;
  constexpr int kMaxOuter = 500;
  for (int outer = 1; outer <= kMaxOuter; ++outer) {
    if (!cg_solve(op, x, y)) {
      raise(errc::no_convergence, kModule, "conjugate gradient failed to converge");
    }
    double nrm = norm(y);
    for (int i = 0; i < n; ++i) y[i] /= nrm;
    op.apply(y.data(), lx.data());
    lambda = dot(y, lx);
    double res2 = 0;
    for (int i = 0; i < n; ++i) {
      double d = lx[i] - lambda * y[i];
      res2 += d * d;
    }
    residual = std::sqrt(res2);
    x = y;
    if (residual <= tolerance) {
      return {lambda, outer, residual, tolerance};
    }
  }
  raise(errc::no_convergence, kModule,
        "inverse power iteration did not reach the residual tolerance");
}

}  // namespace coarse
