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
//
// AVX2 kernel variants. Compiled with -mavx2 only; never referenced unless
// runtime detection succeeds. Floating-point kernels use the same per-lane
// operation order as the scalar reference (mul/add/div, no FMA) so results
// are bit-identical.

#if defined(COARSE_WITH_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "coarse/kernels.hpp"

namespace coarse::kern::detail {

void avx2_gromov_row(const std::int32_t* dist_o, const std::int32_t* dist_x,
                     std::int32_t dist_xo, std::int32_t* out, int n) {
  const __m256i base = _mm256_set1_epi32(dist_xo);
  int y = 0;
  for (; y + 8 <= n; y += 8) {
    __m256i o8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dist_o + y));
    __m256i x8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dist_x + y));
    __m256i r = _mm256_sub_epi32(_mm256_add_epi32(base, o8), x8);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + y), r);
  }
  for (; y < n; ++y) out[y] = dist_xo + dist_o[y] - dist_x[y];
}

std::int32_t avx2_four_point_row_max(const std::int32_t* g_z, const std::int32_t* g_x,
                                     std::int32_t cap, int n) {
  std::int32_t best = std::numeric_limits<std::int32_t>::min();
  const __m256i cap8 = _mm256_set1_epi32(cap);
  __m256i acc = _mm256_set1_epi32(best);
  int y = 0;
  for (; y + 8 <= n; y += 8) {
    __m256i z8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g_z + y));
    __m256i x8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g_x + y));
    acc = _mm256_max_epi32(acc, _mm256_sub_epi32(_mm256_min_epi32(cap8, z8), x8));
  }
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  for (int i = 0; i < 8; ++i) best = std::max(best, lanes[i]);
  for (; y < n; ++y) best = std::max(best, std::min(cap, g_z[y]) - g_x[y]);
  return best;
}

int avx2_four_point_row_first(const std::int32_t* g_z, const std::int32_t* g_x,
                              std::int32_t cap, std::int32_t target, int n) {
  const __m256i cap8 = _mm256_set1_epi32(cap);
  const __m256i want = _mm256_set1_epi32(target);
  int y = 0;
  for (; y + 8 <= n; y += 8) {
    __m256i z8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g_z + y));
    __m256i x8 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g_x + y));
    __m256i v = _mm256_sub_epi32(_mm256_min_epi32(cap8, z8), x8);
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, want)));
    if (mask != 0) return y + __builtin_ctz(static_cast<unsigned>(mask));
  }
  for (; y < n; ++y) {
    if (std::min(cap, g_z[y]) - g_x[y] == target) return y;
  }
  return -1;
}

std::int32_t avx2_row_max(const std::int32_t* v, int n) {
  std::int32_t best = std::numeric_limits<std::int32_t>::min();
  __m256i acc = _mm256_set1_epi32(best);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    acc = _mm256_max_epi32(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
  }
  alignas(32) std::int32_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  for (int k = 0; k < 8; ++k) best = std::max(best, lanes[k]);
  for (; i < n; ++i) best = std::max(best, v[i]);
  return best;
}

bool avx2_contains_value(const std::int32_t* v, int n, std::int32_t value) {
  const __m256i want = _mm256_set1_epi32(value);
  int i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    if (_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, want))) != 0) {
      return true;
    }
  }
  for (; i < n; ++i) {
    if (v[i] == value) return true;
  }
  return false;
}

void avx2_euclid_sq_row(double qx, double qy, const double* xs, const double* ys,
                        double* out, int n) {
  const __m256d qx4 = _mm256_set1_pd(qx);
  const __m256d qy4 = _mm256_set1_pd(qy);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d dx = _mm256_sub_pd(qx4, _mm256_loadu_pd(xs + i));
    __m256d dy = _mm256_sub_pd(qy4, _mm256_loadu_pd(ys + i));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
  }
  for (; i < n; ++i) {
    double dx = qx - xs[i];
    double dy = qy - ys[i];
    out[i] = dx * dx + dy * dy;
  }
}

void avx2_poincare_cosh_row(double qx, double qy, double qs, const double* xs,
                            const double* ys, const double* ss, double* out, int n) {
  const __m256d qx4 = _mm256_set1_pd(qx);
  const __m256d qy4 = _mm256_set1_pd(qy);
  const __m256d qs4 = _mm256_set1_pd(qs);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d dx = _mm256_sub_pd(qx4, _mm256_loadu_pd(xs + i));
    __m256d dy = _mm256_sub_pd(qy4, _mm256_loadu_pd(ys + i));
    __m256d sq = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    __m256d den = _mm256_mul_pd(qs4, _mm256_loadu_pd(ss + i));
    __m256d r = _mm256_add_pd(one, _mm256_div_pd(_mm256_mul_pd(two, sq), den));
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) {
    double dx = qx - xs[i];
    double dy = qy - ys[i];
    double sq = dx * dx + dy * dy;
    double den = qs * ss[i];
    out[i] = 1.0 + (2.0 * sq) / den;
  }
}

}  // namespace coarse::kern::detail

#endif  // COARSE_WITH_AVX2
