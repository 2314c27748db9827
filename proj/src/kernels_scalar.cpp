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
// Scalar reference kernels. These define the exact semantics the AVX2
// variants must reproduce, including floating-point operation order.

#include <algorithm>
#include <limits>

#include "coarse/kernels.hpp"

namespace coarse::kern::detail {

void scalar_gromov_row(const std::int32_t* dist_o, const std::int32_t* dist_x,
                       std::int32_t dist_xo, std::int32_t* out, int n) {
  for (int y = 0; y < n; ++y) out[y] = dist_xo + dist_o[y] - dist_x[y];
}

std::int32_t scalar_four_point_row_max(const std::int32_t* g_z, const std::int32_t* g_x,
                                       std::int32_t cap, int n) {
  std::int32_t best = std::numeric_limits<std::int32_t>::min();
  for (int y = 0; y < n; ++y) {
    std::int32_t v = std::min(cap, g_z[y]) - g_x[y];
    best = std::max(best, v);
  }
  return best;
}

int scalar_four_point_row_first(const std::int32_t* g_z, const std::int32_t* g_x,
                                std::int32_t cap, std::int32_t target, int n) {
  for (int y = 0; y < n; ++y) {
    if (std::min(cap, g_z[y]) - g_x[y] == target) return y;
  }
  return -1;
}

std::int32_t scalar_row_max(const std::int32_t* v, int n) {
  std::int32_t best = std::numeric_limits<std::int32_t>::min();
  for (int i = 0; i < n; ++i) best = std::max(best, v[i]);
  return best;
}

bool scalar_contains_value(const std::int32_t* v, int n, std::int32_t value) {
  for (int i = 0; i < n; ++i) {
    if (v[i] == value) return true;
  }
  return false;
}

void scalar_euclid_sq_row(double qx, double qy, const double* xs, const double* ys,
                          double* out, int n) {
  for (int i = 0; i < n; ++i) {
    double dx = qx - xs[i];
    double dy = qy - ys[i];
    out[i] = dx * dx + dy * dy;
  }
}

void scalar_poincare_cosh_row(double qx, double qy, double qs, const double* xs,
                              const double* ys, const double* ss, double* out, int n) {
  for (int i = 0; i < n; ++i) {
    double dx = qx - xs[i];
    double dy = qy - ys[i];
    double sq = dx * dx + dy * dy;
    double den = qs * ss[i];
    out[i] = 1.0 + (2.0 * sq) / den;
  }
}

}  // namespace coarse::kern::detail
