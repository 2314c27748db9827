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
// Inner-loop kernels behind the quadruple scans, hull membership tests and
// point-cloud distance rows. Each kernel has a scalar reference
// implementation and an AVX2 variant; the active one is selected once at
// runtime (CPU detection, overridable via COARSE_SIMD=scalar|avx2). The two
// variants must agree bit-for-bit; tests/test_kernels.cpp enforces this.

#pragma once

#include <cstdint>

namespace coarse::kern {

enum class Isa { scalar, avx2 };

Isa active();
void force(Isa isa);  // test hook; falls back to scalar if unsupported
bool avx2_supported();
const char* isa_name(Isa isa);

/// Doubled Gromov products of vertex x against base o:
///   out[y] = d(x,o) + d(o,y) - d(x,y).
void gromov_row(const std::int32_t* dist_o, const std::int32_t* dist_x,
                std::int32_t dist_xo, std::int32_t* out, int n);

/// max over y of min(cap, g_z[y]) - g_x[y]; the four-point inner reduction
/// with x, z fixed and cap = the doubled product (x|z)_o. n >= 1.
std::int32_t four_point_row_max(const std::int32_t* g_z, const std::int32_t* g_x,
                                std::int32_t cap, int n);

/// Smallest y with min(cap, g_z[y]) - g_x[y] == target, or -1.
int four_point_row_first(const std::int32_t* g_z, const std::int32_t* g_x,
                         std::int32_t cap, std::int32_t target, int n);

std::int32_t row_max(const std::int32_t* v, int n);  // n >= 1

bool contains_value(const std::int32_t* v, int n, std::int32_t value);

/// Squared Euclidean distances from (qx, qy) to (xs[i], ys[i]).
void euclid_sq_row(double qx, double qy, const double* xs, const double* ys,
                   double* out, int n);

/// cosh of Poincare-disk distances from q to p_i, computed as
///   out[i] = 1 + 2*((qx-xs[i])^2 + (qy-ys[i])^2) / (qs * ss[i])
/// where qs = 1 - |q|^2 and ss[i] = 1 - |p_i|^2. Monotone in the true
/// distance, so threshold tests need no acosh.
void poincare_cosh_row(double qx, double qy, double qs, const double* xs,
                       const double* ys, const double* ss, double* out, int n);

namespace detail {

void scalar_gromov_row(const std::int32_t* dist_o, const std::int32_t* dist_x,
                       std::int32_t dist_xo, std::int32_t* out, int n);
std::int32_t scalar_four_point_row_max(const std::int32_t* g_z, const std::int32_t* g_x,
                                       std::int32_t cap, int n);
int scalar_four_point_row_first(const std::int32_t* g_z, const std::int32_t* g_x,
                                std::int32_t cap, std::int32_t target, int n);
std::int32_t scalar_row_max(const std::int32_t* v, int n);
bool scalar_contains_value(const std::int32_t* v, int n, std::int32_t value);
void scalar_euclid_sq_row(double qx, double qy, const double* xs, const double* ys,
                          double* out, int n);
void scalar_poincare_cosh_row(double qx, double qy, double qs, const double* xs,
                              const double* ys, const double* ss, double* out, int n);

#if defined(COARSE_WITH_AVX2)
void avx2_gromov_row(const std::int32_t* dist_o, const std::int32_t* dist_x,
                     std::int32_t dist_xo, std::int32_t* out, int n);
std::int32_t avx2_four_point_row_max(const std::int32_t* g_z, const std::int32_t* g_x,
                                     std::int32_t cap, int n);
int avx2_four_point_row_first(const std::int32_t* g_z, const std::int32_t* g_x,
                              std::int32_t cap, std::int32_t target, int n);
std::int32_t avx2_row_max(const std::int32_t* v, int n);
bool avx2_contains_value(const std::int32_t* v, int n, std::int32_t value);
void avx2_euclid_sq_row(double qx, double qy, const double* xs, const double* ys,
                        double* out, int n);
void avx2_poincare_cosh_row(double qx, double qy, double qs, const double* xs,
                            const double* ys, const double* ss, double* out, int n);
#endif

}  // namespace detail

}  // namespace coarse::kern
