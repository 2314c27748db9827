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
// Runtime ISA selection. COARSE_SIMD=scalar|avx2|auto overrides detection.

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "coarse/kernels.hpp"

namespace coarse::kern {

namespace {

Isa detect() {
#if defined(COARSE_WITH_AVX2)
  if (const char* env = std::getenv("COARSE_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0 && __builtin_cpu_supports("avx2")) return Isa::avx2;
    if (std::strcmp(env, "avx2") == 0) return Isa::scalar;
  }
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

std::atomic<Isa>& state() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool avx2_supported() {
#if defined(COARSE_WITH_AVX2)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Isa active() { return state().load(std::memory_order_relaxed); }

void force(Isa isa) {
  if (isa == Isa::avx2 && !avx2_supported()) isa = Isa::scalar;
  state().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

#if defined(COARSE_WITH_AVX2)
#define COARSE_DISPATCH(fn, ...)                         \
  (active() == Isa::avx2 ? detail::avx2_##fn(__VA_ARGS__) \
                         : detail::scalar_##fn(__VA_ARGS__))
#else
#define COARSE_DISPATCH(fn, ...) detail::scalar_##fn(__VA_ARGS__)
#endif

void gromov_row(const std::int32_t* dist_o, const std::int32_t* dist_x,
                std::int32_t dist_xo, std::int32_t* out, int n) {
  COARSE_DISPATCH(gromov_row, dist_o, dist_x, dist_xo, out, n);
}

std::int32_t four_point_row_max(const std::int32_t* g_z, const std::int32_t* g_x,
                                std::int32_t cap, int n) {
  return COARSE_DISPATCH(four_point_row_max, g_z, g_x, cap, n);
}

int four_point_row_first(const std::int32_t* g_z, const std::int32_t* g_x,
                         std::int32_t cap, std::int32_t target, int n) {
  return COARSE_DISPATCH(four_point_row_first, g_z, g_x, cap, target, n);
}

std::int32_t row_max(const std::int32_t* v, int n) {
  return COARSE_DISPATCH(row_max, v, n);
}

bool contains_value(const std::int32_t* v, int n, std::int32_t value) {
  return COARSE_DISPATCH(contains_value, v, n, value);
}

void euclid_sq_row(double qx, double qy, const double* xs, const double* ys,
                   double* out, int n) {
  COARSE_DISPATCH(euclid_sq_row, qx, qy, xs, ys, out, n);
}

void poincare_cosh_row(double qx, double qy, double qs, const double* xs,
                       const double* ys, const double* ss, double* out, int n) {
  COARSE_DISPATCH(poincare_cosh_row, qx, qy, qs, xs, ys, ss, out, n);
}

#undef COARSE_DISPATCH

}  // namespace coarse::kern
