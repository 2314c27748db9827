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
#include <numeric>
#include <string>

#include "coarse/error.hpp"

namespace coarse {

/// Exact ratio of 64-bit integers, normalized (gcd 1, positive denominator).
/// Used for Cheeger ratios and the pole bound, where floating point would
/// break exact comparisons.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) raise(errc::invalid_argument, "rational", "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static Rational of(long long n) { return Rational(n, 1); }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  Rational reciprocal() const { return Rational(den, num); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce before multiplying so intermediate products stay small.
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    long long g = std::gcd(a.den, b.den);
    long long lcm = (a.den / g) * b.den;
    return Rational(a.num * (lcm / a.den) + b.num * (lcm / b.den), lcm);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

}  // namespace coarse
