// Copyright 2026 The qgt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "qgt/angle.hpp"
#include "qgt/exact.hpp"
#include "qgt/trigpoly.hpp"

namespace qgt {

/// Absolute tolerance below which a floating-point coefficient counts as
/// zero. The single documented constant for the float ring.
inline constexpr double kFloatZeroTolerance = 1e-10;

/// Ring<S> adapts a scalar type to the multivector engine. Scalars of
/// different rings never mix: products are templated on one S, so a mixed
/// expression is a compile error.
template <class S>
struct Ring;

namespace detail {

// cos/sin of k*pi/4 in Q[sqrt2], k taken mod 8.
inline Exact cos_quarter(long k) {
  static const int table[8] = {2, 1, 0, -1, -2, -1, 0, 1};  // value * (2 or sqrt2)
  int t = table[((k % 8) + 8) % 8];
  if (t == 2 || t == -2) return Exact(Rational(t / 2));
  if (t == 0) return Exact(0);
  return Exact(0, Rational(t, 2));  // ±sqrt2/2
}

inline Exact exact_cos(const AngleParam& a) {
  if (!a.is_pi_fraction() || 4 % a.pi_den() != 0) {
    throw std::domain_error("angle " + a.str() +
                            " is not representable on the exact ring (needs a multiple of pi/4)");
  }
  return cos_quarter(a.pi_num() * (4 / a.pi_den()));
}

inline Exact exact_sin(const AngleParam& a) {
  if (!a.is_pi_fraction() || 4 % a.pi_den() != 0) {
    throw std::domain_error("angle " + a.str() +
                            " is not representable on the exact ring (needs a multiple of pi/4)");
  }
  return cos_quarter(a.pi_num() * (4 / a.pi_den()) - 2);  // sin x = cos(x - pi/2)
}

}  // namespace detail

template <>
struct Ring<double> {
  static constexpr bool kExactRing = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double inv_sqrt2() { return 1.0 / std::sqrt(2.0); }
  static bool is_zero(double v) { return std::abs(v) <= kFloatZeroTolerance; }
  static double cos_of(const AngleParam& a) { return std::cos(a.value()); }
  static double sin_of(const AngleParam& a) { return std::sin(a.value()); }
  static double to_double(double v) { return v; }
  static std::string str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
  }
};

template <>
struct Ring<Exact> {
  static constexpr bool kExactRing = true;
  static Exact zero() { return Exact(0); }
  static Exact one() { return Exact(1); }
  static Exact ratio(long num, long den) { return Exact(Rational(num, den)); }
  static Exact inv_sqrt2() { return Exact::inv_sqrt2(); }
  static bool is_zero(const Exact& v) { return v.is_zero(); }
  static Exact cos_of(const AngleParam& a) { return detail::exact_cos(a); }
  static Exact sin_of(const AngleParam& a) { return detail::exact_sin(a); }
  static double to_double(const Exact& v) { return v.to_double(); }
  static std::string str(const Exact& v) { return v.str(); }
};

template <>
struct Ring<TrigPoly> {
  static constexpr bool kExactRing = true;
  static TrigPoly zero() { return TrigPoly(); }
  static TrigPoly one() { return TrigPoly(1); }
  static TrigPoly ratio(long num, long den) { return TrigPoly(Exact(Rational(num, den))); }
  static TrigPoly inv_sqrt2() { return TrigPoly(Exact::inv_sqrt2()); }
  static bool is_zero(const TrigPoly& v) { return v.is_zero(); }
  static TrigPoly cos_of(const AngleParam& a) {
    if (a.is_symbolic()) return TrigPoly::cosine(a.name());
    return TrigPoly(detail::exact_cos(a));
  }
  static TrigPoly sin_of(const AngleParam& a) {
    if (a.is_symbolic()) return TrigPoly::sine(a.name());
    return TrigPoly(detail::exact_sin(a));
  }
  static std::string str(const TrigPoly& v) { return v.str(); }
  // No to_double: symbolic scalars only evaluate at an angle assignment.
};

}  // namespace qgt
