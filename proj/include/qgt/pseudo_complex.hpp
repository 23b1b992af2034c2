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

#include <string>

#include "qgt/rings.hpp"

namespace qgt {

/// Pseudo-complex number re + im*iota over the scalar ring S, where iota is
/// the commuting square root of -1 carried by the coefficients (iota = r1 r2
/// in the ambient algebra). Conjugation negates im.
template <class S>
struct PseudoComplex {
  S re = Ring<S>::zero();
  S im = Ring<S>::zero();

  PseudoComplex() = default;
  PseudoComplex(S r) : re(std::move(r)) {}  // NOLINT: implicit real embedding
  PseudoComplex(S r, S i) : re(std::move(r)), im(std::move(i)) {}

  static PseudoComplex zero() { return {}; }
  static PseudoComplex one() { return {Ring<S>::one()}; }
  static PseudoComplex iota() { return {Ring<S>::zero(), Ring<S>::one()}; }

  bool is_zero() const { return Ring<S>::is_zero(re) && Ring<S>::is_zero(im); }

  PseudoComplex conj() const { return {re, -im}; }
  /// Squared magnitude re^2 + im^2 (stays in the ring).
  S norm2() const { return re * re + im * im; }

  PseudoComplex operator-() const { return {-re, -im}; }
  PseudoComplex operator+(const PseudoComplex& o) const { return {re + o.re, im + o.im}; }
  PseudoComplex operator-(const PseudoComplex& o) const { return {re - o.re, im - o.im}; }
  PseudoComplex operator*(const PseudoComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  PseudoComplex& operator+=(const PseudoComplex& o) { return *this = *this + o; }
  PseudoComplex& operator-=(const PseudoComplex& o) { return *this = *this - o; }
  PseudoComplex& operator*=(const PseudoComplex& o) { return *this = *this * o; }

  std::string str() const {
    if (Ring<S>::is_zero(im)) return Ring<S>::str(re);
    std::string out = "(" + Ring<S>::str(re) + ")+(" + Ring<S>::str(im) + ")i";
    return out;
  }
};

}  // namespace qgt
