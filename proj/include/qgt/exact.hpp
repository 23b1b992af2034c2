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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qgt {

using Rational = boost::multiprecision::cpp_rational;

/// Element of the field Q[sqrt(2)]: rat + irr * sqrt(2).
///
/// This is the exact scalar ring of the library. Q alone is not enough:
/// the Hadamard gate and the pi/4 trig values carry a factor 1/sqrt(2),
/// and Q[sqrt(2)] is the smallest field containing all of them.
class Exact {
 public:
  Exact() = default;
  Exact(long v) : rat_(v) {}  // NOLINT: implicit by design, mirrors int literals
  Exact(Rational rat) : rat_(std::move(rat)) {}
  Exact(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

  static Exact ratio(long num, long den) { return Exact(Rational(num, den)); }
  static Exact sqrt2() { return Exact(0, 1); }
  // 1/sqrt(2) == sqrt(2)/2
  static Exact inv_sqrt2() { return Exact(0, Rational(1, 2)); }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }

  bool is_zero() const { return rat_ == 0 && irr_ == 0; }
  bool is_rational() const { return irr_ == 0; }

  Exact operator-() const { return Exact(-rat_, -irr_); }
  Exact operator+(const Exact& o) const { return Exact(rat_ + o.rat_, irr_ + o.irr_); }
  Exact operator-(const Exact& o) const { return Exact(rat_ - o.rat_, irr_ - o.irr_); }
  Exact operator*(const Exact& o) const {
    // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s,  s = sqrt(2)
    return Exact(rat_ * o.rat_ + 2 * irr_ * o.irr_, rat_ * o.irr_ + irr_ * o.rat_);
  }
  Exact& operator+=(const Exact& o) { return *this = *this + o; }
  Exact& operator-=(const Exact& o) { return *this = *this - o; }
  Exact& operator*=(const Exact& o) { return *this = *this * o; }

  bool operator==(const Exact& o) const { return rat_ == o.rat_ && irr_ == o.irr_; }
  bool operator!=(const Exact& o) const { return !(*this == o); }

  double to_double() const;
  std::string str() const;

 private:
  Rational rat_ = 0;
  Rational irr_ = 0;
};

/// Parses "3", "-1/2" or "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace qgt
