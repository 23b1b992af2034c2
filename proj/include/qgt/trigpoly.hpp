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

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qgt/exact.hpp"

namespace qgt {

/// One angle's contribution to a monomial: cos(angle)^cos_pow * sin(angle)^sin_pow.
struct TrigFactor {
  std::string angle;
  int cos_pow = 0;
  int sin_pow = 0;

  auto operator<=>(const TrigFactor&) const = default;
};

/// Product of factors over distinct angles, sorted by angle name.
using TrigMonomial = std::vector<TrigFactor>;

/// Polynomial in {cos(theta), sin(theta)} indeterminates with Q[sqrt2]
/// coefficients, kept in canonical form: per angle, sin powers are reduced
/// modulo sin^2 = 1 - cos^2, so canonical monomials have sin_pow <= 1.
/// The zero polynomial is the empty term map, which makes the symbolic
/// zero test of the equivalence prover a trivial emptiness check.
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(long v);  // NOLINT: implicit constant, mirrors scalar literals
  explicit TrigPoly(Exact c);

  static TrigPoly cosine(const std::string& angle);
  static TrigPoly sine(const std::string& angle);
  /// Unreduced monomial; call canonicalized() to apply the Pythagorean rule.
  static TrigPoly monomial(TrigMonomial m, Exact coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<TrigMonomial, Exact>& terms() const { return terms_; }

  TrigPoly operator-() const;
  TrigPoly operator+(const TrigPoly& o) const;
  TrigPoly operator-(const TrigPoly& o) const;
  TrigPoly operator*(const TrigPoly& o) const;
  TrigPoly& operator+=(const TrigPoly& o) { return *this = *this + o; }
  TrigPoly& operator-=(const TrigPoly& o) { return *this = *this - o; }
  TrigPoly& operator*=(const TrigPoly& o) { return *this = *this * o; }
  bool operator==(const TrigPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const TrigPoly& o) const { return !(*this == o); }

  /// Rewrites every sin power >= 2 via sin^2 = 1 - cos^2 and merges terms.
  TrigPoly canonicalized() const;

  /// Numeric value at the given angle assignment (radians). Throws if a
  /// symbol of the polynomial is unassigned.
  double eval(const std::map<std::string, double>& angles) const;

  std::set<std::string> symbols() const;
  std::string str() const;

 private:
  void add_term(const TrigMonomial& m, const Exact& c);

  std::map<TrigMonomial, Exact> terms_;
};

}  // namespace qgt
