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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgt/blade.hpp"
#include "qgt/pseudo_complex.hpp"

namespace qgt {

/// Element of QRA(n): a sparse sum of basis blades of G(2n) with
/// pseudo-complex coefficients. Immutable in spirit: operations return new
/// values, and stored coefficients are never zero (eager pruning).
template <class S>
class Multivector {
 public:
  using Coeff = PseudoComplex<S>;
  using TermMap = std::map<Blade, Coeff>;

  explicit Multivector(int qubits) : qubits_(check_qubits(qubits)) {}

  static Multivector zero(int qubits) { return Multivector(qubits); }

  static Multivector scalar(int qubits, Coeff c) {
    Multivector m(qubits);
    m.add_term(kScalarBlade, std::move(c));
    return m;
  }

  static Multivector basis_blade(int qubits, Blade b, Coeff c) {
    Multivector m(qubits);
    if (b >> (2 * qubits)) {
      throw std::invalid_argument("blade does not fit in G(2n) for n = " +
                                  std::to_string(qubits));
    }
    m.add_term(b, std::move(c));
    return m;
  }

  /// The generator e_i, 1 <= i <= 2n.
  static Multivector generator(int qubits, int i) {
    if (i < 1 || i > 2 * qubits) {
      throw std::invalid_argument("generator index out of range");
    }
    return basis_blade(qubits, Blade{1} << (i - 1), Coeff::one());
  }

  int qubits() const { return qubits_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Coeff::zero() : it->second;
  }
  Coeff scalar_part() const { return coefficient(kScalarBlade); }

  void add_term(Blade b, Coeff c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, std::move(c));
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Multivector operator-() const {
    Multivector out(qubits_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
    return out;
  }

  Multivector operator+(const Multivector& o) const {
    check_same_dimension(o);
    Multivector out = *this;
    for (const auto& [b, c] : o.terms_) out.add_term(b, c);
    return out;
  }

  Multivector operator-(const Multivector& o) const {
    check_same_dimension(o);
    Multivector out = *this;
    for (const auto& [b, c] : o.terms_) out.add_term(b, -c);
    return out;
  }

  /// Geometric product, the bilinear extension of blade_product. Iota lives
  /// in the coefficients and commutes with every blade.
  Multivector operator*(const Multivector& o) const {
    check_same_dimension(o);
    Multivector out(qubits_);
    for (const auto& [ba, ca] : terms_) {
      for (const auto& [bb, cb] : o.terms_) {
        auto [sign, b] = blade_product(ba, bb);
        Coeff c = ca * cb;
        out.add_term(b, sign > 0 ? std::move(c) : -c);
      }
    }
    return out;
  }

  Multivector& operator+=(const Multivector& o) { return *this = *this + o; }
  Multivector& operator-=(const Multivector& o) { return *this = *this - o; }
  Multivector& operator*=(const Multivector& o) { return *this = *this * o; }

  Multivector scaled(const Coeff& c) const {
    Multivector out(qubits_);
    for (const auto& [b, t] : terms_) out.add_term(b, t * c);
    return out;
  }

  /// QRA conjugation: reverses each blade and conjugates each coefficient.
  /// Anti-automorphism fixing the generators: (ab)^dagger = b^dagger a^dagger.
  Multivector dagger() const {
    Multivector out(qubits_);
    for (const auto& [b, c] : terms_) {
      Coeff cc = c.conj();
      out.terms_.emplace(b, blade_reversal_sign(b) > 0 ? std::move(cc) : -cc);
    }
    return out;
  }

  bool operator==(const Multivector& o) const {
    return qubits_ == o.qubits_ && (*this - o).is_zero();
  }
  bool operator!=(const Multivector& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "[" + c.str() + "]";
      if (b != kScalarBlade) out += " " + blade_name(b);
    }
    return out;
  }

 private:
  static int check_qubits(int qubits) {
    if (qubits < 1 || qubits > 15) {
      throw std::invalid_argument("qubit count must be in [1, 15]");
    }
    return qubits;
  }

  void check_same_dimension(const Multivector& o) const {
    if (qubits_ != o.qubits_) {
      throw std::invalid_argument("dimension mismatch: QRA(" + std::to_string(qubits_) +
                                  ") vs QRA(" + std::to_string(o.qubits_) + ")");
    }
  }

  int qubits_;
  TermMap terms_;
};

/// Coefficient-wise sum of scaled multivectors.
template <class S>
Multivector<S> linear_combine(
    const std::vector<std::pair<PseudoComplex<S>, Multivector<S>>>& terms) {
  if (terms.empty()) {
    throw std::invalid_argument("linear_combine needs at least one term");
  }
  Multivector<S> out(terms.front().second.qubits());
  for (const auto& [c, mv] : terms) {
    out += mv.scaled(c);
  }
  return out;
}

/// Scalar part of a*b without forming the product: only equal blades hit the
/// scalar, with the sign of b*b. This is the hot path of amplitude
/// extraction.
template <class S>
PseudoComplex<S> scalar_of_product(const Multivector<S>& a, const Multivector<S>& b) {
  if (a.qubits() != b.qubits()) {
    throw std::invalid_argument("dimension mismatch in scalar_of_product");
  }
  PseudoComplex<S> acc;
  const auto& bt = b.terms();
  for (const auto& [blade, ca] : a.terms()) {
    auto it = bt.find(blade);
    if (it == bt.end()) continue;
    PseudoComplex<S> prod = ca * it->second;
    // blade * blade = reversal_sign(blade) in the all-plus signature.
    acc += blade_reversal_sign(blade) > 0 ? prod : -prod;
  }
  return acc;
}

/// Startup sanity check for the adopted signature: with all generators
/// squaring to +1, iota^2 = -1 and the Witt elements are nilpotent. Returns
/// true iff the axioms hold at n = 1.
bool signature_self_test();

}  // namespace qgt
