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
#include <stdexcept>
#include <vector>

#include "qgt/bits.hpp"
#include "qgt/multivector.hpp"

namespace qgt {

// Qubit register model on top of the G(2n) engine: Witt generators
//   f_i = (e_i + iota e_{i+n}) / 2,    f_i^dagger = (e_i - iota e_{i+n}) / 2,
// the base idempotent I = f_1 f_1^d ... f_n f_n^d, and the bra/ket
// correspondence |a1..an> <-> (f_1^d)^a1 .. (f_n^d)^an I.

/// f_i, the annihilator-type Witt element.
template <class S>
Multivector<S> witt_f(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("witt index out of range");
  auto half = PseudoComplex<S>(Ring<S>::ratio(1, 2));
  auto half_iota = PseudoComplex<S>(Ring<S>::zero(), Ring<S>::ratio(1, 2));
  Multivector<S> m(n);
  m.add_term(Blade{1} << (i - 1), half);
  m.add_term(Blade{1} << (i - 1 + n), half_iota);
  return m;
}

/// f_i^dagger, the creator-type Witt element.
template <class S>
Multivector<S> witt_fd(int n, int i) {
  return witt_f<S>(n, i).dagger();
}

/// All 2n Witt generators: (f_1..f_n, f_1^d..f_n^d).
template <class S>
std::pair<std::vector<Multivector<S>>, std::vector<Multivector<S>>> witt_generators(int n) {
  std::vector<Multivector<S>> lower, upper;
  for (int i = 1; i <= n; ++i) {
    lower.push_back(witt_f<S>(n, i));
    upper.push_back(witt_fd<S>(n, i));
  }
  return {std::move(lower), std::move(upper)};
}

/// I = f_1 f_1^d f_2 f_2^d ... f_n f_n^d; idempotent, the image of |0..0>.
template <class S>
Multivector<S> base_idempotent(int n) {
  if (n < 1) throw std::invalid_argument("base_idempotent needs n >= 1");
  Multivector<S> acc = witt_f<S>(n, 1) * witt_fd<S>(n, 1);
  for (int i = 2; i <= n; ++i) {
    acc = acc * (witt_f<S>(n, i) * witt_fd<S>(n, i));
  }
  return acc;
}

enum class BasisKind { kKet, kBra };

/// |a1..an> as (f_1^d)^a1 .. (f_n^d)^an I;  <a1..an| as its dagger,
/// I (f_n)^an .. (f_1)^a1.
template <class S>
Multivector<S> basis_element(const BitString& bits, BasisKind kind) {
  int n = bits.width;
  Multivector<S> acc = base_idempotent<S>(n);
  if (kind == BasisKind::kKet) {
    for (int i = n; i >= 1; --i) {
      if (bits.bit(i)) acc = witt_fd<S>(n, i) * acc;
    }
  } else {
    for (int i = n; i >= 1; --i) {
      if (bits.bit(i)) acc = acc * witt_f<S>(n, i);
    }
  }
  return acc;
}

template <class S>
Multivector<S> basis_ket(const BitString& bits) {
  return basis_element<S>(bits, BasisKind::kKet);
}

template <class S>
Multivector<S> basis_bra(const BitString& bits) {
  return basis_element<S>(bits, BasisKind::kBra);
}

/// A register state: an element of the left ideal spanned by the basis kets.
template <class S>
struct RegisterState {
  Multivector<S> psi;
  int width;

  explicit RegisterState(Multivector<S> m) : psi(std::move(m)), width(psi.qubits()) {}
};

/// <bits|state>: 2^n times the scalar-blade coefficient of bra(bits) * psi.
/// The 2^n factor undoes the 2^-n weight of the idempotent, so this is the
/// standard complex amplitude including phase.
template <class S>
PseudoComplex<S> amplitude(const BitString& bits, const RegisterState<S>& state) {
  if (bits.width != state.width) {
    throw std::invalid_argument("amplitude: width mismatch");
  }
  Multivector<S> bra = basis_bra<S>(bits);
  Multivector<S> prod = bra * state.psi;
  PseudoComplex<S> c = prod.scalar_part();
  auto scale = Ring<S>::ratio(1 << bits.width, 1);
  return {c.re * scale, c.im * scale};
}

/// Measurement distribution over coalitions/bitstrings.
struct ProbabilityTable {
  int width = 0;
  std::vector<double> p;  // indexed per the repo convention

  double at(const BitString& b) const { return p.at(b.index()); }
  double sum() const {
    double s = 0;
    for (double v : p) s += v;
    return s;
  }
};

/// |amplitude|^2 per bitstring. Throws if the state is not normalized
/// (probability mass off by more than 1e-6), which signals a protocol bug.
template <class S>
ProbabilityTable probabilities(const RegisterState<S>& state) {
  ProbabilityTable table;
  table.width = state.width;
  table.p.resize(std::size_t{1} << state.width);
  for (std::uint32_t x = 0; x < table.p.size(); ++x) {
    auto amp = amplitude(BitString(state.width, x), state);
    table.p[x] = Ring<S>::to_double(amp.norm2());
  }
  if (std::abs(table.sum() - 1.0) > 1e-6) {
    throw std::runtime_error("probabilities: state is not normalized (sum = " +
                             std::to_string(table.sum()) + ")");
  }
  return table;
}

}  // namespace qgt
