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

#include <complex>
#include <vector>

#include "qgt/witt.hpp"

namespace qgt::oracle {

// Dense complex-matrix simulator used as brute-force ground truth for every
// QRA construction. Deliberately naive: n <= 10 and performance is a
// non-goal. Indexing: row/column = basis index with qubit 1 most significant.

using Complex = std::complex<double>;

class DenseOperator {
 public:
  explicit DenseOperator(int dim);
  static DenseOperator identity(int dim);
  static DenseOperator from_rows(const std::vector<std::vector<Complex>>& rows);

  int dim() const { return dim_; }
  Complex& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const Complex& at(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }

  DenseOperator operator*(const DenseOperator& o) const;
  DenseOperator operator-(const DenseOperator& o) const;
  DenseOperator adjoint() const;
  double max_abs() const;
  double max_abs_diff(const DenseOperator& o) const;
  bool is_unitary(double tol) const;

 private:
  int dim_;
  std::vector<Complex> a_;
};

struct StateVector {
  int qubits = 0;
  std::vector<Complex> amp;

  static StateVector ground(int qubits);
  double norm() const;
  double max_abs_diff(const StateVector& o) const;
};

/// Kronecker product chain; the leftmost factor acts on qubit 1.
DenseOperator tensor(const std::vector<DenseOperator>& ops);

StateVector apply(const DenseOperator& op, const StateVector& v);

/// Applies the circuit to |0..0>, first listed gate first.
StateVector simulate_reference(const std::vector<DenseOperator>& circuit, int n);

// The explicit matrices of the two protocols.
DenseOperator id2();
DenseOperator h_matrix();
DenseOperator u_matrix(double p);
DenseOperator j_matrix(double gamma);
DenseOperator swap_matrix();
DenseOperator cnot_matrix();

/// Matrix image of a QRA operator: column y = amplitudes of op * ket(y).
template <class S>
DenseOperator operator_matrix(const Multivector<S>& op) {
  int n = op.qubits();
  int dim = 1 << n;
  DenseOperator out(dim);
  for (int y = 0; y < dim; ++y) {
    RegisterState<S> col(op * basis_ket<S>(BitString(n, static_cast<std::uint32_t>(y))));
    for (int x = 0; x < dim; ++x) {
      auto a = amplitude(BitString(n, static_cast<std::uint32_t>(x)), col);
      out.at(x, y) = Complex(Ring<S>::to_double(a.re), Ring<S>::to_double(a.im));
    }
  }
  return out;
}

/// Amplitudes of a QRA register state as a dense vector.
template <class S>
StateVector state_vector(const RegisterState<S>& state) {
  StateVector out;
  out.qubits = state.width;
  out.amp.resize(std::size_t{1} << state.width);
  for (std::uint32_t x = 0; x < out.amp.size(); ++x) {
    auto a = amplitude(BitString(state.width, x), state);
    out.amp[x] = Complex(Ring<S>::to_double(a.re), Ring<S>::to_double(a.im));
  }
  return out;
}

}  // namespace qgt::oracle
