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

#include "qgt/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qgt::oracle {

DenseOperator::DenseOperator(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("operator dimension must be a power of two");
  }
}

DenseOperator DenseOperator::identity(int dim) {
  DenseOperator out(dim);
  for (int i = 0; i < dim; ++i) out.at(i, i) = 1.0;
  return out;
}

DenseOperator DenseOperator::from_rows(const std::vector<std::vector<Complex>>& rows) {
  DenseOperator out(static_cast<int>(rows.size()));
  for (int r = 0; r < out.dim_; ++r) {
    if (static_cast<int>(rows[r].size()) != out.dim_) {
      throw std::invalid_argument("non-square matrix");
    }
    for (int c = 0; c < out.dim_; ++c) out.at(r, c) = rows[r][c];
  }
  return out;
}

DenseOperator DenseOperator::operator*(const DenseOperator& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matmul dimension mismatch");
  DenseOperator out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) {
      Complex v = at(r, k);
      if (v == Complex{}) continue;
      for (int c = 0; c < dim_; ++c) out.at(r, c) += v * o.at(k, c);
    }
  }
  return out;
}

DenseOperator DenseOperator::operator-(const DenseOperator& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  DenseOperator out(dim_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out.at(r, c) = std::conj(at(c, r));
  }
  return out;
}

double DenseOperator::max_abs() const {
  double m = 0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double DenseOperator::max_abs_diff(const DenseOperator& o) const {
  return (*this - o).max_abs();
}

bool DenseOperator::is_unitary(double tol) const {
  return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
}

StateVector StateVector::ground(int qubits) {
  StateVector v;
  v.qubits = qubits;
  v.amp.assign(std::size_t{1} << qubits, 0.0);
  v.amp[0] = 1.0;
  return v;
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& v : amp) s += std::norm(v);
  return std::sqrt(s);
}

double StateVector::max_abs_diff(const StateVector& o) const {
  double m = 0;
  for (size_t i = 0; i < amp.size(); ++i) m = std::max(m, std::abs(amp[i] - o.amp[i]));
  return m;
}

DenseOperator tensor(const std::vector<DenseOperator>& ops) {
  if (ops.empty()) return DenseOperator::identity(1);
  DenseOperator acc = ops.front();
  for (size_t k = 1; k < ops.size(); ++k) {
    const DenseOperator& b = ops[k];
    DenseOperator out(acc.dim() * b.dim());
    for (int ra = 0; ra < acc.dim(); ++ra) {
      for (int ca = 0; ca < acc.dim(); ++ca) {
        for (int rb = 0; rb < b.dim(); ++rb) {
          for (int cb = 0; cb < b.dim(); ++cb) {
            out.at(ra * b.dim() + rb, ca * b.dim() + cb) = acc.at(ra, ca) * b.at(rb, cb);
          }
        }
      }
    }
    acc = std::move(out);
  }
  return acc;
}

StateVector apply(const DenseOperator& op, const StateVector& v) {
  if (op.dim() != static_cast<int>(v.amp.size())) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  StateVector out;
  out.qubits = v.qubits;
  out.amp.assign(v.amp.size(), 0.0);
  for (int r = 0; r < op.dim(); ++r) {
    for (int c = 0; c < op.dim(); ++c) out.amp[r] += op.at(r, c) * v.amp[c];
  }
  return out;
}

StateVector simulate_reference(const std::vector<DenseOperator>& circuit, int n) {
  StateVector v = StateVector::ground(n);
  for (const auto& op : circuit) v = apply(op, v);
  return v;
}

DenseOperator id2() { return DenseOperator::identity(2); }

DenseOperator h_matrix() {
  double r = 1.0 / std::sqrt(2.0);
  return DenseOperator::from_rows({{r, r}, {r, -r}});
}

DenseOperator u_matrix(double p) {
  double c = std::cos(p), s = std::sin(p);
  return DenseOperator::from_rows({{c, s}, {-s, c}});
}

DenseOperator j_matrix(double gamma) {
  Complex c = std::cos(gamma / 2);
  Complex is = Complex(0, 1) * std::sin(gamma / 2);
  return DenseOperator::from_rows({{c, 0, 0, is},
                                   {0, c, -is, 0},
                                   {0, -is, c, 0},
                                   {is, 0, 0, c}});
}

DenseOperator swap_matrix() {
  return DenseOperator::from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
}

DenseOperator cnot_matrix() {
  return DenseOperator::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

}  // namespace qgt::oracle
