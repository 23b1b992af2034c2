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

#include "qgt/checks.hpp"

#include <numbers>
#include <random>

#include "qgt/gate.hpp"
#include "qgt/oracle.hpp"

namespace qgt {

namespace {

using oracle::DenseOperator;

DenseOperator embed_matrix(const DenseOperator& m, int lo, int k, int n) {
  std::vector<DenseOperator> parts;
  for (int q = 1; q < lo; ++q) parts.push_back(oracle::id2());
  parts.push_back(m);
  for (int q = lo + k; q <= n; ++q) parts.push_back(oracle::id2());
  return oracle::tensor(parts);
}

DenseOperator swap_permutation(int s, int t, int n) {
  DenseOperator out(1 << n);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x) {
    int bs = bit_of_index(x, s, n);
    int bt = bit_of_index(x, t, n);
    std::uint32_t y = x;
    y &= ~((std::uint32_t{1} << (n - s)) | (std::uint32_t{1} << (n - t)));
    if (bt) y = set_bit(y, s, n);
    if (bs) y = set_bit(y, t, n);
    out.at(static_cast<int>(y), static_cast<int>(x)) = 1.0;
  }
  return out;
}

struct Collector {
  std::vector<GateCheckResult> results;
  GateCheckResult* current = nullptr;

  void family(const std::string& name) {
    results.push_back({name, 0, 0.0});
    current = &results.back();
  }

  void check(const GateElement<double>& g, const DenseOperator& expected) {
    double dev = oracle::operator_matrix(g.element).max_abs_diff(expected);
    ++current->cases;
    current->max_deviation = std::max(current->max_deviation, dev);
  }
};

}  // namespace

std::vector<GateCheckResult> run_oracle_gate_checks(int random_draws, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, std::numbers::pi / 2.0);
  auto draw = [&] { return AngleParam::radians(dist(rng)); };

  Collector col;

  col.family("Id");
  for (int n = 1; n <= 3; ++n) {
    col.check(identity_gate<double>(n), DenseOperator::identity(1 << n));
  }

  col.family("H");
  for (int n = 1; n <= 3; ++n) {
    for (int i = 1; i <= n; ++i) {
      col.check(hadamard<double>(i, n), embed_matrix(oracle::h_matrix(), i, 1, n));
    }
  }

  col.family("U");
  for (int k = 0; k < random_draws; ++k) {
    AngleParam p = draw();
    int n = 1 + k % 3;
    int i = 1 + k % n;
    col.check(strategy_u<double>(p, i, n), embed_matrix(oracle::u_matrix(p.value()), i, 1, n));
  }

  col.family("J adjacent");
  for (int k = 0; k < random_draws; ++k) {
    AngleParam g = draw();
    int n = 2 + k % 2;
    int s = 1 + (n > 2 ? k % 2 : 0);
    col.check(j_entangler<double>(g, s, n), embed_matrix(oracle::j_matrix(g.value()), s, 2, n));
  }

  col.family("J general (1,3)");
  for (int k = 0; k < random_draws; ++k) {
    AngleParam g = draw();
    DenseOperator sw = swap_permutation(1, 2, 3);
    DenseOperator expected = sw * embed_matrix(oracle::j_matrix(g.value()), 2, 2, 3) * sw;
    col.check(j_entangler_pair<double>(g, 1, 3, 3), expected);
  }

  col.family("CNOT");
  for (int n = 2; n <= 3; ++n) {
    for (int c = 1; c + 1 <= n; ++c) {
      col.check(cnot_adjacent<double>(c, n), embed_matrix(oracle::cnot_matrix(), c, 2, n));
    }
  }

  col.family("SWAP adjacent");
  for (int n = 2; n <= 3; ++n) {
    for (int s = 1; s + 1 <= n; ++s) {
      col.check(swap_adjacent<double>(s, n), embed_matrix(oracle::swap_matrix(), s, 2, n));
    }
  }

  col.family("SWAP general");
  for (int n = 2; n <= 3; ++n) {
    for (int s = 1; s < n; ++s) {
      for (int t = s + 1; t <= n; ++t) {
        col.check(swap_general<double>(s, t, n), swap_permutation(s, t, n));
      }
    }
  }

  col.family("J2 block");
  for (int k = 0; k < random_draws; ++k) {
    AngleParam g12 = draw(), g13 = draw(), g23 = draw();
    DenseOperator sw = swap_permutation(1, 2, 3);
    DenseOperator expected = sw * embed_matrix(oracle::j_matrix(g13.value()), 2, 2, 3) * sw *
                             embed_matrix(oracle::j_matrix(g23.value()), 2, 2, 3) *
                             embed_matrix(oracle::j_matrix(g12.value()), 1, 2, 3);
    col.check(j2_block<double>(g12, g13, g23), expected);
  }

  col.family("J3");
  col.check(j3_gate<double>(0), DenseOperator::identity(8));
  {
    DenseOperator expected = embed_matrix(oracle::cnot_matrix(), 2, 2, 3) *
                             embed_matrix(oracle::cnot_matrix(), 1, 2, 3) *
                             embed_matrix(oracle::h_matrix(), 1, 1, 3);
    col.check(j3_gate<double>(1), expected);
  }

  col.family("parallel2(U,U)");
  for (int k = 0; k < random_draws; ++k) {
    AngleParam p1 = draw(), p2 = draw();
    col.check(parallel2(strategy_u<double>(p1), strategy_u<double>(p2)),
              oracle::tensor({oracle::u_matrix(p1.value()), oracle::u_matrix(p2.value())}));
  }

  col.family("parallel3(U,U,U)");
  for (int k = 0; k < random_draws; ++k) {
    AngleParam p1 = draw(), p2 = draw(), p3 = draw();
    col.check(parallel3(strategy_u<double>(p1), strategy_u<double>(p2), strategy_u<double>(p3)),
              oracle::tensor({oracle::u_matrix(p1.value()), oracle::u_matrix(p2.value()),
                              oracle::u_matrix(p3.value())}));
  }

  return col.results;
}

}  // namespace qgt
