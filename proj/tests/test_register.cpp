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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qgt/gate.hpp"
#include "qgt/oracle.hpp"
#include "qgt/witt.hpp"

using namespace qgt;

TEST_CASE("witt generators") {
  // n=2: f1 = (e1 + iota e3)/2
  auto f1 = witt_f<Exact>(2, 1);
  REQUIRE(f1.coefficient(0b0001).re == Exact::ratio(1, 2));
  REQUIRE(f1.coefficient(0b0100).im == Exact::ratio(1, 2));
  // n=3: f1 = (e1 + iota e4)/2
  auto g1 = witt_f<Exact>(3, 1);
  REQUIRE(g1.coefficient(0b000001).re == Exact::ratio(1, 2));
  REQUIRE(g1.coefficient(0b001000).im == Exact::ratio(1, 2));

  auto [lower, upper] = witt_generators<Exact>(3);
  for (int i = 0; i < 3; ++i) {
    REQUIRE(lower[i].dagger() == upper[i]);
  }
}

TEST_CASE("base idempotent") {
  // n=1: I = (1 - iota e1e2)/2
  auto idem = base_idempotent<Exact>(1);
  REQUIRE(idem.scalar_part().re == Exact::ratio(1, 2));
  REQUIRE(idem.coefficient(0b11).im == Exact::ratio(-1, 2));

  for (int n = 1; n <= 3; ++n) {
    auto i_n = base_idempotent<Exact>(n);
    REQUIRE(i_n * i_n == i_n);
    REQUIRE(i_n.scalar_part().re == Exact(Rational(1, 1 << n)));
    REQUIRE(i_n.scalar_part().im == Exact(0));
  }
}

TEST_CASE("basis elements") {
  REQUIRE(basis_ket<Exact>(BitString::parse("000")) == base_idempotent<Exact>(3));
  // |10> = f1^d I
  auto n2_i = base_idempotent<Exact>(2);
  REQUIRE(basis_ket<Exact>(BitString::parse("10")) == witt_fd<Exact>(2, 1) * n2_i);
  // <11| = I f2 f1 = |11>^dagger
  auto bra11 = basis_bra<Exact>(BitString::parse("11"));
  REQUIRE(bra11 == n2_i * witt_f<Exact>(2, 2) * witt_f<Exact>(2, 1));
  for (int n = 1; n <= 3; ++n) {
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      BitString bits(n, x);
      REQUIRE(basis_bra<Exact>(bits) == basis_ket<Exact>(bits).dagger());
    }
  }
}

TEST_CASE("amplitude round trip is the identity matrix") {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      RegisterState<Exact> ket(basis_ket<Exact>(BitString(n, x)));
      for (std::uint32_t y = 0; y < (1u << n); ++y) {
        auto a = amplitude(BitString(n, y), ket);
        REQUIRE(a.im == Exact(0));
        REQUIRE(a.re == Exact(x == y ? 1 : 0));
      }
    }
  }
}

TEST_CASE("amplitude anchors") {
  RegisterState<Exact> ground(base_idempotent<Exact>(2));
  REQUIRE(amplitude(BitString::parse("00"), ground).re == Exact(1));

  // J(pi/2)|00> = cos(pi/4)|00> + i sin(pi/4)|11>
  auto bell = apply(j_entangler<Exact>(AngleParam::pi_fraction(1, 2)), ground);
  auto a00 = amplitude(BitString::parse("00"), bell);
  auto a11 = amplitude(BitString::parse("11"), bell);
  REQUIRE(a00.re == Exact::inv_sqrt2());
  REQUIRE(a00.im == Exact(0));
  REQUIRE(a11.re == Exact(0));
  REQUIRE(a11.im == Exact::inv_sqrt2());
  REQUIRE(amplitude(BitString::parse("01"), bell).is_zero());

  REQUIRE_THROWS_AS(amplitude(BitString::parse("000"), bell), std::invalid_argument);
}

TEST_CASE("probabilities") {
  RegisterState<Exact> ground(base_idempotent<Exact>(3));
  auto table = probabilities(ground);
  REQUIRE(table.p[0] == 1.0);
  for (size_t k = 1; k < table.p.size(); ++k) REQUIRE(table.p[k] == 0.0);

  // Listing-4 configuration: gamma=0, p1=3pi/8, p2=pi/8.
  auto u = parallel2(strategy_u<double>(AngleParam::pi_fraction(3, 8)),
                     strategy_u<double>(AngleParam::pi_fraction(1, 8)));
  RegisterState<double> psi(u.element * base_idempotent<double>(2));
  auto probs = probabilities(psi);
  REQUIRE_THAT(probs.p[0b00], Catch::Matchers::WithinAbs(0.1250, 5e-5));
  REQUIRE_THAT(probs.p[0b10], Catch::Matchers::WithinAbs(0.7286, 5e-5));
  REQUIRE_THAT(probs.p[0b01], Catch::Matchers::WithinAbs(0.0214, 5e-5));
  REQUIRE_THAT(probs.p[0b11], Catch::Matchers::WithinAbs(0.1250, 5e-5));
  auto a10 = amplitude(BitString::parse("10"), psi);
  REQUIRE_THAT(a10.norm2(), Catch::Matchers::WithinAbs(0.7286, 5e-5));

  // GHZ
  auto ghz = apply(j3_gate<double>(1), RegisterState<double>(base_idempotent<double>(3)));
  auto gt = probabilities(ghz);
  REQUIRE_THAT(gt.p[0], Catch::Matchers::WithinAbs(0.5, 1e-12));
  REQUIRE_THAT(gt.p[7], Catch::Matchers::WithinAbs(0.5, 1e-12));

  // A non-normalized element is a protocol bug.
  RegisterState<double> bad(base_idempotent<double>(2).scaled(PseudoComplex<double>(2.0)));
  REQUIRE_THROWS_AS(probabilities(bad), std::runtime_error);
}

TEST_CASE("gates are unitary when witnessed through measurement") {
  std::vector<GateElement<double>> gates = {
      hadamard<double>(1, 2),
      strategy_u<double>(AngleParam::radians(0.9), 2, 2),
      j_entangler<double>(AngleParam::radians(0.4)),
      cnot_adjacent<double>(1, 2),
      swap_general<double>(1, 3, 3),
      j2_block<double>(AngleParam::radians(0.3), AngleParam::radians(0.8),
                       AngleParam::radians(1.2)),
      j3_gate<double>(1),
  };
  for (const auto& g : gates) {
    for (std::uint32_t x = 0; x < (1u << g.width); ++x) {
      auto out = apply(g, RegisterState<double>(basis_ket<double>(BitString(g.width, x))));
      REQUIRE_THAT(probabilities(out).sum(), Catch::Matchers::WithinAbs(1.0, 1e-10));
    }
  }
}

TEST_CASE("amplitudes agree with the dense oracle on random circuits") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> dist(0.0, 1.5707963267948966);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 3;
    RegisterState<double> psi(base_idempotent<double>(n));
    std::vector<oracle::DenseOperator> reference;

    int layers = 1 + trial % 3;
    for (int layer = 0; layer < layers; ++layer) {
      // One strategy rotation somewhere, plus an entangler when n >= 2.
      int target = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
      double p = dist(rng);
      psi = apply(strategy_u<double>(AngleParam::radians(p), target, n), psi);
      std::vector<oracle::DenseOperator> row;
      for (int q = 1; q <= n; ++q) {
        row.push_back(q == target ? oracle::u_matrix(p) : oracle::id2());
      }
      reference.push_back(oracle::tensor(row));
      if (n >= 2) {
        int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        double g = dist(rng);
        psi = apply(j_entangler<double>(AngleParam::radians(g), s, n), psi);
        std::vector<oracle::DenseOperator> jrow;
        for (int q = 1; q <= n; ++q) {
          if (q == s) {
            jrow.push_back(oracle::j_matrix(g));
          } else if (q != s + 1) {
            jrow.push_back(oracle::id2());
          }
        }
        reference.push_back(oracle::tensor(jrow));
      }
    }
    auto expected = oracle::simulate_reference(reference, n);
    REQUIRE(oracle::state_vector(psi).max_abs_diff(expected) <= 1e-12);
  }
}
