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

#include <numbers>
#include <random>

#include "qgt/qshapley.hpp"

using namespace qgt;

namespace {

constexpr double kPi = std::numbers::pi;

ValueFunction example1() {
  return weighted_majority({Rational(1), {Rational(1), Rational(1)}});
}
ValueFunction example2() {
  return weighted_majority({Rational(2), {Rational(1), Rational(2), Rational(1)}});
}

TwoPlayerConfig cfg2(double gamma, double p1, double p2) {
  return {AngleParam::radians(gamma), AngleParam::radians(p1), AngleParam::radians(p2)};
}

std::mt19937 rng(314);
double rand_angle() {
  static std::uniform_real_distribution<double> dist(0.0, kPi / 2);
  return dist(rng);
}

ThreePlayerConfig random_cfg3() {
  ThreePlayerConfig c;
  c.gamma123 = static_cast<int>(rng() % 2);
  c.gamma12 = AngleParam::radians(rand_angle());
  c.gamma13 = AngleParam::radians(rand_angle());
  c.gamma23 = AngleParam::radians(rand_angle());
  c.p1 = AngleParam::radians(rand_angle());
  c.p2 = AngleParam::radians(rand_angle());
  c.p3 = AngleParam::radians(rand_angle());
  return c;
}

}  // namespace

TEST_CASE("two-player final state") {
  // All parameters zero: the game never leaves |00>.
  auto probs = probabilities(final_state_2p<double>(cfg2(0, 0, 0)));
  REQUIRE_THAT(probs.p[0], Catch::Matchers::WithinAbs(1.0, 1e-12));

  // Listing-4 configuration.
  auto listing = probabilities(final_state_2p<double>(cfg2(0, 3 * kPi / 8, kPi / 8)));
  REQUIRE_THAT(listing.p[0b00], Catch::Matchers::WithinAbs(0.1250, 5e-5));
  REQUIRE_THAT(listing.p[0b10], Catch::Matchers::WithinAbs(0.7286, 5e-5));
  REQUIRE_THAT(listing.p[0b01], Catch::Matchers::WithinAbs(0.0214, 5e-5));
  REQUIRE_THAT(listing.p[0b11], Catch::Matchers::WithinAbs(0.1250, 5e-5));

  // Full entanglement, passive players: all-or-nothing.
  auto bell = probabilities(final_state_2p<double>(cfg2(kPi / 2, 0, 0)));
  REQUIRE_THAT(bell.p[0b00], Catch::Matchers::WithinAbs(0.5, 1e-12));
  REQUIRE_THAT(bell.p[0b11], Catch::Matchers::WithinAbs(0.5, 1e-12));
}

TEST_CASE("three-player final state") {
  ThreePlayerConfig passive;  // all parameters zero
  auto probs = probabilities(final_state_3p<double>(passive));
  REQUIRE_THAT(probs.p[0], Catch::Matchers::WithinAbs(1.0, 1e-12));

  ThreePlayerConfig ghz = passive;
  ghz.gamma123 = 1;
  auto gp = probabilities(final_state_3p<double>(ghz));
  REQUIRE_THAT(gp.p[0b000], Catch::Matchers::WithinAbs(0.5, 1e-12));
  REQUIRE_THAT(gp.p[0b111], Catch::Matchers::WithinAbs(0.5, 1e-12));

  // gamma123 = 0, passive strategies: |amp(011)|^2 from the four-term state.
  for (int k = 0; k < 10; ++k) {
    ThreePlayerConfig c = passive;
    double g12 = rand_angle(), g13 = rand_angle(), g23 = rand_angle();
    c.gamma12 = AngleParam::radians(g12);
    c.gamma13 = AngleParam::radians(g13);
    c.gamma23 = AngleParam::radians(g23);
    auto table = probabilities(final_state_3p<double>(c));
    double s12 = std::sin(g12 / 2), c12 = std::cos(g12 / 2);
    double s13 = std::sin(g13 / 2), c13 = std::cos(g13 / 2);
    double s23 = std::sin(g23 / 2), c23 = std::cos(g23 / 2);
    double expected = std::pow(s12 * s13 * c23, 2) + std::pow(c12 * c13 * s23, 2);
    REQUIRE_THAT(table.p[0b011], Catch::Matchers::WithinAbs(expected, 1e-12));
  }
}

TEST_CASE("quantum shapley anchors") {
  auto v = example1();

  // gamma=pi/4, p1=pi/2, p2=pi/4: player 1 reaches 64%.
  auto qs = quantum_shapley(v, probabilities(final_state_2p<double>(cfg2(kPi / 4, kPi / 2, kPi / 4))));
  REQUIRE_THAT(qs.allocation[0], Catch::Matchers::WithinAbs(0.6402, 5e-4));

  // gamma=0, p1=p2=pi/2 recreates the classical Shapley value.
  auto classical = quantum_shapley(v, probabilities(final_state_2p<double>(cfg2(0, kPi / 2, kPi / 2))));
  REQUIRE_THAT(classical.allocation[0], Catch::Matchers::WithinAbs(0.5, 1e-12));
  REQUIRE_THAT(classical.allocation[1], Catch::Matchers::WithinAbs(0.5, 1e-12));

  // Example-2 game under the GHZ configuration: phi~_2 = p(N) * 4/6 = 1/3.
  ThreePlayerConfig ghz;
  ghz.gamma123 = 1;
  auto qs3 = quantum_shapley(example2(), probabilities(final_state_3p<double>(ghz)));
  REQUIRE_THAT(qs3.allocation[1], Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-12));
  REQUIRE_THAT(qs3.allocation[0], Catch::Matchers::WithinAbs(1.0 / 12.0, 1e-12));

  ProbabilityTable wrong;
  wrong.width = 3;
  wrong.p.assign(8, 0.125);
  REQUIRE_THROWS_AS(quantum_shapley(v, wrong), std::invalid_argument);
}

TEST_CASE("closed form reproduces tables 3-5") {
  // Cells as (alpha, beta) in phi~_1 = alpha v({1}) + beta phi_1(N,v), rows
  // p1, columns p2 over {0, pi/4, pi/2}. The printed values are 3-decimal
  // roundings of sin^2/cos^2 at pi/8 multiples. The two starred Table-4
  // corners are printed as beta-cells in the paper but conservation and the
  // final state force them onto v({1}): the state there has no |11>
  // component at all.
  struct Cell {
    double gamma, p1, p2, alpha, beta;
  };
  const double q = kPi / 4, h = kPi / 2;
  std::vector<Cell> cells = {
      // Table 3, gamma = 0
      {0, 0, 0, 0, 0},      {0, 0, q, 0, 0},          {0, 0, h, 0, 0},
      {0, q, 0, 0.5, 0},    {0, q, q, 0.25, 0.25},    {0, q, h, 0, 0.5},
      {0, h, 0, 1, 0},      {0, h, q, 0.5, 0.5},      {0, h, h, 0, 1},
      // Table 4, gamma = pi/4
      {q, 0, 0, 0, 0.146},  {q, 0, q, 0.073, 0.073},  {q, 0, h, 0.146, 0},  // *
      {q, q, 0, 0.427, 0.073}, {q, q, q, 0.25, 0.25}, {q, q, h, 0.073, 0.427},
      {q, h, 0, 0.854, 0},  // *
      {q, h, q, 0.427, 0.427}, {q, h, h, 0, 0.854},
      // Table 5, gamma = pi/2
      {h, 0, 0, 0, 0.5},    {h, 0, q, 0.25, 0.25},    {h, 0, h, 0.5, 0},
      {h, q, 0, 0.25, 0.25}, {h, q, q, 0.25, 0.25},   {h, q, h, 0.25, 0.25},
      {h, h, 0, 0.5, 0},    {h, h, q, 0.25, 0.25},    {h, h, h, 0, 0.5},
  };
  for (const auto& cell : cells) {
    INFO("gamma=" << cell.gamma << " p1=" << cell.p1 << " p2=" << cell.p2);
    auto [alpha, beta] = closed_form_weights_2p(1, cfg2(cell.gamma, cell.p1, cell.p2));
    REQUIRE_THAT(alpha, Catch::Matchers::WithinAbs(cell.alpha, 5e-4));
    REQUIRE_THAT(beta, Catch::Matchers::WithinAbs(cell.beta, 5e-4));
  }

  // Spot value: Table 4 cell (0, pi/4) on Example 1 evaluates to
  // 0.073 v({1}) + 0.073 phi_1(N,v).
  auto phi = closed_form_2p(example1(), cfg2(q, 0, q));
  REQUIRE_THAT(phi[0], Catch::Matchers::WithinAbs(0.073 * 1 + 0.073 * 0.5, 2e-3));
}

TEST_CASE("closed form agrees with the circuit") {
  auto v = example1();
  ValueFunction general(2);
  general.set_worth(Coalition(2, 0b10), Rational(2, 3));
  general.set_worth(Coalition(2, 0b01), Rational(1, 5));
  general.set_worth(Coalition(2, 0b11), Rational(3, 2));
  for (const auto& game : {v, general}) {
    for (int k = 0; k < 100; ++k) {
      auto cfg = cfg2(rand_angle(), rand_angle(), rand_angle());
      auto closed = closed_form_2p(game, cfg);
      auto circuit = quantum_shapley(game, probabilities(final_state_2p<double>(cfg)));
      REQUIRE_THAT(closed[0], Catch::Matchers::WithinAbs(circuit.allocation[0], 1e-12));
      REQUIRE_THAT(closed[1], Catch::Matchers::WithinAbs(circuit.allocation[1], 1e-12));
    }
  }
}

TEST_CASE("probability conservation and payoff-sum identity") {
  auto v2 = example1();
  auto v3 = example2();
  for (int k = 0; k < 100; ++k) {
    auto c = cfg2(rand_angle(), rand_angle(), rand_angle());
    auto probs = probabilities(final_state_2p<double>(c));
    REQUIRE_THAT(probs.sum(), Catch::Matchers::WithinAbs(1.0, 1e-10));
    auto qs = quantum_shapley(v2, probs);
    double expected = 0;
    for (std::uint32_t mask = 0; mask < 4; ++mask) {
      expected += probs.p[mask] * to_double(v2.worth(mask));
    }
    REQUIRE_THAT(qs.payoff_sum(), Catch::Matchers::WithinAbs(expected, 1e-10));
  }
  for (int k = 0; k < 60; ++k) {
    auto c = random_cfg3();
    auto probs = probabilities(final_state_3p<double>(c));
    REQUIRE_THAT(probs.sum(), Catch::Matchers::WithinAbs(1.0, 1e-10));
    auto qs = quantum_shapley(v3, probs);
    double expected = 0;
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      expected += probs.p[mask] * to_double(v3.worth(mask));
    }
    REQUIRE_THAT(qs.payoff_sum(), Catch::Matchers::WithinAbs(expected, 1e-10));
  }
}

TEST_CASE("register backend matches the matrix backend") {
  for (int k = 0; k < 100; ++k) {
    auto c = cfg2(rand_angle(), rand_angle(), rand_angle());
    auto qra = probabilities(final_state_2p<double>(c));
    auto mat = oracle_probabilities_2p(c);
    for (size_t i = 0; i < qra.p.size(); ++i) {
      REQUIRE_THAT(qra.p[i], Catch::Matchers::WithinAbs(mat.p[i], 1e-10));
    }
  }
  for (int k = 0; k < 60; ++k) {
    auto c = random_cfg3();
    auto qra = probabilities(final_state_3p<double>(c));
    auto mat = oracle_probabilities_3p(c);
    for (size_t i = 0; i < qra.p.size(); ++i) {
      REQUIRE_THAT(qra.p[i], Catch::Matchers::WithinAbs(mat.p[i], 1e-10));
    }
  }
}

TEST_CASE("sweeps") {
  auto v = example2();
  ThreePlayerConfig base;  // Figure-3 configuration: all gammas 0, p2 = 0.

  SECTION("figure-3 anchor at the far corner") {
    auto rows = sweep(base, {"p1", "p3"}, 5, v);
    REQUIRE(rows.size() == 25);
    const auto& corner = rows.back();
    REQUIRE_THAT(corner.axis_values[0], Catch::Matchers::WithinAbs(kPi / 2, 1e-15));
    REQUIRE_THAT(corner.axis_values[1], Catch::Matchers::WithinAbs(kPi / 2, 1e-15));
    REQUIRE_THAT(corner.probabilities.p[0b101], Catch::Matchers::WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(corner.phi[0], Catch::Matchers::WithinAbs(0.5, 1e-12));
    REQUIRE_THAT(corner.phi[2], Catch::Matchers::WithinAbs(0.5, 1e-12));
  }

  SECTION("player 1<->3 relabeling symmetry on symmetric configurations") {
    ThreePlayerConfig sym = base;
    sym.gamma12 = AngleParam::radians(0.4);
    sym.gamma23 = AngleParam::radians(0.4);
    int grid = 5;
    auto rows = sweep(sym, {"p1", "p3"}, grid, v);
    for (int a = 0; a < grid; ++a) {
      for (int b = 0; b < grid; ++b) {
        const auto& xy = rows[static_cast<size_t>(a * grid + b)];
        const auto& yx = rows[static_cast<size_t>(b * grid + a)];
        REQUIRE_THAT(xy.phi[0], Catch::Matchers::WithinAbs(yx.phi[2], 1e-10));
      }
    }
  }

  SECTION("row-count and error cases") {
    auto rows = sweep(base, {"p1"}, 2, v);
    REQUIRE(rows.size() == 2);
    REQUIRE_THROWS_AS(sweep(base, {"nosuch"}, 5, v), std::invalid_argument);
    REQUIRE_THROWS_AS(sweep(base, {"p1"}, 1, v), std::invalid_argument);
    REQUIRE_THROWS_AS(sweep(base, {"p1", "p2", "p3"}, 3, v), std::invalid_argument);
    TwoPlayerConfig b2{AngleParam::radians(0), AngleParam::radians(0), AngleParam::radians(0)};
    REQUIRE_THROWS_AS(sweep(b2, {"p1"}, 3, v), std::invalid_argument);  // 3-player game
  }
}
