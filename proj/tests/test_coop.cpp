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

#include "qgt/coop.hpp"

using namespace qgt;

namespace {

// Example 1: two players, weights (1,1), quota 1.
ValueFunction example1() {
  return weighted_majority({Rational(1), {Rational(1), Rational(1)}});
}

// Example 2: three players, weights (1,2,1), quota 2.
ValueFunction example2() {
  return weighted_majority({Rational(2), {Rational(1), Rational(2), Rational(1)}});
}

ValueFunction random_game(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 8);
  ValueFunction v(n);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    v.set_worth(Coalition(n, mask), Rational(num(rng), 3));
  }
  return v;
}

}  // namespace

TEST_CASE("weighted majority games") {
  auto v1 = example1();
  REQUIRE(v1.worth(Coalition(2, 0b10)) == 1);  // {1}
  REQUIRE(v1.worth(Coalition(2, 0b01)) == 1);  // {2}
  REQUIRE(v1.worth(Coalition(2, 0b11)) == 1);
  REQUIRE(v1.worth(std::uint32_t{0}) == 0);

  auto v2 = example2();
  REQUIRE(v2.worth(Coalition(3, 0b100)) == 0);  // {1}
  REQUIRE(v2.worth(Coalition(3, 0b010)) == 1);  // {2}
  REQUIRE(v2.worth(Coalition(3, 0b101)) == 1);  // {1,3}

  REQUIRE_THROWS_AS(weighted_majority({Rational(0), {Rational(1)}}), std::invalid_argument);
  REQUIRE_THROWS_AS(weighted_majority({Rational(3), {Rational(1), Rational(1)}}),
                    std::invalid_argument);
}

TEST_CASE("simple game validation") {
  REQUIRE(validate_simple(example1()).empty());
  REQUIRE(validate_simple(example2()).empty());

  ValueFunction losing(2);  // v(N) = 0
  REQUIRE_FALSE(validate_simple(losing).empty());

  ValueFunction nonmono(2);
  nonmono.set_worth(Coalition(2, 0b10), 1);
  nonmono.set_worth(Coalition(2, 0b11), 0);
  auto violations = validate_simple(nonmono);
  bool found = false;
  for (const auto& msg : violations) found = found || msg.find("monotonicity") == 0;
  REQUIRE(found);

  ValueFunction scaled(1);
  scaled.set_worth(Coalition(1, 1), Rational(2));
  REQUIRE_THROWS_AS(validate_simple(scaled), std::invalid_argument);
}

TEST_CASE("shapley values of the two worked examples") {
  auto phi1 = shapley(example1());
  REQUIRE(phi1 == Allocation{Rational(1, 2), Rational(1, 2)});

  auto phi2 = shapley(example2());
  REQUIRE(phi2 == Allocation{Rational(1, 6), Rational(2, 3), Rational(1, 6)});

  ValueFunction solo(1);
  solo.set_worth(Coalition(1, 1), Rational(7, 3));
  REQUIRE(shapley(solo) == Allocation{Rational(7, 3)});
}

TEST_CASE("subset formula equals permutation enumeration") {
  std::mt19937 rng(42);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < 12; ++k) {
      auto v = random_game(n, rng);
      REQUIRE(shapley(v) == shapley_by_permutations(v));
    }
  }
  REQUIRE(shapley(example2()) == shapley_by_permutations(example2()));
}

TEST_CASE("shapley efficiency and symmetry") {
  std::mt19937 rng(43);
  for (int n = 1; n <= 5; ++n) {
    auto v = random_game(n, rng);
    auto phi = shapley(v);
    Rational sum = 0;
    for (const auto& x : phi) sum += x;
    REQUIRE(sum == v.grand_worth());
  }
  // Players 1 and 3 of Example 2 are interchangeable and get equal payoff.
  auto phi = shapley(example2());
  REQUIRE(phi[0] == phi[2]);
}

TEST_CASE("restriction") {
  auto v2 = example2();
  auto only2 = restrict(v2, Coalition(3, 0b010));
  REQUIRE(only2.players() == 1);
  REQUIRE(only2.worth(Coalition(1, 1)) == 1);

  auto pair13 = restrict(v2, Coalition(3, 0b101));
  REQUIRE(pair13.players() == 2);
  REQUIRE(pair13.worth(Coalition(2, 0b10)) == 0);
  REQUIRE(pair13.worth(Coalition(2, 0b01)) == 0);
  REQUIRE(pair13.worth(Coalition(2, 0b11)) == 1);
  auto phi = shapley(pair13);
  REQUIRE(phi == Allocation{Rational(1, 2), Rational(1, 2)});
  REQUIRE(phi == shapley_by_permutations(pair13));

  // Restricting to the full player set is the identity.
  auto full = restrict(v2, Coalition(3, 0b111));
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    REQUIRE(full.worth(mask) == v2.worth(mask));
  }

  REQUIRE_THROWS_AS(restrict(v2, Coalition(3, 0)), std::invalid_argument);
}

TEST_CASE("value function guards") {
  ValueFunction v(2);
  REQUIRE_THROWS_AS(v.set_worth(Coalition(2, 0), Rational(1)), std::invalid_argument);
  REQUIRE_THROWS_AS(v.set_worth(Coalition(3, 1), Rational(1)), std::invalid_argument);
  REQUIRE(Coalition(3, 0b101).str() == "{1,3}");
  REQUIRE(Coalition(3, 0).str() == "{}");
}
