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

#include "qgt/equivalence.hpp"

using namespace qgt;

namespace {

GateElement<TrigPoly> block_a() {
  return j_entangler<TrigPoly>(AngleParam::symbol("gamma12"), 1, 3);
}
GateElement<TrigPoly> block_b() {
  return j_entangler<TrigPoly>(AngleParam::symbol("gamma23"), 2, 3);
}
GateElement<TrigPoly> block_c() {
  return j_entangler_pair<TrigPoly>(AngleParam::symbol("gamma13"), 1, 3, 3);
}

}  // namespace

TEST_CASE("symbolic equality of identical gates") {
  auto g = block_a();
  auto report = symbolic_equal(g, g);
  REQUIRE(report.equal);
  REQUIRE(report.residual.is_zero());
  REQUIRE_FALSE(report.witness.has_value());
}

TEST_CASE("the two adjacent entangler blocks commute") {
  auto ab = serial<TrigPoly>({block_a(), block_b()});
  auto ba = serial<TrigPoly>({block_b(), block_a()});
  auto report = symbolic_equal(ab, ba);
  REQUIRE(report.equal);
}

TEST_CASE("distinct operators produce a witness") {
  auto j = j_entangler<TrigPoly>(AngleParam::symbol("gamma"), 1, 2);
  auto id = identity_gate<TrigPoly>(2);
  auto report = symbolic_equal(j, id);
  REQUIRE_FALSE(report.equal);
  REQUIRE(report.witness.has_value());
  // The residual is visibly nonzero at the witness point.
  REQUIRE(max_abs_coefficient(report.residual, *report.witness) > 1e-10);
  // gamma = pi/2 is itself a witness.
  REQUIRE(max_abs_coefficient(report.residual, {{"gamma/2", 0.7853981633974483}}) > 0.5);
}

TEST_CASE("mixed widths are rejected") {
  REQUIRE_THROWS_AS(symbolic_equal(j_entangler<TrigPoly>(AngleParam::symbol("g")),
                                   identity_gate<TrigPoly>(3)),
                    std::invalid_argument);
}

TEST_CASE("ordering invariance of the pairwise entangler") {
  auto report = prove_j2_ordering_invariance();
  REQUIRE(report.orderings == 6);
  REQUIRE(report.all_equal);
  for (const auto& r : report.against_first) {
    REQUIRE(r.equal);
    REQUIRE(r.residual.is_zero());  // exact ring, no tolerance
  }

  // Soundness: the symbolic zero evaluates to zero at random numeric points.
  auto abc = serial<TrigPoly>({block_a(), block_b(), block_c()});
  auto cba = serial<TrigPoly>({block_c(), block_b(), block_a()});
  auto residual = abc.element - cba.element;
  std::mt19937 rng(0x5EED);
  std::uniform_real_distribution<double> dist(0.0, 1.5707963267948966);
  for (int k = 0; k < 20; ++k) {
    std::map<std::string, double> point{{"gamma12/2", dist(rng)},
                                        {"gamma13/2", dist(rng)},
                                        {"gamma23/2", dist(rng)}};
    REQUIRE(max_abs_coefficient(residual, point) <= 1e-10);
  }
}

TEST_CASE("the Listing-style mixed-angle block still commutes") {
  // Mimics the paper's J13 listing typo: a (2,3)-pair entangler whose cosine
  // uses gamma13 but whose sine uses an unrelated angle. It is a linear
  // combination of Id and the same two-qubit interchange string, so it still
  // commutes with the genuine blocks; equality of all orderings must hold.
  WittSum<TrigPoly> sum;
  sum.width = 3;
  auto cos13 = PseudoComplex<TrigPoly>(TrigPoly::cosine("gamma13/2"));
  auto isin23x = PseudoComplex<TrigPoly>(TrigPoly(), TrigPoly::sine("gamma23x/2"));
  const WittOp projs[2] = {WittOp::kProj0, WittOp::kProj1};
  for (WittOp a : projs) {
    for (WittOp b : projs) {
      WittWord w(3);
      w.set(1, WittOp::kProj0);
      w.set(2, a);
      w.set(3, b);
      sum.add(w, cos13);
      WittWord w2(3);
      w2.set(1, WittOp::kProj1);
      w2.set(2, a);
      w2.set(3, b);
      sum.add(w2, cos13);
    }
  }
  const std::pair<std::pair<WittOp, WittOp>, int> hoppers[4] = {
      {{WittOp::kLower, WittOp::kLower}, -1},
      {{WittOp::kLower, WittOp::kRaise}, +1},
      {{WittOp::kRaise, WittOp::kLower}, -1},
      {{WittOp::kRaise, WittOp::kRaise}, +1},
  };
  for (WittOp first : projs) {
    for (const auto& [ops, sign] : hoppers) {
      WittWord w(3);
      w.set(1, first);
      w.set(2, ops.first);
      w.set(3, ops.second);
      sum.add(w, sign > 0 ? isin23x : -isin23x);
    }
  }
  auto mixed_pair23 = make_word_gate(std::move(sum), 2, 3);
  auto sw = embed(swap_gate<TrigPoly>(), 1, 3);
  auto typo_block = serial<TrigPoly>({sw, mixed_pair23, sw});

  auto ab_t = serial<TrigPoly>({block_a(), block_b(), typo_block});
  auto t_ab = serial<TrigPoly>({typo_block, block_a(), block_b()});
  auto a_t_b = serial<TrigPoly>({block_a(), typo_block, block_b()});
  REQUIRE(symbolic_equal(ab_t, t_ab).equal);
  REQUIRE(symbolic_equal(ab_t, a_t_b).equal);
}

TEST_CASE("degenerate case: all blocks share one angle symbol") {
  auto g = AngleParam::symbol("g");
  auto a = j_entangler<TrigPoly>(g, 1, 3);
  auto b = j_entangler<TrigPoly>(g, 2, 3);
  auto c = j_entangler_pair<TrigPoly>(g, 1, 3, 3);
  auto abc = serial<TrigPoly>({a, b, c});
  auto cab = serial<TrigPoly>({c, a, b});
  auto bca = serial<TrigPoly>({b, c, a});
  REQUIRE(symbolic_equal(abc, cab).equal);
  REQUIRE(symbolic_equal(abc, bca).equal);
}

TEST_CASE("general swap symbolically equals its adjacent decomposition") {
  auto direct = swap_general<TrigPoly>(1, 3, 3);
  auto composed = serial<TrigPoly>({swap_adjacent<TrigPoly>(2, 3), swap_adjacent<TrigPoly>(1, 3),
                                    swap_adjacent<TrigPoly>(2, 3)});
  auto report = symbolic_equal(direct, composed);
  REQUIRE(report.equal);
  REQUIRE(report.residual.is_zero());
}
