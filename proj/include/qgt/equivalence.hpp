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
#include <optional>
#include <string>
#include <vector>

#include "qgt/gate.hpp"
#include "qgt/trigpoly.hpp"

namespace qgt {

// Symbolic circuit-equivalence checking over the trig-polynomial ring.
// Equality is operator equality of canonical QRA elements, which is what
// the paper's automated proof checks (it prints the differences S1-S2).

struct EquivalenceReport {
  bool equal = false;
  Multivector<TrigPoly> residual{1};  // canonicalized g1 - g2
  // Numeric angle assignment where the residual is visibly nonzero, when one
  // was found (searched only if `equal` is false).
  std::optional<std::map<std::string, double>> witness;
};

/// Canonicalizes g1 - g2. Equal iff every coefficient reduces to the zero
/// polynomial; on inequality, searches 50 random numeric points (seed
/// 0x5EED) for a witness.
EquivalenceReport symbolic_equal(const GateElement<TrigPoly>& g1,
                                 const GateElement<TrigPoly>& g2);

/// Evaluates every coefficient at the assignment; missing angles throw.
Multivector<double> evaluate(const Multivector<TrigPoly>& mv,
                             const std::map<std::string, double>& angles);

/// Largest |coefficient| (max of real and iota parts) after evaluation.
double max_abs_coefficient(const Multivector<TrigPoly>& mv,
                           const std::map<std::string, double>& angles);

struct OrderingInvarianceReport {
  bool all_equal = false;
  int orderings = 0;
  std::vector<std::string> labels;     // e.g. "ABC"
  std::vector<EquivalenceReport> against_first;
};

/// Builds the three entangler blocks of the 3-player protocol with symbolic
/// angles,
///   A = J(g12) x Id,  B = Id x J(g23),  C = SWAP (Id x J(g13)) SWAP,
/// and proves all 3! serial orderings produce the identical QRA element.
OrderingInvarianceReport prove_j2_ordering_invariance();

}  // namespace qgt
