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

#include <string>
#include <vector>

#include "qgt/coop.hpp"
#include "qgt/gate.hpp"
#include "qgt/oracle.hpp"

namespace qgt {

// The two quantization protocols end to end: build the final state, measure
// coalition probabilities, and average restricted Shapley values over them.

struct TwoPlayerConfig {
  AngleParam gamma;
  AngleParam p1, p2;
};

struct ThreePlayerConfig {
  int gamma123 = 0;  // binary: 0 = identity, 1 = GHZ entangler
  AngleParam gamma12, gamma13, gamma23;
  AngleParam p1, p2, p3;
};

/// (U(p1) x U(p2)) J(gamma) |00>.
template <class S>
RegisterState<S> final_state_2p(const TwoPlayerConfig& cfg) {
  auto entangled = apply(j_entangler<S>(cfg.gamma), RegisterState<S>(base_idempotent<S>(2)));
  auto moves = parallel2(strategy_u<S>(cfg.p1), strategy_u<S>(cfg.p2));
  return apply(moves, entangled);
}

/// (U(p1) x U(p2) x U(p3)) J3(gamma123) J2(gamma12, gamma13, gamma23) |000>.
template <class S>
RegisterState<S> final_state_3p(const ThreePlayerConfig& cfg) {
  auto state = RegisterState<S>(base_idempotent<S>(3));
  state = apply(j2_block<S>(cfg.gamma12, cfg.gamma13, cfg.gamma23), state);
  state = apply(j3_gate<S>(cfg.gamma123), state);
  auto moves =
      parallel3(strategy_u<S>(cfg.p1), strategy_u<S>(cfg.p2), strategy_u<S>(cfg.p3));
  return apply(moves, state);
}

struct QuantumShapleyResult {
  ProbabilityTable probabilities;
  std::vector<double> allocation;  // per player

  double payoff_sum() const {
    double s = 0;
    for (double x : allocation) s += x;
    return s;
  }
};

/// Quantum Shapley value: for each player i,
///   phi~_i = sum over coalitions S owning i of p(S) * shapley(v|S)_i.
QuantumShapleyResult quantum_shapley(const ValueFunction& v, const ProbabilityTable& probs);

/// The closed-form two-player expressions (cos^2/sin^2 weights on v({i}) and
/// phi_i(N, v)); must agree with the circuit path to machine precision.
std::vector<double> closed_form_2p(const ValueFunction& v, const TwoPlayerConfig& cfg);

/// Probability-weight pair (alpha, beta) of the closed form,
/// phi~_i = alpha * v({i}) + beta * phi_i(N, v).
std::pair<double, double> closed_form_weights_2p(int player, const TwoPlayerConfig& cfg);

// Matrix-backend evaluation of the same protocols, for cross-validation.
ProbabilityTable oracle_probabilities_2p(const TwoPlayerConfig& cfg);
ProbabilityTable oracle_probabilities_3p(const ThreePlayerConfig& cfg);

struct SweepRow {
  std::vector<double> axis_values;
  ProbabilityTable probabilities;
  std::vector<double> phi;
};

/// Grid sweep over 1-2 named parameters, [0, pi/2] per axis, row-major in
/// axis order. Rows are deterministic for a fixed request.
std::vector<SweepRow> sweep(const TwoPlayerConfig& base, const std::vector<std::string>& axes,
                            int grid, const ValueFunction& v);
std::vector<SweepRow> sweep(const ThreePlayerConfig& base, const std::vector<std::string>& axes,
                            int grid, const ValueFunction& v);

}  // namespace qgt
