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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgt/gate.hpp"

namespace qgt {

// Textual circuit expressions:
//   expr  := stage (';' stage)*        stages run left to right in time
//   stage := gate ('|' gate)*          '|' composes in parallel
//   gate  := NAME '(' args ')'
// Gates: Id(i), H(i), U(i,angle), J(s,t,angle), SWAP(s,t), CNOT(c,c+1).
// Angles take pi literals ("pi/2", "3pi/8"), decimals, or symbol names.

class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(int line, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + message),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

struct GateApp {
  std::string name;
  std::vector<int> qubits;
  std::optional<AngleParam> angle;
  int line = 1, col = 1;

  int lo() const;
  int hi() const;

  bool operator==(const GateApp& o) const {
    return name == o.name && qubits == o.qubits && angle == o.angle;
  }
};

struct CircuitExpr {
  std::vector<std::vector<GateApp>> stages;

  bool operator==(const CircuitExpr& o) const { return stages == o.stages; }
};

CircuitExpr parse_circuit_expr(const std::string& text);

/// Canonical text form; parses back to an identical tree.
std::string pretty_print(const CircuitExpr& expr);

/// Smallest register width that fits the expression.
int min_width(const CircuitExpr& expr);

/// Validates qubit ranges and parallel-support disjointness for the given
/// width; throws CircuitParseError on violations.
void validate_circuit(const CircuitExpr& expr, int width);

template <class S>
GateElement<S> build_gate(const GateApp& g, int width) {
  auto need_angle = [&]() -> const AngleParam& {
    if (!g.angle) throw CircuitParseError(g.line, g.col, g.name + " needs an angle");
    return *g.angle;
  };
  if (g.name == "Id") return embed(identity_gate<S>(1), g.qubits[0], width);
  if (g.name == "H") return embed(hadamard<S>(), g.qubits[0], width);
  if (g.name == "U") return strategy_u<S>(need_angle(), g.qubits[0], width);
  if (g.name == "J") return j_entangler_pair<S>(need_angle(), g.qubits[0], g.qubits[1], width);
  if (g.name == "SWAP") return swap_general<S>(g.qubits[0], g.qubits[1], width);
  if (g.name == "CNOT") return cnot_adjacent<S>(g.qubits[0], width);
  throw CircuitParseError(g.line, g.col, "unknown gate '" + g.name + "'");
}

/// Parallel operands on disjoint supports compose as the product of their
/// full-width embeddings: (A x Id)(Id x B) = A x B.
template <class S>
GateElement<S> build_stage(const std::vector<GateApp>& stage, int width) {
  std::vector<GateElement<S>> parts;
  parts.reserve(stage.size());
  for (const auto& g : stage) parts.push_back(build_gate<S>(g, width));
  return serial(parts);
}

template <class S>
GateElement<S> build_circuit(const CircuitExpr& expr, int width) {
  validate_circuit(expr, width);
  std::vector<GateElement<S>> stages;
  stages.reserve(expr.stages.size());
  for (const auto& stage : expr.stages) stages.push_back(build_stage<S>(stage, width));
  return serial(stages);
}

}  // namespace qgt
