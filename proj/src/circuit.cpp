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

#include "qgt/circuit.hpp"

#include <algorithm>
#include <cctype>

namespace qgt {

namespace {

struct GateSpec {
  int qubit_args;
  bool has_angle;
};

// name -> (number of qubit arguments, trailing angle argument)
const std::map<std::string, GateSpec>& gate_table() {
  static const std::map<std::string, GateSpec> table = {
      {"Id", {1, false}},   {"H", {1, false}},    {"U", {1, true}},
      {"J", {2, true}},     {"SWAP", {2, false}}, {"CNOT", {2, false}},
  };
  return table;
}

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" +
           (pos_ < text_.size() ? std::string(", found '") + text_[pos_] + "'"
                                : std::string(", found end of input")));
    }
    advance();
  }

  bool consume(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a gate name");
    }
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  /// Raw argument token: everything up to ',' or ')'.
  std::string argument() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
        continue;
      }
      out += text_[pos_];
      advance();
    }
    if (out.empty()) fail("expected an argument");
    return out;
  }

  int line() const { return line_; }
  int col() const { return col_; }

  [[noreturn]] void fail(const std::string& msg) { throw CircuitParseError(line_, col_, msg); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

int parse_qubit(Scanner& sc, const std::string& token) {
  try {
    size_t used = 0;
    int q = std::stoi(token, &used);
    if (used != token.size() || q < 1) throw std::invalid_argument("bad");
    return q;
  } catch (const std::exception&) {
    sc.fail("expected a qubit index, found '" + token + "'");
  }
}

GateApp parse_gate(Scanner& sc) {
  GateApp g;
  sc.skip_space();
  g.line = sc.line();
  g.col = sc.col();
  g.name = sc.identifier();
  auto it = gate_table().find(g.name);
  if (it == gate_table().end()) {
    throw CircuitParseError(g.line, g.col, "unknown gate '" + g.name + "'");
  }
  const GateSpec& spec = it->second;
  sc.expect('(');
  std::vector<std::string> args;
  if (sc.peek() != ')') {
    args.push_back(sc.argument());
    while (sc.consume(',')) args.push_back(sc.argument());
  }
  sc.expect(')');
  size_t expected = static_cast<size_t>(spec.qubit_args) + (spec.has_angle ? 1 : 0);
  if (args.size() != expected) {
    throw CircuitParseError(g.line, g.col,
                            g.name + " takes " + std::to_string(expected) + " argument(s), got " +
                                std::to_string(args.size()));
  }
  for (int k = 0; k < spec.qubit_args; ++k) {
    g.qubits.push_back(parse_qubit(sc, args[static_cast<size_t>(k)]));
  }
  if (spec.has_angle) {
    try {
      g.angle = parse_angle(args.back());
    } catch (const std::invalid_argument& e) {
      throw CircuitParseError(g.line, g.col, e.what());
    }
  }
  return g;
}

}  // namespace

int GateApp::lo() const { return *std::min_element(qubits.begin(), qubits.end()); }
int GateApp::hi() const { return *std::max_element(qubits.begin(), qubits.end()); }

CircuitExpr parse_circuit_expr(const std::string& text) {
  Scanner sc(text);
  CircuitExpr expr;
  if (sc.done()) sc.fail("empty circuit expression");
  for (;;) {
    std::vector<GateApp> stage;
    stage.push_back(parse_gate(sc));
    while (sc.consume('|')) stage.push_back(parse_gate(sc));
    expr.stages.push_back(std::move(stage));
    if (!sc.consume(';')) break;
  }
  if (!sc.done()) sc.fail("trailing input after circuit expression");
  return expr;
}

std::string pretty_print(const CircuitExpr& expr) {
  std::string out;
  for (size_t s = 0; s < expr.stages.size(); ++s) {
    if (s) out += " ; ";
    for (size_t g = 0; g < expr.stages[s].size(); ++g) {
      if (g) out += " | ";
      const GateApp& gate = expr.stages[s][g];
      out += gate.name + "(";
      for (size_t q = 0; q < gate.qubits.size(); ++q) {
        if (q) out += ",";
        out += std::to_string(gate.qubits[q]);
      }
      if (gate.angle) {
        if (!gate.qubits.empty()) out += ",";
        out += gate.angle->str();
      }
      out += ")";
    }
  }
  return out;
}

int min_width(const CircuitExpr& expr) {
  int w = 1;
  for (const auto& stage : expr.stages) {
    for (const auto& g : stage) w = std::max(w, g.hi());
  }
  return w;
}

void validate_circuit(const CircuitExpr& expr, int width) {
  for (const auto& stage : expr.stages) {
    for (const auto& g : stage) {
      if (g.hi() > width) {
        throw CircuitParseError(g.line, g.col,
                                g.name + " touches qubit " + std::to_string(g.hi()) +
                                    " but the register width is " + std::to_string(width));
      }
      if (g.qubits.size() == 2) {
        if (g.qubits[0] >= g.qubits[1]) {
          throw CircuitParseError(g.line, g.col, g.name + " needs qubit arguments s < t");
        }
        if (g.name == "CNOT" && g.qubits[1] != g.qubits[0] + 1) {
          throw CircuitParseError(g.line, g.col, "CNOT supports adjacent qubits only");
        }
      }
    }
    // Parallel operands must occupy disjoint qubit ranges (the hull counts:
    // a J(1,3) keeps qubit 2 busy through its middle projectors).
    for (size_t i = 0; i < stage.size(); ++i) {
      for (size_t j = i + 1; j < stage.size(); ++j) {
        bool disjoint = stage[i].hi() < stage[j].lo() || stage[j].hi() < stage[i].lo();
        if (!disjoint) {
          throw CircuitParseError(stage[j].line, stage[j].col,
                                  "overlapping parallel supports: " + stage[i].name + " and " +
                                      stage[j].name);
        }
      }
    }
  }
}

}  // namespace qgt
