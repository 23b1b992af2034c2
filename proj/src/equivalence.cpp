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

#include "qgt/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace qgt {

namespace {

constexpr unsigned kWitnessSeed = 0x5EED;
constexpr int kWitnessAttempts = 50;
constexpr double kWitnessTolerance = 1e-10;

std::set<std::string> residual_symbols(const Multivector<TrigPoly>& mv) {
  std::set<std::string> out;
  for (const auto& [blade, coeff] : mv.terms()) {
    auto add = [&out](const TrigPoly& p) {
      auto syms = p.symbols();
      out.insert(syms.begin(), syms.end());
    };
    add(coeff.re);
    add(coeff.im);
  }
  return out;
}

}  // namespace

Multivector<double> evaluate(const Multivector<TrigPoly>& mv,
                             const std::map<std::string, double>& angles) {
  Multivector<double> out(mv.qubits());
  for (const auto& [blade, coeff] : mv.terms()) {
    out.add_term(blade, PseudoComplex<double>(coeff.re.eval(angles), coeff.im.eval(angles)));
  }
  return out;
}

double max_abs_coefficient(const Multivector<TrigPoly>& mv,
                           const std::map<std::string, double>& angles) {
  double m = 0.0;
  for (const auto& [blade, coeff] : mv.terms()) {
    m = std::max(m, std::abs(coeff.re.eval(angles)));
    m = std::max(m, std::abs(coeff.im.eval(angles)));
  }
  return m;
}

EquivalenceReport symbolic_equal(const GateElement<TrigPoly>& g1,
                                 const GateElement<TrigPoly>& g2) {
  if (g1.width != g2.width) {
    throw std::invalid_argument("symbolic_equal: width mismatch");
  }
  EquivalenceReport report;
  report.residual = g1.element - g2.element;  // arithmetic keeps canonical form
  report.equal = report.residual.is_zero();
  if (report.equal) return report;

  auto symbols = residual_symbols(report.residual);
  std::mt19937 rng(kWitnessSeed);
  std::uniform_real_distribution<double> dist(0.0, std::numbers::pi / 2.0);
  for (int attempt = 0; attempt < kWitnessAttempts; ++attempt) {
    std::map<std::string, double> point;
    for (const auto& s : symbols) point[s] = dist(rng);
    if (max_abs_coefficient(report.residual, point) > kWitnessTolerance) {
      report.witness = std::move(point);
      break;
    }
  }
  return report;
}

OrderingInvarianceReport prove_j2_ordering_invariance() {
  using G = GateElement<TrigPoly>;
  const G a = j_entangler<TrigPoly>(AngleParam::symbol("gamma12"), 1, 3);
  const G b = j_entangler<TrigPoly>(AngleParam::symbol("gamma23"), 2, 3);
  const G c = j_entangler_pair<TrigPoly>(AngleParam::symbol("gamma13"), 1, 3, 3);

  const G* blocks[3] = {&a, &b, &c};
  const char names[3] = {'A', 'B', 'C'};
  int order[3] = {0, 1, 2};

  OrderingInvarianceReport report;
  report.all_equal = true;
  std::optional<G> reference;
  do {
    G composed = serial<TrigPoly>(
        {*blocks[order[0]], *blocks[order[1]], *blocks[order[2]]});
    report.labels.push_back(std::string{names[order[0]], names[order[1]], names[order[2]]});
    ++report.orderings;
    if (!reference) {
      reference = composed;
      EquivalenceReport self;
      self.equal = true;
      self.residual = Multivector<TrigPoly>(3);
      report.against_first.push_back(std::move(self));
      continue;
    }
    EquivalenceReport r = symbolic_equal(composed, *reference);
    report.all_equal = report.all_equal && r.equal;
    report.against_first.push_back(std::move(r));
  } while (std::next_permutation(order, order + 3));
  return report;
}

}  // namespace qgt
