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

#include "qgt/qshapley.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qgt {

namespace {

// Shapley values of every restricted game, flattened to doubles; computed
// once and reused across grid points.
struct RestrictedShapleyTable {
  int players = 0;
  // phi[mask][j] = shapley of restrict(v, mask) for the j-th member (ascending).
  std::vector<std::vector<double>> phi;

  static RestrictedShapleyTable build(const ValueFunction& v) {
    RestrictedShapleyTable t;
    t.players = v.players();
    t.phi.resize(std::size_t{1} << t.players);
    for (std::uint32_t mask = 1; mask < t.phi.size(); ++mask) {
      Coalition s(t.players, mask);
      Allocation alloc = shapley(restrict(v, s));
      std::vector<double> row;
      row.reserve(alloc.size());
      for (const auto& x : alloc) row.push_back(to_double(x));
      t.phi[mask] = std::move(row);
    }
    return t;
  }

  std::vector<double> allocate(const ProbabilityTable& probs) const {
    std::vector<double> alloc(static_cast<size_t>(players), 0.0);
    for (std::uint32_t mask = 1; mask < t_size(); ++mask) {
      double p = probs.p[mask];
      if (p == 0.0) continue;
      Coalition s(players, mask);
      int j = 0;
      for (int player : s.members()) {
        alloc[static_cast<size_t>(player - 1)] += p * phi[mask][static_cast<size_t>(j++)];
      }
    }
    return alloc;
  }

 private:
  std::uint32_t t_size() const { return static_cast<std::uint32_t>(phi.size()); }
};

ProbabilityTable table_from_state(const oracle::StateVector& v) {
  ProbabilityTable t;
  t.width = v.qubits;
  t.p.reserve(v.amp.size());
  for (const auto& a : v.amp) t.p.push_back(std::norm(a));
  return t;
}

void warn_config(const TwoPlayerConfig& cfg) {
  warn_if_outside_protocol_range(cfg.gamma, "gamma");
  warn_if_outside_protocol_range(cfg.p1, "p1");
  warn_if_outside_protocol_range(cfg.p2, "p2");
}

void warn_config(const ThreePlayerConfig& cfg) {
  warn_if_outside_protocol_range(cfg.gamma12, "gamma12");
  warn_if_outside_protocol_range(cfg.gamma13, "gamma13");
  warn_if_outside_protocol_range(cfg.gamma23, "gamma23");
  warn_if_outside_protocol_range(cfg.p1, "p1");
  warn_if_outside_protocol_range(cfg.p2, "p2");
  warn_if_outside_protocol_range(cfg.p3, "p3");
}

}  // namespace

QuantumShapleyResult quantum_shapley(const ValueFunction& v, const ProbabilityTable& probs) {
  if (probs.width != v.players()) {
    throw std::invalid_argument("quantum_shapley: probability table width != player count");
  }
  auto table = RestrictedShapleyTable::build(v);
  QuantumShapleyResult result;
  result.probabilities = probs;
  result.allocation = table.allocate(probs);
  return result;
}

std::pair<double, double> closed_form_weights_2p(int player, const TwoPlayerConfig& cfg) {
  double c2 = std::pow(std::cos(cfg.gamma.value() / 2), 2);
  double s2 = std::pow(std::sin(cfg.gamma.value() / 2), 2);
  double sp1 = std::pow(std::sin(cfg.p1.value()), 2);
  double cp1 = std::pow(std::cos(cfg.p1.value()), 2);
  double sp2 = std::pow(std::sin(cfg.p2.value()), 2);
  double cp2 = std::pow(std::cos(cfg.p2.value()), 2);
  double solo = player == 1 ? c2 * sp1 * cp2 + s2 * cp1 * sp2   // p({1})
                            : c2 * cp1 * sp2 + s2 * sp1 * cp2;  // p({2})
  double grand = c2 * sp1 * sp2 + s2 * cp1 * cp2;               // p(N)
  return {solo, grand};
}

std::vector<double> closed_form_2p(const ValueFunction& v, const TwoPlayerConfig& cfg) {
  if (v.players() != 2) throw std::invalid_argument("closed_form_2p: needs a 2-player game");
  std::vector<double> out(2);
  for (int i = 1; i <= 2; ++i) {
    auto [solo, grand] = closed_form_weights_2p(i, cfg);
    double v_own = to_double(v.worth(std::uint32_t(i == 1 ? 2 : 1)));
    double v_other = to_double(v.worth(std::uint32_t(i == 1 ? 1 : 2)));
    double v_grand = to_double(v.worth(std::uint32_t(3)));
    // phi_i({i}) = v({i}); phi_i(N, v) = v({i})/2 + (v(N) - v(N\{i}))/2.
    double phi_grand = v_own / 2 + (v_grand - v_other) / 2;
    out[static_cast<size_t>(i - 1)] = solo * v_own + grand * phi_grand;
  }
  return out;
}

ProbabilityTable oracle_probabilities_2p(const TwoPlayerConfig& cfg) {
  using namespace oracle;
  std::vector<DenseOperator> circuit = {
      j_matrix(cfg.gamma.value()),
      tensor({u_matrix(cfg.p1.value()), u_matrix(cfg.p2.value())}),
  };
  return table_from_state(simulate_reference(circuit, 2));
}

ProbabilityTable oracle_probabilities_3p(const ThreePlayerConfig& cfg) {
  using namespace oracle;
  DenseOperator swap01 = tensor({swap_matrix(), id2()});
  std::vector<DenseOperator> circuit = {
      tensor({j_matrix(cfg.gamma12.value()), id2()}),
      tensor({id2(), j_matrix(cfg.gamma23.value())}),
      swap01,
      tensor({id2(), j_matrix(cfg.gamma13.value())}),
      swap01,
  };
  if (cfg.gamma123 == 1) {
    circuit.push_back(tensor({h_matrix(), id2(), id2()}));
    circuit.push_back(tensor({cnot_matrix(), id2()}));
    circuit.push_back(tensor({id2(), cnot_matrix()}));
  } else if (cfg.gamma123 != 0) {
    throw std::invalid_argument("gamma123 must be 0 or 1");
  }
  circuit.push_back(
      tensor({u_matrix(cfg.p1.value()), u_matrix(cfg.p2.value()), u_matrix(cfg.p3.value())}));
  return table_from_state(simulate_reference(circuit, 3));
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::vector<double> grid_values(int grid) {
  if (grid < 2) throw std::invalid_argument("sweep: grid must be >= 2");
  std::vector<double> vals(static_cast<size_t>(grid));
  for (int k = 0; k < grid; ++k) {
    vals[static_cast<size_t>(k)] = kHalfPi * k / (grid - 1);
  }
  return vals;
}

void set_param(TwoPlayerConfig& c, const std::string& name, double v) {
  if (name == "gamma") {
    c.gamma = AngleParam::radians(v);
  } else if (name == "p1") {
    c.p1 = AngleParam::radians(v);
  } else if (name == "p2") {
    c.p2 = AngleParam::radians(v);
  } else {
    throw std::invalid_argument("unknown 2-player sweep parameter '" + name + "'");
  }
}

void set_param(ThreePlayerConfig& c, const std::string& name, double v) {
  if (name == "gamma12") {
    c.gamma12 = AngleParam::radians(v);
  } else if (name == "gamma13") {
    c.gamma13 = AngleParam::radians(v);
  } else if (name == "gamma23") {
    c.gamma23 = AngleParam::radians(v);
  } else if (name == "p1") {
    c.p1 = AngleParam::radians(v);
  } else if (name == "p2") {
    c.p2 = AngleParam::radians(v);
  } else if (name == "p3") {
    c.p3 = AngleParam::radians(v);
  } else {
    throw std::invalid_argument("unknown 3-player sweep parameter '" + name + "'");
  }
}

// Precomputed bras make the per-point measurement a 2^n sparse dot product.
class Measurer {
 public:
  explicit Measurer(int width) : width_(width) {
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << width); ++x) {
      bras_.push_back(basis_bra<double>(BitString(width, x)));
    }
  }

  ProbabilityTable measure(const Multivector<double>& psi) const {
    ProbabilityTable t;
    t.width = width_;
    t.p.reserve(bras_.size());
    double scale = static_cast<double>(1 << width_);
    for (const auto& bra : bras_) {
      auto c = scalar_of_product(bra, psi);
      t.p.push_back(scale * scale * c.norm2());
    }
    return t;
  }

 private:
  int width_;
  std::vector<Multivector<double>> bras_;
};

std::vector<double> prefix_key(const TwoPlayerConfig& c) { return {c.gamma.value()}; }

std::vector<double> prefix_key(const ThreePlayerConfig& c) {
  return {c.gamma12.value(), c.gamma13.value(), c.gamma23.value(),
          static_cast<double>(c.gamma123)};
}

Multivector<double> prefix_state(const TwoPlayerConfig& c) {
  return j_entangler<double>(c.gamma).element * base_idempotent<double>(2);
}

Multivector<double> prefix_state(const ThreePlayerConfig& c) {
  auto psi = j2_block<double>(c.gamma12, c.gamma13, c.gamma23).element *
             base_idempotent<double>(3);
  return j3_gate<double>(c.gamma123).element * psi;
}

template <class UOf>
Multivector<double> moves_element(const TwoPlayerConfig& c, UOf&& u_of) {
  return parallel2(u_of(c.p1), u_of(c.p2)).element;
}

template <class UOf>
Multivector<double> moves_element(const ThreePlayerConfig& c, UOf&& u_of) {
  return parallel3(u_of(c.p1), u_of(c.p2), u_of(c.p3)).element;
}

template <class Config>
std::vector<SweepRow> run_sweep(const Config& base, const std::vector<std::string>& axes,
                                int grid, const ValueFunction& v,
                                int width) {
  if (axes.empty() || axes.size() > 2) {
    throw std::invalid_argument("sweep: need 1 or 2 axis names");
  }
  if (v.players() != width) {
    throw std::invalid_argument("sweep: game size does not match the protocol");
  }
  {
    // Validate axis names up front so the error precedes any output.
    Config probe = base;
    for (const auto& name : axes) set_param(probe, name, 0.0);
  }
  warn_config(base);

  auto values = grid_values(grid);
  auto shapley_table = RestrictedShapleyTable::build(v);
  Measurer measurer(width);

  // Per-axis-value caches; the entangling prefix and the strategy gates are
  // the two expensive constructions.
  std::map<std::vector<double>, Multivector<double>> prefix_cache;
  std::map<double, GateElement<double>> u_cache;

  auto prefix_of = [&](const Config& c) -> const Multivector<double>& {
    std::vector<double> key = prefix_key(c);
    auto it = prefix_cache.find(key);
    if (it == prefix_cache.end()) {
      it = prefix_cache.emplace(std::move(key), prefix_state(c)).first;
    }
    return it->second;
  };
  auto u_of = [&](const AngleParam& p) -> const GateElement<double>& {
    double val = p.value();
    auto it = u_cache.find(val);
    if (it == u_cache.end()) {
      it = u_cache.emplace(val, strategy_u<double>(AngleParam::radians(val))).first;
    }
    return it->second;
  };

  std::vector<SweepRow> rows;
  std::vector<std::size_t> idx(axes.size(), 0);
  std::size_t total = 1;
  for (size_t a = 0; a < axes.size(); ++a) total *= values.size();
  rows.reserve(total);

  for (std::size_t flat = 0; flat < total; ++flat) {
    // Row-major over the axis order given.
    std::size_t rem = flat;
    for (size_t a = axes.size(); a-- > 0;) {
      idx[a] = rem % values.size();
      rem /= values.size();
    }
    Config point = base;
    SweepRow row;
    for (size_t a = 0; a < axes.size(); ++a) {
      double val = values[idx[a]];
      set_param(point, axes[a], val);
      row.axis_values.push_back(val);
    }
    Multivector<double> psi = moves_element(point, u_of) * prefix_of(point);
    row.probabilities = measurer.measure(psi);
    row.phi = shapley_table.allocate(row.probabilities);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> sweep(const TwoPlayerConfig& base, const std::vector<std::string>& axes,
                            int grid, const ValueFunction& v) {
  return run_sweep(base, axes, grid, v, 2);
}

std::vector<SweepRow> sweep(const ThreePlayerConfig& base, const std::vector<std::string>& axes,
                            int grid, const ValueFunction& v) {
  return run_sweep(base, axes, grid, v, 3);
}

}  // namespace qgt
