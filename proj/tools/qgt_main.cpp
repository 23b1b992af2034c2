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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgt/checks.hpp"
#include "qgt/circuit.hpp"
#include "qgt/equivalence.hpp"
#include "qgt/qshapley.hpp"

namespace {

using namespace qgt;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

std::string fmt4(double v) {
  char buf[32];
  // Avoid the "-0.0000" artifact for tiny negatives.
  if (v == 0.0 || (v < 0 && v > -5e-5)) v = 0.0;
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

WeightedMajoritySpec parse_game(const std::string& weights, const std::string& quota) {
  WeightedMajoritySpec spec;
  spec.quota = parse_rational(quota);
  for (const auto& w : split_list(weights)) spec.weights.push_back(parse_rational(w));
  if (spec.weights.empty()) throw std::invalid_argument("--weights needs at least one weight");
  return spec;
}

std::string allocation_str(const Allocation& alloc) {
  std::ostringstream out;
  for (size_t i = 0; i < alloc.size(); ++i) {
    if (i) out << " ";
    out << alloc[i];
  }
  return out.str();
}

std::string percent_str(const Allocation& alloc) {
  std::ostringstream out;
  for (size_t i = 0; i < alloc.size(); ++i) {
    if (i) out << " ";
    out << fmt4(100.0 * to_double(alloc[i])) << "%";
  }
  return out.str();
}

void print_game_header(std::ostream& os, const WeightedMajoritySpec& spec) {
  os << "weighted majority game: weights (";
  for (size_t i = 0; i < spec.weights.size(); ++i) {
    if (i) os << ",";
    os << spec.weights[i];
  }
  os << "), quota " << spec.quota << "\n";
}

void print_result(std::ostream& os, const ValueFunction& v, const QuantumShapleyResult& result) {
  int n = result.probabilities.width;
  double expected = 0;
  for (std::uint32_t mask = 0; mask < result.probabilities.p.size(); ++mask) {
    expected += result.probabilities.p[mask] * to_double(v.worth(mask));
  }
  os << "coalition probabilities:\n";
  for (std::uint32_t mask = 0; mask < result.probabilities.p.size(); ++mask) {
    BitString bits(n, mask);
    os << "  p(" << bits.str() << ") " << Coalition(n, mask).str() << " = "
       << fmt4(result.probabilities.p[mask]) << "\n";
  }
  os << "quantum Shapley values:\n";
  for (int i = 1; i <= n; ++i) {
    double phi = result.allocation[static_cast<size_t>(i - 1)];
    os << "  phi~_" << i << " = " << fmt4(phi) << " (" << fmt4(100 * phi) << "%)\n";
  }
  os << "payoff sum = " << fmt4(result.payoff_sum()) << ", sum p(S)v(S) = " << fmt4(expected)
     << "\n";
}

template <class S>
void print_exact_amplitudes(std::ostream& os, const RegisterState<S>& state) {
  os << "amplitudes:\n";
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << state.width); ++x) {
    BitString bits(state.width, x);
    os << "  amp(" << bits.str() << ") = " << amplitude(bits, state).str() << "\n";
  }
}

// --- subcommand payloads ---------------------------------------------------

struct ClassicArgs {
  std::string weights, quota;
};

int run_classic(const ClassicArgs& args) {
  auto spec = parse_game(args.weights, args.quota);
  auto v = weighted_majority(spec);
  auto violations = validate_simple(v);
  if (!violations.empty()) {
    for (const auto& msg : violations) std::cerr << "invalid simple game: " << msg << "\n";
    return kExitDomainError;
  }
  print_game_header(std::cout, spec);
  Allocation alloc = shapley(v);
  std::cout << "shapley: " << allocation_str(alloc) << "\n";
  std::cout << "percent: " << percent_str(alloc) << "\n";
  return kExitOk;
}

struct Game2Args {
  std::string weights, quota;
  std::string gamma = "0", p1 = "0", p2 = "0";
  std::string ring = "float";
};

int run_game2(const Game2Args& args) {
  auto spec = parse_game(args.weights, args.quota);
  if (spec.weights.size() != 2) {
    throw std::invalid_argument("game2 needs exactly 2 weights");
  }
  auto v = weighted_majority(spec);
  TwoPlayerConfig cfg{parse_angle(args.gamma), parse_angle(args.p1), parse_angle(args.p2)};
  warn_if_outside_protocol_range(cfg.gamma, "gamma");
  warn_if_outside_protocol_range(cfg.p1, "p1");
  warn_if_outside_protocol_range(cfg.p2, "p2");

  print_game_header(std::cout, spec);
  std::cout << "config: gamma=" << cfg.gamma.str() << " p1=" << cfg.p1.str()
            << " p2=" << cfg.p2.str() << "\n";
  std::cout << "classical shapley: " << allocation_str(shapley(v)) << "\n";

  ProbabilityTable probs;
  if (args.ring == "float") {
    probs = probabilities(final_state_2p<double>(cfg));
  } else if (args.ring == "exact") {
    auto state = final_state_2p<Exact>(cfg);
    print_exact_amplitudes(std::cout, state);
    probs = probabilities(state);
  } else {
    throw std::invalid_argument("--ring must be float or exact");
  }
  print_result(std::cout, v, quantum_shapley(v, probs));
  return kExitOk;
}

struct Game3Args {
  std::string weights, quota;
  int gamma123 = 0;
  std::string g12 = "0", g13 = "0", g23 = "0";
  std::string p1 = "0", p2 = "0", p3 = "0";
  std::string ring = "float";
};

int run_game3(const Game3Args& args) {
  auto spec = parse_game(args.weights, args.quota);
  if (spec.weights.size() != 3) {
    throw std::invalid_argument("game3 needs exactly 3 weights");
  }
  auto v = weighted_majority(spec);
  ThreePlayerConfig cfg;
  cfg.gamma123 = args.gamma123;
  cfg.gamma12 = parse_angle(args.g12);
  cfg.gamma13 = parse_angle(args.g13);
  cfg.gamma23 = parse_angle(args.g23);
  cfg.p1 = parse_angle(args.p1);
  cfg.p2 = parse_angle(args.p2);
  cfg.p3 = parse_angle(args.p3);
  warn_if_outside_protocol_range(cfg.gamma12, "gamma12");
  warn_if_outside_protocol_range(cfg.gamma13, "gamma13");
  warn_if_outside_protocol_range(cfg.gamma23, "gamma23");
  warn_if_outside_protocol_range(cfg.p1, "p1");
  warn_if_outside_protocol_range(cfg.p2, "p2");
  warn_if_outside_protocol_range(cfg.p3, "p3");

  print_game_header(std::cout, spec);
  std::cout << "config: gamma123=" << cfg.gamma123 << " gamma12=" << cfg.gamma12.str()
            << " gamma13=" << cfg.gamma13.str() << " gamma23=" << cfg.gamma23.str()
            << " p1=" << cfg.p1.str() << " p2=" << cfg.p2.str() << " p3=" << cfg.p3.str()
            << "\n";
  std::cout << "classical shapley: " << allocation_str(shapley(v)) << "\n";

  ProbabilityTable probs;
  if (args.ring == "float") {
    probs = probabilities(final_state_3p<double>(cfg));
  } else if (args.ring == "exact") {
    auto state = final_state_3p<Exact>(cfg);
    print_exact_amplitudes(std::cout, state);
    probs = probabilities(state);
  } else {
    throw std::invalid_argument("--ring must be float or exact");
  }
  print_result(std::cout, v, quantum_shapley(v, probs));
  return kExitOk;
}

struct SweepArgs {
  std::string weights, quota;
  std::string vary;
  int grid = 101;
  std::string out = "-";
  int gamma123 = 0;
  std::string gamma = "0", g12 = "0", g13 = "0", g23 = "0";
  std::string p1 = "0", p2 = "0", p3 = "0";
};

void write_csv(std::ostream& os, const std::vector<std::string>& axes,
               const std::vector<SweepRow>& rows, int players) {
  os << axes[0];
  for (size_t a = 1; a < axes.size(); ++a) os << "," << axes[a];
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << players); ++mask) {
    os << ",p_" << BitString(players, mask).str();
  }
  for (int i = 1; i <= players; ++i) os << ",phi" << i;
  os << "\n";
  for (const auto& row : rows) {
    for (size_t a = 0; a < row.axis_values.size(); ++a) {
      if (a) os << ",";
      os << fmt_full(row.axis_values[a]);
    }
    for (double p : row.probabilities.p) os << "," << fmt_full(p);
    for (double phi : row.phi) os << "," << fmt_full(phi);
    os << "\n";
  }
}

int run_sweep(const SweepArgs& args) {
  auto spec = parse_game(args.weights, args.quota);
  auto v = weighted_majority(spec);
  auto axes = split_list(args.vary);
  if (axes.empty()) throw std::invalid_argument("--vary needs 1 or 2 parameter names");

  std::vector<SweepRow> rows;
  if (spec.weights.size() == 2) {
    TwoPlayerConfig base{parse_angle(args.gamma), parse_angle(args.p1), parse_angle(args.p2)};
    rows = sweep(base, axes, args.grid, v);
  } else if (spec.weights.size() == 3) {
    ThreePlayerConfig base;
    base.gamma123 = args.gamma123;
    base.gamma12 = parse_angle(args.g12);
    base.gamma13 = parse_angle(args.g13);
    base.gamma23 = parse_angle(args.g23);
    base.p1 = parse_angle(args.p1);
    base.p2 = parse_angle(args.p2);
    base.p3 = parse_angle(args.p3);
    rows = sweep(base, axes, args.grid, v);
  } else {
    throw std::invalid_argument("sweep needs 2 or 3 weights");
  }

  if (args.out == "-") {
    write_csv(std::cout, axes, rows, static_cast<int>(spec.weights.size()));
  } else {
    std::ofstream file(args.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + args.out + "'");
    write_csv(file, axes, rows, static_cast<int>(spec.weights.size()));
  }
  return kExitOk;
}

int run_prove(const std::string& topic) {
  if (topic != "j2-orderings") {
    throw std::invalid_argument("unknown proof topic '" + topic + "' (try j2-orderings)");
  }
  auto report = prove_j2_ordering_invariance();
  int equal = 0;
  for (size_t k = 0; k < report.against_first.size(); ++k) {
    const auto& r = report.against_first[k];
    std::cout << "ordering " << report.labels[k] << ": "
              << (r.equal ? "identical element" : "DIFFERS") << "\n";
    if (r.equal) ++equal;
    if (!r.equal && r.witness) {
      std::cout << "  witness:";
      for (const auto& [name, val] : *r.witness) std::cout << " " << name << "=" << fmt4(val);
      std::cout << "\n";
    }
  }
  if (report.all_equal) {
    std::cout << "PASS " << equal << "/" << report.orderings << " orderings identical\n";
    return kExitOk;
  }
  std::cout << "FAIL " << equal << "/" << report.orderings << " orderings identical\n";
  return kExitDomainError;
}

int run_oracle_check(int draws, unsigned seed) {
  auto results = run_oracle_gate_checks(draws, seed);
  bool pass = true;
  for (const auto& r : results) {
    std::printf("%-18s cases %4d   max deviation %.3e\n", r.name.c_str(), r.cases,
                r.max_deviation);
    pass = pass && r.max_deviation <= 1e-10;
  }
  std::cout << (pass ? "PASS" : "FAIL") << " oracle equivalence suite (threshold 1e-10)\n";
  return pass ? kExitOk : kExitDomainError;
}

struct CircuitArgs {
  std::string expr;
  int width = 0;  // 0 = infer
  std::string ring = "float";
};

template <class S>
void run_circuit_on_ring(const CircuitExpr& expr, int width) {
  auto gate = build_circuit<S>(expr, width);
  RegisterState<S> state(gate.element * base_idempotent<S>(width));
  print_exact_amplitudes(std::cout, state);
  if constexpr (!std::is_same_v<S, TrigPoly>) {
    auto probs = probabilities(state);
    std::cout << "probabilities:\n";
    for (std::uint32_t x = 0; x < probs.p.size(); ++x) {
      std::cout << "  p(" << BitString(width, x).str() << ") = " << fmt4(probs.p[x]) << "\n";
    }
  }
}

int run_circuit(const CircuitArgs& args) {
  auto expr = parse_circuit_expr(args.expr);
  int width = args.width > 0 ? args.width : min_width(expr);
  std::cout << "circuit: " << pretty_print(expr) << "\n";
  std::cout << "width: " << width << "\n";
  if (args.ring == "float") {
    run_circuit_on_ring<double>(expr, width);
  } else if (args.ring == "exact") {
    run_circuit_on_ring<Exact>(expr, width);
  } else if (args.ring == "symbolic") {
    run_circuit_on_ring<TrigPoly>(expr, width);
  } else {
    throw std::invalid_argument("--ring must be float, exact or symbolic");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (!qgt::signature_self_test()) {
    std::cerr << "fatal: QRA signature self-test failed\n";
    return kExitDomainError;
  }

  CLI::App app{"qgt - quantized cooperative games on a Quantum Register Algebra engine"};
  app.require_subcommand(1);

  ClassicArgs classic;
  auto* cmd_classic = app.add_subcommand("classic", "classical Shapley / Shapley-Shubik index");
  cmd_classic->add_option("--weights", classic.weights, "comma-separated player weights")
      ->required();
  cmd_classic->add_option("--quota", classic.quota, "winning quota")->required();

  Game2Args game2;
  auto* cmd_game2 = app.add_subcommand("game2", "two-player quantum cooperative game");
  cmd_game2->add_option("--weights", game2.weights, "two weights")->required();
  cmd_game2->add_option("--quota", game2.quota, "winning quota")->required();
  cmd_game2->add_option("--gamma", game2.gamma, "entanglement angle (default 0)");
  cmd_game2->add_option("--p1", game2.p1, "player 1 strategy angle");
  cmd_game2->add_option("--p2", game2.p2, "player 2 strategy angle");
  cmd_game2->add_option("--ring", game2.ring, "float|exact");

  Game3Args game3;
  auto* cmd_game3 = app.add_subcommand("game3", "three-player quantum cooperative game");
  cmd_game3->add_option("--weights", game3.weights, "three weights")->required();
  cmd_game3->add_option("--quota", game3.quota, "winning quota")->required();
  cmd_game3->add_option("--gamma123", game3.gamma123, "3-qubit entangler flag (0 or 1)");
  cmd_game3->add_option("--gamma12", game3.g12, "pair entanglement angle");
  cmd_game3->add_option("--gamma13", game3.g13, "pair entanglement angle");
  cmd_game3->add_option("--gamma23", game3.g23, "pair entanglement angle");
  cmd_game3->add_option("--p1", game3.p1, "player 1 strategy angle");
  cmd_game3->add_option("--p2", game3.p2, "player 2 strategy angle");
  cmd_game3->add_option("--p3", game3.p3, "player 3 strategy angle");
  cmd_game3->add_option("--ring", game3.ring, "float|exact");

  SweepArgs sweep_args;
  auto* cmd_sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  cmd_sweep->add_option("--weights", sweep_args.weights, "two or three weights")->required();
  cmd_sweep->add_option("--quota", sweep_args.quota, "winning quota")->required();
  cmd_sweep->add_option("--vary", sweep_args.vary, "1-2 parameter names, comma-separated")
      ->required();
  cmd_sweep->add_option("--grid", sweep_args.grid, "points per axis (default 101)");
  cmd_sweep->add_option("--out", sweep_args.out, "output file, '-' for stdout");
  cmd_sweep->add_option("--gamma123", sweep_args.gamma123, "3-qubit entangler flag");
  cmd_sweep->add_option("--gamma", sweep_args.gamma, "2-player entanglement angle");
  cmd_sweep->add_option("--gamma12", sweep_args.g12, "pair entanglement angle");
  cmd_sweep->add_option("--gamma13", sweep_args.g13, "pair entanglement angle");
  cmd_sweep->add_option("--gamma23", sweep_args.g23, "pair entanglement angle");
  cmd_sweep->add_option("--p1", sweep_args.p1, "player 1 strategy angle");
  cmd_sweep->add_option("--p2", sweep_args.p2, "player 2 strategy angle");
  cmd_sweep->add_option("--p3", sweep_args.p3, "player 3 strategy angle");

  std::string prove_topic = "j2-orderings";
  auto* cmd_prove = app.add_subcommand("prove", "symbolic circuit-equivalence proofs");
  cmd_prove->add_option("topic", prove_topic, "proof topic (j2-orderings)");

  int check_draws = 100;
  unsigned check_seed = 12345;
  auto* cmd_check = app.add_subcommand("oracle-check", "gate constructors vs dense matrices");
  cmd_check->add_option("--draws", check_draws, "random parameter draws per family");
  cmd_check->add_option("--seed", check_seed, "RNG seed");

  CircuitArgs circuit;
  auto* cmd_circuit = app.add_subcommand("circuit", "parse and evaluate a circuit expression");
  cmd_circuit->add_option("expr", circuit.expr, "e.g. \"H(1); CNOT(1,2); CNOT(2,3)\"")
      ->required();
  cmd_circuit->add_option("--width", circuit.width, "register width (default: inferred)");
  cmd_circuit->add_option("--ring", circuit.ring, "float|exact|symbolic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    if (app.got_subcommand(cmd_classic)) return run_classic(classic);
    if (app.got_subcommand(cmd_game2)) return run_game2(game2);
    if (app.got_subcommand(cmd_game3)) return run_game3(game3);
    if (app.got_subcommand(cmd_sweep)) return run_sweep(sweep_args);
    if (app.got_subcommand(cmd_prove)) return run_prove(prove_topic);
    if (app.got_subcommand(cmd_check)) return run_oracle_check(check_draws, check_seed);
    if (app.got_subcommand(cmd_circuit)) return run_circuit(circuit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsageError;
}
