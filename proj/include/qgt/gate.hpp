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

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "qgt/angle.hpp"
#include "qgt/witt.hpp"

namespace qgt {

// QRA gate library. Gates are sums of "Witt words": per qubit one of
//   f (annihilator), f^d (creator), f f^d (projector on |0>), f^d f
//   (projector on |1>),
// kept alongside the expanded multivector. The word form is what the
// parallel-composition sign rules operate on; the multivector is the
// operator that acts on register states by left multiplication.

/// Per-qubit slot of a Witt word.
enum class WittOp : std::uint8_t {
  kNone = 0,   // qubit untouched (only before embedding)
  kLower = 1,  // f
  kRaise = 2,  // f^dagger
  kProj0 = 3,  // f f^dagger
  kProj1 = 4,  // f^dagger f
};

/// Grade parity of the slot (number of Witt letters).
inline bool slot_odd_grade(WittOp op) { return op == WittOp::kLower || op == WittOp::kRaise; }

/// Parity of {f, f^d f}-type occurrences; equals the parity of the bit
/// pattern a word requires to act without vanishing.
inline bool slot_odd_occupancy(WittOp op) {
  return op == WittOp::kLower || op == WittOp::kProj1;
}

struct WittWord {
  std::vector<WittOp> slots;

  explicit WittWord(int width) : slots(static_cast<size_t>(width), WittOp::kNone) {}
  int width() const { return static_cast<int>(slots.size()); }
  WittOp slot(int qubit) const { return slots[static_cast<size_t>(qubit - 1)]; }
  void set(int qubit, WittOp op) { slots[static_cast<size_t>(qubit - 1)] = op; }

  bool odd_grade() const {
    bool odd = false;
    for (WittOp op : slots) odd ^= slot_odd_grade(op);
    return odd;
  }
  bool odd_occupancy() const {
    bool odd = false;
    for (WittOp op : slots) odd ^= slot_odd_occupancy(op);
    return odd;
  }

  auto operator<=>(const WittWord&) const = default;
};

template <class S>
struct WittSum {
  int width = 0;
  std::map<WittWord, PseudoComplex<S>> terms;

  void add(const WittWord& w, PseudoComplex<S> c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, std::move(c));
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
};

template <class S>
Multivector<S> expand_word(const WittWord& w) {
  int n = w.width();
  Multivector<S> acc = Multivector<S>::scalar(n, PseudoComplex<S>::one());
  for (int i = 1; i <= n; ++i) {
    switch (w.slot(i)) {
      case WittOp::kNone:
        break;
      case WittOp::kLower:
        acc = acc * witt_f<S>(n, i);
        break;
      case WittOp::kRaise:
        acc = acc * witt_fd<S>(n, i);
        break;
      case WittOp::kProj0:
        acc = acc * (witt_f<S>(n, i) * witt_fd<S>(n, i));
        break;
      case WittOp::kProj1:
        acc = acc * (witt_fd<S>(n, i) * witt_f<S>(n, i));
        break;
    }
  }
  return acc;
}

template <class S>
Multivector<S> expand(const WittSum<S>& sum) {
  Multivector<S> acc(sum.width);
  for (const auto& [w, c] : sum.terms) {
    acc += expand_word<S>(w).scaled(c);
  }
  return acc;
}

/// A gate: multivector acting by left multiplication on the register ideal,
/// with its qubit width and the hull of the qubits it acts on nontrivially.
/// `words` is the Witt word form used by the tensor sign rules; gates built
/// by serial() or gate_from_matrix() do not carry one.
template <class S>
struct GateElement {
  int width = 0;
  int support_lo = 1, support_hi = 0;  // lo > hi means "acts trivially"
  Multivector<S> element;
  std::optional<WittSum<S>> words;

  GateElement() : element(1) {}
  GateElement(int w, Multivector<S> el) : width(w), element(std::move(el)) {}
};

template <class S>
GateElement<S> make_word_gate(WittSum<S> words, int lo, int hi) {
  GateElement<S> g;
  g.width = words.width;
  g.support_lo = lo;
  g.support_hi = hi;
  g.element = expand(words);
  g.words = std::move(words);
  return g;
}

// ---------------------------------------------------------------------------
// Primitive gates at their own width.

/// Identity on n qubits; the J3(0)-style expansion sum of all projector
/// words (which collapses to the scalar 1).
template <class S>
GateElement<S> identity_gate(int n) {
  if (n < 1) throw std::invalid_argument("identity_gate: width must be positive");
  WittSum<S> sum;
  sum.width = n;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    WittWord w(n);
    for (int i = 1; i <= n; ++i) {
      w.set(i, bit_of_index(bits, i, n) ? WittOp::kProj1 : WittOp::kProj0);
    }
    sum.add(w, PseudoComplex<S>::one());
  }
  GateElement<S> g;
  g.width = n;
  g.support_lo = 1;
  g.support_hi = 0;
  g.element = expand(sum);
  g.words = std::move(sum);
  return g;
}

/// H = (f f^d + f + f^d - f^d f) / sqrt(2) on one qubit.
template <class S>
GateElement<S> hadamard() {
  auto r = PseudoComplex<S>(Ring<S>::inv_sqrt2());
  WittSum<S> sum;
  sum.width = 1;
  WittWord w(1);
  w.set(1, WittOp::kProj0);
  sum.add(w, r);
  w.set(1, WittOp::kLower);
  sum.add(w, r);
  w.set(1, WittOp::kRaise);
  sum.add(w, r);
  w.set(1, WittOp::kProj1);
  sum.add(w, -r);
  return make_word_gate(std::move(sum), 1, 1);
}

/// Strategy operator U(p) = sin(p)(f - f^d) + cos(p)(f f^d + f^d f);
/// sends |0> to cos(p)|0> - sin(p)|1>.
template <class S>
GateElement<S> strategy_u(const AngleParam& p) {
  auto sp = PseudoComplex<S>(Ring<S>::sin_of(p));
  auto cp = PseudoComplex<S>(Ring<S>::cos_of(p));
  WittSum<S> sum;
  sum.width = 1;
  WittWord w(1);
  w.set(1, WittOp::kLower);
  sum.add(w, sp);
  w.set(1, WittOp::kRaise);
  sum.add(w, -sp);
  w.set(1, WittOp::kProj0);
  sum.add(w, cp);
  w.set(1, WittOp::kProj1);
  sum.add(w, cp);
  return make_word_gate(std::move(sum), 1, 1);
}

/// EWL entangler on an adjacent pair:
///   J(g) = cos(g/2) (sum of the four projector words)
///        + i sin(g/2) (-f1 f2 + f1 f2^d - f1^d f2 + f1^d f2^d).
template <class S>
GateElement<S> j_entangler(const AngleParam& gamma) {
  auto c = PseudoComplex<S>(Ring<S>::cos_of(gamma.half()));
  auto is = PseudoComplex<S>(Ring<S>::zero(), Ring<S>::sin_of(gamma.half()));
  WittSum<S> sum;
  sum.width = 2;
  const WittOp projs[2] = {WittOp::kProj0, WittOp::kProj1};
  for (WittOp a : projs) {
    for (WittOp b : projs) {
      WittWord w(2);
      w.set(1, a);
      w.set(2, b);
      sum.add(w, c);
    }
  }
  const std::pair<std::pair<WittOp, WittOp>, int> hoppers[4] = {
      {{WittOp::kLower, WittOp::kLower}, -1},
      {{WittOp::kLower, WittOp::kRaise}, +1},
      {{WittOp::kRaise, WittOp::kLower}, -1},
      {{WittOp::kRaise, WittOp::kRaise}, +1},
  };
  for (const auto& [ops, sign] : hoppers) {
    WittWord w(2);
    w.set(1, ops.first);
    w.set(2, ops.second);
    sum.add(w, sign > 0 ? is : -is);
  }
  return make_word_gate(std::move(sum), 1, 2);
}

/// CNOT(1,2) = f1 f1^d f2 f2^d + f1 f1^d f2^d f2 - f1^d f1 f2 - f1^d f1 f2^d.
template <class S>
GateElement<S> cnot_gate() {
  WittSum<S> sum;
  sum.width = 2;
  auto one = PseudoComplex<S>::one();
  const std::tuple<WittOp, WittOp, int> words[4] = {
      {WittOp::kProj0, WittOp::kProj0, +1},
      {WittOp::kProj0, WittOp::kProj1, +1},
      {WittOp::kProj1, WittOp::kLower, -1},
      {WittOp::kProj1, WittOp::kRaise, -1},
  };
  for (const auto& [a, b, sign] : words) {
    WittWord w(2);
    w.set(1, a);
    w.set(2, b);
    sum.add(w, sign > 0 ? one : -one);
  }
  return make_word_gate(std::move(sum), 1, 2);
}

/// SWAP(1,2) = f1 f1^d f2 f2^d - f1 f2^d + f1^d f2 + f1^d f1 f2^d f2.
template <class S>
GateElement<S> swap_gate() {
  WittSum<S> sum;
  sum.width = 2;
  auto one = PseudoComplex<S>::one();
  const std::tuple<WittOp, WittOp, int> words[4] = {
      {WittOp::kProj0, WittOp::kProj0, +1},
      {WittOp::kLower, WittOp::kRaise, -1},
      {WittOp::kRaise, WittOp::kLower, +1},
      {WittOp::kProj1, WittOp::kProj1, +1},
  };
  for (const auto& [a, b, sign] : words) {
    WittWord w(2);
    w.set(1, a);
    w.set(2, b);
    sum.add(w, sign > 0 ? one : -one);
  }
  return make_word_gate(std::move(sum), 1, 2);
}

// ---------------------------------------------------------------------------
// Composition.

namespace detail {

/// Two-gate tensor sign rule: right-factor words with an odd number of
/// letters pick up marker b, left-factor words with an odd occupancy count
/// pick up a; after multiplying, ab -> -1 and lone a, b -> 1.
template <class S>
WittSum<S> witt_parallel(const WittSum<S>& left, const WittSum<S>& right) {
  WittSum<S> out;
  out.width = left.width + right.width;
  for (const auto& [wa, ca] : left.terms) {
    bool a_mark = wa.odd_occupancy();
    for (const auto& [wb, cb] : right.terms) {
      bool b_mark = wb.odd_grade();
      WittWord w(out.width);
      for (int i = 1; i <= left.width; ++i) w.set(i, wa.slot(i));
      for (int i = 1; i <= right.width; ++i) w.set(left.width + i, wb.slot(i));
      PseudoComplex<S> c = ca * cb;
      out.add(w, (a_mark && b_mark) ? -c : c);
    }
  }
  return out;
}

}  // namespace detail

/// Tensor product of a gate on qubits 1..k with a gate on qubits k+1..n,
/// via the two-gate sign rule. Both operands must carry word forms.
template <class S>
GateElement<S> parallel2(const GateElement<S>& a, const GateElement<S>& b) {
  if (!a.words || !b.words) {
    throw std::invalid_argument(
        "parallel2: operand lacks a Witt word form (serial- or matrix-built gates "
        "cannot be tensored directly)");
  }
  WittSum<S> merged = detail::witt_parallel(*a.words, *b.words);
  int lo, hi;
  if (a.support_lo > a.support_hi) {
    lo = b.support_lo + a.width;
    hi = b.support_hi + a.width;
  } else if (b.support_lo > b.support_hi) {
    lo = a.support_lo;
    hi = a.support_hi;
  } else {
    lo = a.support_lo;
    hi = b.support_hi + a.width;
  }
  return make_word_gate(std::move(merged), lo, hi);
}

/// Tensor product of three single-qubit gates via the paper's five-parameter
/// marking rule; cross-checked against iterated two-gate composition, which
/// must produce the identical element.
template <class S>
GateElement<S> parallel3(const GateElement<S>& a, const GateElement<S>& b,
                         const GateElement<S>& c) {
  if (a.width != 1 || b.width != 1 || c.width != 1) {
    throw std::invalid_argument("parallel3: expects three single-qubit gates");
  }
  if (!a.words || !b.words || !c.words) {
    throw std::invalid_argument("parallel3: operand lacks a Witt word form");
  }
  WittSum<S> out;
  out.width = 3;
  for (const auto& [wa, ca] : a.words->terms) {
    bool m_a = slot_odd_occupancy(wa.slot(1));
    for (const auto& [wb, cb] : b.words->terms) {
      bool grade = slot_odd_grade(wb.slot(1));
      bool occ = slot_odd_occupancy(wb.slot(1));
      bool m_b = grade && !occ;
      bool m_c = grade && occ;
      bool m_d = !grade && occ;
      for (const auto& [wc, cc] : c.words->terms) {
        bool m_e = slot_odd_grade(wc.slot(1));
        // Reassignment: a,b,c,d,e,ad,be,abe,ade -> +1; ab,ac,ae,ce,de,ace -> -1.
        bool minus;
        if (m_a) {
          minus = m_e ? (!m_b && !m_d) : (m_b || m_c);  // ae, ace vs ab, ac
        } else {
          minus = m_e && (m_c || m_d);  // ce, de
        }
        WittWord w(3);
        w.set(1, wa.slot(1));
        w.set(2, wb.slot(1));
        w.set(3, wc.slot(1));
        PseudoComplex<S> coeff = ca * cb * cc;
        out.add(w, minus ? -coeff : coeff);
      }
    }
  }
  GateElement<S> by_rule = make_word_gate(std::move(out), 1, 3);
  GateElement<S> by_pairs = parallel2(parallel2(a, b), c);
  if (!(by_rule.element == by_pairs.element)) {
    throw std::logic_error(
        "parallel3: five-parameter rule disagrees with iterated two-gate rule");
  }
  return by_rule;
}

/// Serial circuit: first-applied gate rightmost in the geometric product.
template <class S>
GateElement<S> serial(const std::vector<GateElement<S>>& gates) {
  if (gates.empty()) throw std::invalid_argument("serial: empty gate list");
  int n = gates.front().width;
  Multivector<S> acc = gates.front().element;
  int lo = gates.front().support_lo, hi = gates.front().support_hi;
  for (size_t k = 1; k < gates.size(); ++k) {
    if (gates[k].width != n) throw std::invalid_argument("serial: width mismatch");
    acc = gates[k].element * acc;
    if (gates[k].support_lo <= gates[k].support_hi) {
      if (lo > hi) {
        lo = gates[k].support_lo;
        hi = gates[k].support_hi;
      } else {
        lo = std::min(lo, gates[k].support_lo);
        hi = std::max(hi, gates[k].support_hi);
      }
    }
  }
  GateElement<S> g(n, std::move(acc));
  g.support_lo = lo;
  g.support_hi = hi;
  return g;
}

/// Places a gate at qubit offset `lo` inside an n-qubit register by
/// tensoring identities around it.
template <class S>
GateElement<S> embed(const GateElement<S>& g, int lo, int n) {
  if (lo < 1 || lo + g.width - 1 > n) {
    throw std::invalid_argument("embed: placement out of range");
  }
  GateElement<S> acc = g;
  if (lo > 1) acc = parallel2(identity_gate<S>(lo - 1), acc);
  if (acc.width < n) acc = parallel2(acc, identity_gate<S>(n - acc.width));
  return acc;
}

template <class S>
RegisterState<S> apply(const GateElement<S>& g, const RegisterState<S>& state) {
  if (g.width != state.width) throw std::invalid_argument("apply: width mismatch");
  return RegisterState<S>(g.element * state.psi);
}

// ---------------------------------------------------------------------------
// Placed constructors.

template <class S>
GateElement<S> id_gate(int n) {
  return identity_gate<S>(n);
}

/// H on qubit i; the paper form lives at qubit 1, other positions are
/// reached by SWAP conjugation.
template <class S>
GateElement<S> hadamard(int i, int n);

template <class S>
GateElement<S> strategy_u(const AngleParam& p, int i, int n) {
  return embed(strategy_u<S>(p), i, n);
}

/// J(gamma) on the adjacent pair (s, s+1) of an n-qubit register.
template <class S>
GateElement<S> j_entangler(const AngleParam& gamma, int s, int n) {
  if (s + 1 > n) throw std::invalid_argument("j_entangler: pair out of range");
  return embed(j_entangler<S>(gamma), s, n);
}

template <class S>
GateElement<S> cnot_adjacent(int c, int n) {
  if (c + 1 > n) throw std::invalid_argument("cnot_adjacent: target out of range");
  return embed(cnot_gate<S>(), c, n);
}

template <class S>
GateElement<S> swap_adjacent(int s, int n) {
  if (s + 1 > n) throw std::invalid_argument("swap_adjacent: pair out of range");
  return embed(swap_gate<S>(), s, n);
}

/// General SWAP(s,t): the two-branch middle-projector sum. For every bit
/// pattern of the in-between qubits, both interchange words flip sign with
/// the pattern's parity.
template <class S>
GateElement<S> swap_general(int s, int t, int n) {
  if (!(1 <= s && s < t && t <= n)) {
    throw std::invalid_argument("swap_general: need 1 <= s < t <= n");
  }
  int core_width = t - s + 1;
  int mids = core_width - 2;
  WittSum<S> sum;
  sum.width = core_width;
  auto one = PseudoComplex<S>::one();
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << mids); ++m) {
    bool odd = std::popcount(m) % 2 == 1;
    WittWord base(core_width);
    for (int q = 0; q < mids; ++q) {
      base.set(q + 2, ((m >> q) & 1u) ? WittOp::kProj1 : WittOp::kProj0);
    }
    auto add4 = [&](WittOp first, WittOp last, const PseudoComplex<S>& coeff) {
      WittWord w = base;
      w.set(1, first);
      w.set(core_width, last);
      sum.add(w, coeff);
    };
    add4(WittOp::kProj0, WittOp::kProj0, one);
    add4(WittOp::kRaise, WittOp::kLower, odd ? -one : one);
    add4(WittOp::kLower, WittOp::kRaise, odd ? one : -one);
    add4(WittOp::kProj1, WittOp::kProj1, one);
  }
  return embed(make_word_gate(std::move(sum), 1, core_width), s, n);
}

template <class S>
GateElement<S> hadamard(int i, int n) {
  GateElement<S> at1 = embed(hadamard<S>(), 1, n);
  if (i == 1) return at1;
  if (i < 1 || i > n) throw std::invalid_argument("hadamard: index out of range");
  GateElement<S> sw = swap_general<S>(1, i, n);
  GateElement<S> g = serial<S>({sw, at1, sw});
  g.support_lo = g.support_hi = i;
  return g;
}

/// J(gamma) on a general pair (s, t); non-adjacent pairs are built by SWAP
/// conjugation, the way the paper builds J(gamma_13).
template <class S>
GateElement<S> j_entangler_pair(const AngleParam& gamma, int s, int t, int n) {
  if (!(1 <= s && s < t && t <= n)) {
    throw std::invalid_argument("j_entangler_pair: need 1 <= s < t <= n");
  }
  if (t == s + 1) return j_entangler<S>(gamma, s, n);
  GateElement<S> sw = swap_general<S>(s, t - 1, n);
  GateElement<S> g = serial<S>({sw, j_entangler<S>(gamma, t - 1, n), sw});
  g.support_lo = s;
  g.support_hi = t;
  return g;
}

/// Dyad-built gate with authoritative tensor semantics:
///   sum_{x,y,w} U[x][y] |x,w><y,w|
/// with w ranging over the off-placement qubits. U must be unitary (exactly
/// on exact rings, within 1e-10 on the float ring).
template <class S>
GateElement<S> gate_from_matrix(const std::vector<std::vector<PseudoComplex<S>>>& u, int lo,
                                int n) {
  size_t dim = u.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("gate_from_matrix: dimension must be a power of two, >= 2");
  }
  int k = std::countr_zero(dim);
  if (lo < 1 || lo + k - 1 > n) {
    throw std::invalid_argument("gate_from_matrix: placement out of range");
  }
  for (const auto& row : u) {
    if (row.size() != dim) throw std::invalid_argument("gate_from_matrix: non-square matrix");
  }
  // Unitarity: (U U^dagger - I) must vanish.
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) {
      PseudoComplex<S> acc;
      for (size_t m = 0; m < dim; ++m) acc += u[r][m] * u[c][m].conj();
      if (r == c) acc -= PseudoComplex<S>::one();
      if (!acc.is_zero()) {
        throw std::invalid_argument("gate_from_matrix: matrix is not unitary");
      }
    }
  }

  int rest = n - k;
  auto place_bits = [&](std::uint32_t local, std::uint32_t off) {
    // Interleave: qubits [lo, lo+k) take `local`, the others take `off`.
    std::uint32_t out = 0;
    int off_pos = 1;
    for (int q = 1; q <= n; ++q) {
      int bit;
      if (q >= lo && q < lo + k) {
        bit = bit_of_index(local, q - lo + 1, k);
      } else {
        bit = bit_of_index(off, off_pos, rest == 0 ? 1 : rest);
        ++off_pos;
      }
      if (bit) out = set_bit(out, q, n);
    }
    return out;
  };

  Multivector<S> acc(n);
  for (std::uint32_t x = 0; x < dim; ++x) {
    for (std::uint32_t y = 0; y < dim; ++y) {
      if (u[x][y].is_zero()) continue;
      for (std::uint32_t w = 0; w < (std::uint32_t{1} << rest); ++w) {
        auto ket = basis_ket<S>(BitString(n, place_bits(x, w)));
        auto bra = basis_bra<S>(BitString(n, place_bits(y, w)));
        acc += (ket * bra).scaled(u[x][y]);
      }
    }
  }
  GateElement<S> g(n, std::move(acc));
  g.support_lo = lo;
  g.support_hi = lo + k - 1;
  return g;
}

// ---------------------------------------------------------------------------
// Protocol blocks.

/// Pairwise entangler of the 3-player protocol:
/// (SWAP x Id)(Id x J(g13))(SWAP x Id)(Id x J(g23))(J(g12) x Id).
template <class S>
GateElement<S> j2_block(const AngleParam& g12, const AngleParam& g13, const AngleParam& g23) {
  GateElement<S> sw = embed(swap_gate<S>(), 1, 3);
  return serial<S>({
      j_entangler<S>(g12, 1, 3),
      j_entangler<S>(g23, 2, 3),
      sw,
      j_entangler<S>(g13, 2, 3),
      sw,
  });
}

/// Three-qubit entangler: identity for gamma123 = 0, the GHZ maker
/// (Id x CNOT)(CNOT x Id)(H x Id x Id) for gamma123 = 1.
template <class S>
GateElement<S> j3_gate(int gamma123) {
  if (gamma123 == 0) return identity_gate<S>(3);
  if (gamma123 != 1) {
    throw std::invalid_argument("j3_gate: gamma123 must be 0 or 1");
  }
  return serial<S>({
      embed(hadamard<S>(), 1, 3),
      embed(cnot_gate<S>(), 1, 3),
      embed(cnot_gate<S>(), 2, 3),
  });
}

}  // namespace qgt
