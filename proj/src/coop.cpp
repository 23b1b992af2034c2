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

#include "qgt/coop.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qgt {

std::string Coalition::str() const {
  if (mask == 0) return "{}";
  std::string out = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(i);
  }
  return out + "}";
}

ValueFunction::ValueFunction(int players) : players_(players) {
  if (players < 1 || players > 20) {
    throw std::invalid_argument("player count must be in [1, 20]");
  }
  worth_.assign(std::size_t{1} << players, Rational(0));
}

const Rational& ValueFunction::worth(const Coalition& s) const {
  if (s.players != players_) throw std::invalid_argument("coalition/game size mismatch");
  return worth_.at(s.mask);
}

void ValueFunction::set_worth(const Coalition& s, Rational v) {
  if (s.players != players_) throw std::invalid_argument("coalition/game size mismatch");
  if (s.mask == 0 && v != 0) {
    throw std::invalid_argument("the empty coalition must have zero worth");
  }
  worth_.at(s.mask) = std::move(v);
}

bool ValueFunction::is_binary() const {
  return std::all_of(worth_.begin(), worth_.end(),
                     [](const Rational& v) { return v == 0 || v == 1; });
}

ValueFunction weighted_majority(const WeightedMajoritySpec& spec) {
  int n = static_cast<int>(spec.weights.size());
  if (n < 1) throw std::invalid_argument("weighted majority game needs players");
  if (spec.quota <= 0) throw std::invalid_argument("quota must be positive");
  Rational total = std::accumulate(spec.weights.begin(), spec.weights.end(), Rational(0));
  if (total < spec.quota) {
    throw std::invalid_argument("grand coalition must meet the quota");
  }
  ValueFunction v(n);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    Rational sum = 0;
    for (int i = 1; i <= n; ++i) {
      if (bit_of_index(mask, i, n)) sum += spec.weights[static_cast<size_t>(i - 1)];
    }
    v.set_worth(Coalition(n, mask), sum >= spec.quota ? 1 : 0);
  }
  return v;
}

std::vector<std::string> validate_simple(const ValueFunction& v) {
  if (!v.is_binary()) {
    throw std::invalid_argument("validate_simple: value function is not 0/1-valued");
  }
  std::vector<std::string> violations;
  int n = v.players();
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if (v.worth(full) != 1) violations.push_back("grand coalition N is not winning");
  if (v.worth(std::uint32_t{0}) != 0) violations.push_back("empty coalition is winning");
  // Monotone winning set: dropping one player never turns a loser into a
  // winner; single-player drops chain to all subset pairs.
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int i = 1; i <= n; ++i) {
      if (!bit_of_index(mask, i, n)) continue;
      std::uint32_t smaller = mask & ~(std::uint32_t{1} << (n - i));
      if (v.worth(smaller) == 1 && v.worth(mask) == 0) {
        violations.push_back("monotonicity violated: " + Coalition(n, smaller).str() +
                             " wins but " + Coalition(n, mask).str() + " loses");
      }
    }
  }
  return violations;
}

Allocation shapley(const ValueFunction& v) {
  int n = v.players();
  std::vector<Rational> fact(static_cast<size_t>(n) + 1, Rational(1));
  for (int k = 1; k <= n; ++k) fact[static_cast<size_t>(k)] = fact[static_cast<size_t>(k - 1)] * k;

  Allocation out(static_cast<size_t>(n), Rational(0));
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (int i = 1; i <= n; ++i) {
    std::uint32_t ibit = std::uint32_t{1} << (n - i);
    Rational acc = 0;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (mask & ibit) continue;
      int s = std::popcount(mask);
      Rational weight = fact[static_cast<size_t>(s)] *
                        fact[static_cast<size_t>(n - s - 1)] / fact[static_cast<size_t>(n)];
      acc += weight * (v.worth(mask | ibit) - v.worth(mask));
    }
    out[static_cast<size_t>(i - 1)] = acc;
  }
  return out;
}

Allocation shapley_by_permutations(const ValueFunction& v) {
  int n = v.players();
  if (n > 8) throw std::invalid_argument("permutation oracle limited to 8 players");
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  Allocation total(static_cast<size_t>(n), Rational(0));
  long count = 0;
  do {
    std::uint32_t arrived = 0;
    for (int player : order) {
      std::uint32_t next = arrived | (std::uint32_t{1} << (n - player));
      total[static_cast<size_t>(player - 1)] += v.worth(next) - v.worth(arrived);
      arrived = next;
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& x : total) x /= count;
  return total;
}

ValueFunction restrict(const ValueFunction& v, const Coalition& s) {
  if (s.players != v.players()) throw std::invalid_argument("coalition/game size mismatch");
  if (s.empty()) throw std::invalid_argument("cannot restrict to the empty coalition");
  std::vector<int> members = s.members();
  int k = static_cast<int>(members.size());
  ValueFunction out(k);
  for (std::uint32_t sub = 1; sub < (std::uint32_t{1} << k); ++sub) {
    std::uint32_t mask = 0;
    for (int j = 1; j <= k; ++j) {
      if (bit_of_index(sub, j, k)) {
        mask = set_bit(mask, members[static_cast<size_t>(j - 1)], v.players());
      }
    }
    out.set_worth(Coalition(k, sub), v.worth(mask));
  }
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace qgt
