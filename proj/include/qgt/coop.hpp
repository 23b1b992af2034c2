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
#include <string>
#include <vector>

#include "qgt/bits.hpp"
#include "qgt/exact.hpp"

namespace qgt {

// Classical TU games. Coalitions share the register index convention:
// player i is bit (n - i) of the index, so coalition {1} of 3 players is
// index 4 and the basis ket |100>.

struct Coalition {
  int players = 0;
  std::uint32_t mask = 0;

  Coalition() = default;
  Coalition(int n, std::uint32_t m) : players(n), mask(m) {
    if (m >> n) throw std::invalid_argument("coalition does not fit the player set");
  }

  bool contains(int player) const { return bit_of_index(mask, player, players) != 0; }
  int size() const { return std::popcount(mask); }
  bool empty() const { return mask == 0; }

  /// Ascending player numbers.
  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 1; i <= players; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  std::string str() const;
};

/// Worth map v over all coalitions of n players; v(empty) = 0 by invariant.
class ValueFunction {
 public:
  explicit ValueFunction(int players);

  int players() const { return players_; }
  const Rational& worth(const Coalition& s) const;
  const Rational& worth(std::uint32_t mask) const { return worth_.at(mask); }
  void set_worth(const Coalition& s, Rational v);

  Rational grand_worth() const { return worth_.back(); }
  bool is_binary() const;

 private:
  int players_;
  std::vector<Rational> worth_;
};

struct WeightedMajoritySpec {
  Rational quota;
  std::vector<Rational> weights;
};

using Allocation = std::vector<Rational>;

/// Simple game v(S) = 1 iff the weight sum of S meets the quota.
/// Requires q > 0 and sum(w) >= q so the grand coalition wins.
ValueFunction weighted_majority(const WeightedMajoritySpec& spec);

/// Checks the three simple-game properties (N wins, empty loses, winning is
/// monotone). Empty result = valid. Throws if v is not 0/1-valued.
std::vector<std::string> validate_simple(const ValueFunction& v);

/// Shapley value by the subset formula
///   phi_i = sum_{S not owning i} |S|! (n-|S|-1)! / n! * (v(S+i) - v(S)).
Allocation shapley(const ValueFunction& v);

/// Independent oracle: average marginal contribution over all n! arrival
/// orders. Exponentially slower; must agree with shapley() exactly.
Allocation shapley_by_permutations(const ValueFunction& v);

/// Restriction of v to the players of S, renumbered 1..|S| in order.
ValueFunction restrict(const ValueFunction& v, const Coalition& s);

double to_double(const Rational& r);

}  // namespace qgt
