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
#include <utility>

namespace qgt {

/// A basis blade of G(2n): a product of distinct generators e_1..e_2n in
/// ascending order, stored as a bitmask (bit j <=> e_{j+1} present). The
/// empty mask is the scalar blade 1. All generators square to +1.
using Blade = std::uint32_t;

inline constexpr Blade kScalarBlade = 0;

inline int blade_grade(Blade b) { return std::popcount(b); }

/// Product of two blades: result mask is the symmetric difference, the sign
/// counts the transpositions needed to sort the concatenated word (plus
/// contractions e_i e_i = +1, which cost nothing in this signature).
inline std::pair<int, Blade> blade_product(Blade x, Blade y) {
  int sign = 1;
  Blade acc = x;
  while (y != 0) {
    int j = std::countr_zero(y);
    y &= y - 1;
    // e_{j+1} hops over every generator of acc above it.
    if (std::popcount(acc >> (j + 1)) & 1) sign = -sign;
    acc ^= Blade{1} << j;
  }
  return {sign, acc};
}

/// Sign of reversing a grade-k blade: (-1)^(k(k-1)/2).
inline int blade_reversal_sign(Blade b) {
  int k = blade_grade(b);
  return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
}

inline std::string blade_name(Blade b) {
  if (b == kScalarBlade) return "1";
  std::string out;
  for (int j = 0; j < 32; ++j) {
    if (b & (Blade{1} << j)) {
      if (!out.empty()) out += "^";
      out += "e" + std::to_string(j + 1);
    }
  }
  return out;
}

}  // namespace qgt
