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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgt {

// Indexing convention, used repo-wide: qubit 1 (= player 1) is the most
// significant bit of a basis-state index. |a1 a2 .. an> has index
// a1*2^(n-1) + .. + an, so coalition {1} of a 3-player game is index 4.

/// Bit of qubit i (1-based) within a width-n index.
inline int bit_of_index(std::uint32_t index, int qubit, int width) {
  return static_cast<int>((index >> (width - qubit)) & 1u);
}

inline std::uint32_t set_bit(std::uint32_t index, int qubit, int width) {
  return index | (std::uint32_t{1} << (width - qubit));
}

/// Ordered bit sequence a1..an identifying a basis ket / coalition.
struct BitString {
  int width = 0;
  std::uint32_t value = 0;

  BitString() = default;
  BitString(int w, std::uint32_t v) : width(w), value(v) {
    if (w < 1 || w > 20) throw std::invalid_argument("bad bitstring width");
    if (v >> w) throw std::invalid_argument("bitstring value out of range");
  }

  static BitString parse(const std::string& s) {
    BitString b(static_cast<int>(s.size()), 0);
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("bad bitstring '" + s + "'");
      b.value = (b.value << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return b;
  }

  int bit(int qubit) const { return bit_of_index(value, qubit, width); }
  std::uint32_t index() const { return value; }

  std::string str() const {
    std::string s(width, '0');
    for (int i = 1; i <= width; ++i) s[i - 1] = static_cast<char>('0' + bit(i));
    return s;
  }

  bool operator==(const BitString&) const = default;
  auto operator<=>(const BitString&) const = default;
};

}  // namespace qgt
