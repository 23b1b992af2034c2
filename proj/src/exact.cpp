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

#include "qgt/exact.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgt {

double Exact::to_double() const {
  return rat_.convert_to<double>() + irr_.convert_to<double>() * std::sqrt(2.0);
}

std::string Exact::str() const {
  std::ostringstream out;
  if (irr_ == 0) {
    out << rat_;
    return out.str();
  }
  if (rat_ != 0) {
    out << rat_ << (irr_ > 0 ? "+" : "");
  }
  if (irr_ == 1) {
    out << "sqrt2";
  } else if (irr_ == -1) {
    out << "-sqrt2";
  } else {
    out << irr_ << "*sqrt2";
  }
  return out.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational num(text.substr(0, slash));
    Rational den(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    return num / den;
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    bool negative = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      negative = digits[0] == '-';
      digits.erase(0, 1);
    }
    // Strip leading zeros: cpp_int would read "025" as octal.
    size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad decimal literal '" + text + "'");
    }
    Rational den = 1;
    for (size_t i = 0; i < frac_len; ++i) {
      den *= 10;
    }
    Rational num{boost::multiprecision::cpp_int(digits)};
    if (negative) num = -num;
    return num / den;
  }
  return Rational(text);
}

}  // namespace qgt
