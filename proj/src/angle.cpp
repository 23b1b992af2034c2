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

#include "qgt/angle.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qgt {

AngleParam AngleParam::radians(double v) {
  AngleParam a;
  a.kind_ = Kind::kNumeric;
  a.value_ = v;
  return a;
}

AngleParam AngleParam::pi_fraction(long num, long den) {
  if (den == 0) {
    throw std::invalid_argument("pi fraction with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long g = std::gcd(std::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  AngleParam a;
  a.kind_ = Kind::kPiFraction;
  a.num_ = num;
  a.den_ = den;
  a.value_ = static_cast<double>(num) * std::numbers::pi / static_cast<double>(den);
  return a;
}

AngleParam AngleParam::symbol(std::string name) {
  if (name.empty()) {
    throw std::invalid_argument("empty angle symbol");
  }
  AngleParam a;
  a.kind_ = Kind::kSymbolic;
  a.name_ = std::move(name);
  return a;
}

double AngleParam::value() const {
  if (kind_ == Kind::kSymbolic) {
    throw std::domain_error("symbolic angle '" + name_ + "' has no numeric value");
  }
  return value_;
}

AngleParam AngleParam::half() const {
  switch (kind_) {
    case Kind::kNumeric:
      return radians(value_ / 2.0);
    case Kind::kPiFraction:
      return pi_fraction(num_, 2 * den_);
    case Kind::kSymbolic:
      return symbol(name_ + "/2");
  }
  throw std::logic_error("unreachable");
}

std::string AngleParam::str() const {
  switch (kind_) {
    case Kind::kNumeric: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", value_);
      return buf;
    }
    case Kind::kPiFraction: {
      if (num_ == 0) return "0";
      std::string s;
      if (num_ == -1) {
        s = "-pi";
      } else if (num_ != 1) {
        s = std::to_string(num_) + "pi";
      } else {
        s = "pi";
      }
      if (den_ != 1) s += "/" + std::to_string(den_);
      return s;
    }
    case Kind::kSymbolic:
      return name_;
  }
  throw std::logic_error("unreachable");
}

bool AngleParam::operator==(const AngleParam& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::kNumeric:
      return value_ == o.value_;
    case Kind::kPiFraction:
      return num_ == o.num_ && den_ == o.den_;
    case Kind::kSymbolic:
      return name_ == o.name_;
  }
  return false;
}

AngleParam parse_angle(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty angle literal");
  }
  // A full identifier is a symbolic angle (but "pi" alone is the constant).
  bool identifier = std::isalpha(static_cast<unsigned char>(text[0]));
  for (char c : text) {
    identifier = identifier && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
  }
  if (identifier && text != "pi") {
    return AngleParam::symbol(text);
  }

  auto pi_pos = text.find("pi");
  if (pi_pos != std::string::npos) {
    // [N]pi[/M]
    std::string head = text.substr(0, pi_pos);
    std::string tail = text.substr(pi_pos + 2);
    long num = 1;
    if (head == "-") {
      num = -1;
    } else if (!head.empty()) {
      size_t used = 0;
      num = std::stol(head, &used);
      if (used != head.size()) {
        throw std::invalid_argument("bad angle literal '" + text + "'");
      }
    }
    long den = 1;
    if (!tail.empty()) {
      if (tail[0] != '/') {
        throw std::invalid_argument("bad angle literal '" + text + "'");
      }
      size_t used = 0;
      den = std::stol(tail.substr(1), &used);
      if (used != tail.size() - 1 || den == 0) {
        throw std::invalid_argument("bad angle literal '" + text + "'");
      }
    }
    return AngleParam::pi_fraction(num, den);
  }

  size_t used = 0;
  double v = std::stod(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("bad angle literal '" + text + "'");
  }
  // A literal zero stays exact so the exact ring accepts it.
  if (v == 0.0) return AngleParam::pi_fraction(0, 1);
  return AngleParam::radians(v);
}

void warn_if_outside_protocol_range(const AngleParam& a, const std::string& label) {
  if (a.is_symbolic()) return;
  double v = a.value();
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (v < -1e-12 || v > kHalfPi + 1e-12) {
    std::cerr << "warning: " << label << " = " << a.str()
              << " lies outside the protocol range [0, pi/2]\n";
  }
}

}  // namespace qgt
