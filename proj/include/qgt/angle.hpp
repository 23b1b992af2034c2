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

#include <string>

namespace qgt {

/// Gate angle: a plain value in radians, an exact rational multiple of pi,
/// or a named symbol (for the trig-polynomial ring).
///
/// Pi fractions are kept exact so that e.g. gamma = pi/2 stays representable
/// on the exact ring after the gate halves it to pi/4.
class AngleParam {
 public:
  enum class Kind { kNumeric, kPiFraction, kSymbolic };

  AngleParam() : kind_(Kind::kNumeric) {}

  static AngleParam radians(double v);
  static AngleParam pi_fraction(long num, long den);
  static AngleParam symbol(std::string name);

  Kind kind() const { return kind_; }
  bool is_symbolic() const { return kind_ == Kind::kSymbolic; }
  bool is_pi_fraction() const { return kind_ == Kind::kPiFraction; }

  /// Value in radians; throws for symbolic angles.
  double value() const;
  long pi_num() const { return num_; }
  long pi_den() const { return den_; }
  const std::string& name() const { return name_; }

  AngleParam half() const;
  std::string str() const;

  bool operator==(const AngleParam& o) const;

 private:
  Kind kind_;
  double value_ = 0.0;
  long num_ = 0;
  long den_ = 1;
  std::string name_;
};

/// Parses an angle literal: "pi/2", "3pi/8", "2pi", "pi", "0.75", "1e-3".
/// Identifiers (leading letter, then [A-Za-z0-9_]) become symbolic angles.
AngleParam parse_angle(const std::string& text);

/// Warns on stderr if the value lies outside the protocol range [0, pi/2].
/// The paper itself sweeps outside it, so this is never an error.
void warn_if_outside_protocol_range(const AngleParam& a, const std::string& label);

}  // namespace qgt
