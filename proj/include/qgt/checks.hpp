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
#include <vector>

namespace qgt {

/// One gate family checked against its dense-matrix image.
struct GateCheckResult {
  std::string name;
  int cases = 0;
  double max_deviation = 0.0;
};

/// Compares every gate constructor (Id, H, U, J adjacent and general, CNOT,
/// SWAP adjacent and general, J2, J3, parallel2/parallel3 of strategy gates)
/// with its matrix image on all basis kets for n <= 3, over `random_draws`
/// parameter draws per family.
std::vector<GateCheckResult> run_oracle_gate_checks(int random_draws, unsigned seed);

}  // namespace qgt
