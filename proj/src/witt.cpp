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

#include "qgt/witt.hpp"

#include "qgt/exact.hpp"

namespace qgt {

bool signature_self_test() {
  using S = Exact;
  const auto iota = Multivector<S>::scalar(1, PseudoComplex<S>::iota());
  const auto minus_one = Multivector<S>::scalar(1, PseudoComplex<S>(Exact(-1)));
  if (iota * iota != minus_one) return false;

  const auto f = witt_f<S>(1, 1);
  const auto fd = witt_fd<S>(1, 1);
  if (!(f * f).is_zero() || !(fd * fd).is_zero()) return false;
  if (f * fd * f != f || fd * f * fd != fd) return false;
  return fd == f.dagger();
}

}  // namespace qgt
