// Copyright 2026 The majprop Authors
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

#include "majprop/fermion.hpp"

#include <string>

#include "majprop/errors.hpp"

namespace majprop {

namespace {

void check_mode(int mode, int n_majorana) {
  if (mode < 0 || 2 * mode + 1 >= n_majorana) {
    throw UsageError("fermionic mode " + std::to_string(mode) + " outside [0, " + std::to_string(n_majorana / 2) +
                     ")");
  }
}

MajoranaPolynomial ladder(int mode, int n_majorana, double imag_sign) {
  check_mode(mode, n_majorana);
  return MajoranaPolynomial(n_majorana, {Term{ModeMask::from_modes({2 * mode}), Complex(0.5, 0.0)},
                                         Term{ModeMask::from_modes({2 * mode + 1}), Complex(0.0, 0.5 * imag_sign)}});
}

}  // namespace

MajoranaPolynomial annihilation_operator(int mode, int n_majorana) { return ladder(mode, n_majorana, 1.0); }

MajoranaPolynomial creation_operator(int mode, int n_majorana) { return ladder(mode, n_majorana, -1.0); }

}  // namespace majprop
