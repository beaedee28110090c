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

#pragma once

#include "majprop/polynomial.hpp"

namespace majprop {

// Fermionic mode j owns Majorana modes 2j and 2j+1:
//   gamma_{2j} = c*_j + c_j,  gamma_{2j+1} = i (c*_j - c_j).

/// c_j = (gamma_{2j} + i gamma_{2j+1}) / 2 on n_majorana modes.
MajoranaPolynomial annihilation_operator(int mode, int n_majorana);
/// c*_j = (gamma_{2j} - i gamma_{2j+1}) / 2.
MajoranaPolynomial creation_operator(int mode, int n_majorana);

/// Fermionic mode index of (site, spin) in the site-major, up-before-down ordering.
constexpr int spin_orbital(int site, bool spin_down) { return 2 * site + (spin_down ? 1 : 0); }

}  // namespace majprop
