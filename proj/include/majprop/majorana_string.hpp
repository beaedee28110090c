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

#include <complex>
#include <cstdint>
#include <utility>

#include "majprop/mode_mask.hpp"

namespace majprop {

/// A power of i, stored as its exponent mod 4.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int exponent) : k_(static_cast<uint8_t>(((exponent % 4) + 4) % 4)) {}

  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr int exponent() const { return k_; }
  std::complex<double> value() const {
    constexpr std::complex<double> kTable[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kTable[k_];
  }

  friend constexpr Phase operator*(Phase a, Phase b) { return Phase(a.k_ + b.k_); }
  friend constexpr bool operator==(Phase, Phase) = default;

 private:
  uint8_t k_ = 0;
};

/// Multiplies a complex number by i^k without rounding.
inline std::complex<double> times_phase(std::complex<double> z, Phase p) {
  switch (p.exponent()) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return -z;
    default: return {z.imag(), -z.real()};
  }
}

/// Hermitian Majorana monomial gamma_X = i^{r_X} prod_{x in X, increasing} gamma_x on n_modes modes.
class MajoranaString {
 public:
  MajoranaString() = default;
  /// Throws UsageError if n_modes is odd, out of range, or the mask has bits >= n_modes.
  MajoranaString(ModeMask mask, int n_modes);
  static MajoranaString identity(int n_modes) { return MajoranaString(ModeMask{}, n_modes); }
  static MajoranaString of(std::initializer_list<int> modes, int n_modes) {
    return MajoranaString(ModeMask::from_modes(modes), n_modes);
  }

  const ModeMask& mask() const { return mask_; }
  int n_modes() const { return n_modes_; }
  int degree() const { return mask_.popcount(); }

  friend bool operator==(const MajoranaString&, const MajoranaString&) = default;

 private:
  ModeMask mask_;
  int n_modes_ = 0;
};

/// Exponent r_X in gamma_X = i^{r_X} * ordered product; 1 iff |X| mod 4 is 2 or 3.
constexpr int hermitian_phase_exponent(int degree) { return (degree & 2) >> 1; }

/// Parity of #{(t, s) in T x S : t < s}.
int inversion_parity(const ModeMask& s, const ModeMask& t);

/// Phase p with gamma_S gamma_T = p * gamma_{S xor T}. Mask-level kernel, no mode-count checks.
inline Phase product_phase(const ModeMask& s, const ModeMask& t) {
  const int ds = s.popcount();
  const int dt = t.popcount();
  const int dr = ds + dt - 2 * overlap(s, t);
  return Phase(hermitian_phase_exponent(ds) + hermitian_phase_exponent(dt) -
               hermitian_phase_exponent(dr) + 2 * inversion_parity(s, t));
}

/// True iff gamma_S and gamma_T anticommute, i.e. |S||T| - |S n T| is odd.
constexpr bool masks_anticommute(const ModeMask& s, const ModeMask& t) {
  return ((s.popcount() * t.popcount() - overlap(s, t)) & 1) != 0;
}

/// gamma_S gamma_T = p * gamma_R with R = S xor T. Throws UsageError on mode-count mismatch.
std::pair<Phase, MajoranaString> string_multiply(const MajoranaString& s, const MajoranaString& t);

bool strings_anticommute(const MajoranaString& s, const MajoranaString& t);

}  // namespace majprop
