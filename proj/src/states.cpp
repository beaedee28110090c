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

#include "majprop/states.hpp"

#include <bit>
#include <cmath>

#include "majprop/errors.hpp"
#include "majprop/fermion.hpp"

namespace majprop {

namespace {

constexpr uint64_t kEvenBits = 0x5555555555555555ULL;

}  // namespace

ProductState::ProductState(int n_majorana, std::vector<bool> occupations) : occ_(std::move(occupations)) {
  if (n_majorana < 0 || n_majorana % 2 != 0 || n_majorana > kMaxModes) {
    throw UsageError("number of Majorana modes must be even and in [0, " + std::to_string(kMaxModes) + "]");
  }
  if (static_cast<int>(occ_.size()) != n_majorana / 2) {
    throw UsageError("expected " + std::to_string(n_majorana / 2) + " occupations, got " +
                     std::to_string(occ_.size()));
  }
}

ProductState ProductState::vacuum(int n_majorana) {
  return ProductState(n_majorana, std::vector<bool>(static_cast<std::size_t>(std::max(0, n_majorana / 2)), false));
}

ProductState ProductState::from_string(const std::string& bits) {
  std::vector<bool> occ;
  occ.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw ValidationError("state bitstring may only contain 0 and 1, got '" + bits + "'");
    occ.push_back(c == '1');
  }
  const int n = 2 * static_cast<int>(occ.size());
  return ProductState(n, std::move(occ));
}

int ProductState::particle_count() const {
  int n = 0;
  for (bool b : occ_) n += b ? 1 : 0;
  return n;
}

std::string ProductState::to_string() const {
  std::string out;
  out.reserve(occ_.size());
  for (bool b : occ_) out.push_back(b ? '1' : '0');
  return out;
}

double string_expectation(const ModeMask& mask, const ProductState& s) {
  // bits 2j and 2j+1 must agree for every j
  for (std::size_t w = 0; w < ModeMask::kWords; ++w) {
    const uint64_t x = mask.word(w);
    if (((x ^ (x >> 1)) & kEvenBits) != 0) return 0.0;
  }
  const int pairs = mask.popcount() / 2;
  // gamma_{2j,2j+1} = 2 n_j - 1; the reordering sign of k pairs is + + - - for k mod 4.
  double value = (pairs % 4 >= 2) ? -1.0 : 1.0;
  for (std::size_t w = 0; w < ModeMask::kWords; ++w) {
    uint64_t x = mask.word(w) & kEvenBits;
    while (x != 0) {
      const int bit = std::countr_zero(x);
      x &= x - 1;
      const int mode = static_cast<int>(w * 64 + static_cast<std::size_t>(bit)) / 2;
      if (mode >= s.n_fermions()) return 0.0;
      if (!s.occupied(mode)) value = -value;
    }
  }
  return value;
}

Complex expectation_complex(const MajoranaPolynomial& p, const ProductState& s) {
  if (p.n_modes() != s.n_majorana()) {
    throw UsageError("observable has " + std::to_string(p.n_modes()) + " Majorana modes, state has " +
                     std::to_string(s.n_majorana()));
  }
  Complex sum = 0.0;
  for (const Term& t : p.terms()) {
    const double v = string_expectation(t.mask, s);
    if (v != 0.0) sum += t.coeff * v;
  }
  return sum;
}

double expectation(const MajoranaPolynomial& p, const ProductState& s) {
  const Complex z = expectation_complex(p, s);
  if (std::abs(z.imag()) > 1e-10) {
    throw ValidationError("expectation value has imaginary part " + std::to_string(z.imag()));
  }
  return z.real();
}

MajoranaPolynomial number_operator(int mode, int n_majorana) {
  return poly_multiply(creation_operator(mode, n_majorana), annihilation_operator(mode, n_majorana));
}

MajoranaPolynomial hole_density_observable(int site, int n_majorana) {
  if (site < 0 || 4 * (site + 1) > n_majorana) {
    throw UsageError("site " + std::to_string(site) + " out of range for " + std::to_string(n_majorana) +
                     " Majorana modes");
  }
  const auto one = MajoranaPolynomial::identity(n_majorana);
  const auto hole_up = poly_add_scaled(one, number_operator(spin_orbital(site, false), n_majorana), -1.0);
  const auto hole_down = poly_add_scaled(one, number_operator(spin_orbital(site, true), n_majorana), -1.0);
  return poly_multiply(hole_up, hole_down);
}

int central_site(int side) {
  if (side < 1 || side % 2 == 0) throw UsageError("the central site needs an odd side length, got " + std::to_string(side));
  return (side * side - 1) / 2;
}

ProductState antiferromagnetic_hole_state(int side) {
  const int centre = central_site(side);
  const int sites = side * side;
  if (4 * sites > kMaxModes) throw UsageError("lattice too large for " + std::to_string(kMaxModes) + " modes");
  ProductState s = ProductState::vacuum(4 * sites);
  // 1-based numbering i: up on odd sites before the centre and even sites after it
  const int nc = centre + 1;
  for (int i = 1; i <= sites; ++i) {
    if (i == nc) continue;
    const bool up = (i < nc && i % 2 == 1) || (i > nc && i % 2 == 0);
    s.set(spin_orbital(i - 1, !up), true);
  }
  return s;
}

}  // namespace majprop
