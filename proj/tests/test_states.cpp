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

#include <gtest/gtest.h>

#include <random>

#include "majprop/errors.hpp"
#include "majprop/fermion.hpp"
#include "majprop/oracle.hpp"
#include "majprop/verification.hpp"

using namespace majprop;

namespace {

ProductState basis_state(int n_majorana, std::size_t b) {
  std::vector<bool> occ(static_cast<std::size_t>(n_majorana / 2));
  for (std::size_t j = 0; j < occ.size(); ++j) occ[j] = ((b >> j) & 1U) != 0;
  return ProductState(n_majorana, occ);
}

}  // namespace

TEST(string_expectation, matches_dense_diagonal_exhaustively) {
  const int n = 6;
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    ModeMask mask;
    mask.set_word(0, m);
    const DenseMatrix d = string_to_dense(MajoranaString(mask, n)).matrix;
    for (std::size_t b = 0; b < 8; ++b) {
      const Complex want = d(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b));
      ASSERT_NEAR(want.imag(), 0.0, 1e-15);
      ASSERT_EQ(string_expectation(mask, basis_state(n, b)), want.real()) << m << ' ' << b;
    }
  }
}

TEST(expectation, matches_dense_for_random_hermitian_polynomials) {
  std::mt19937_64 rng(31);
  const int n = 8;
  for (int k = 0; k < 40; ++k) {
    const MajoranaPolynomial r = random_polynomial(rng, n, 1 + k % 8, 12);
    const MajoranaPolynomial p = poly_scale(poly_add_scaled(r, poly_adjoint(r), 1.0), 0.5);
    const DenseMatrix d = to_dense(p).matrix;
    for (std::size_t b = 0; b < 16; ++b) {
      const auto i = static_cast<Eigen::Index>(b);
      EXPECT_NEAR(expectation(p, basis_state(n, b)), d(i, i).real(), 1e-12);
    }
  }
}

TEST(expectation, linear_and_rejects_mismatches) {
  std::mt19937_64 rng(32);
  const ProductState s = ProductState::from_string("1011");
  const MajoranaPolynomial p = random_polynomial(rng, 8, 4, 10);
  const MajoranaPolynomial q = random_polynomial(rng, 8, 3, 10);
  const Complex a(0.3, -1.2);
  EXPECT_LT(std::abs(expectation_complex(poly_add_scaled(p, q, a), s) -
                     (expectation_complex(p, s) + a * expectation_complex(q, s))),
            1e-12);
  EXPECT_THROW(expectation(p, ProductState::from_string("10")), UsageError);
  const auto anti = MajoranaPolynomial::monomial(MajoranaString::of({0, 1}, 8), Complex(0.0, 1.0));
  EXPECT_THROW(expectation(anti, s), ValidationError);
}

TEST(string_expectation, odd_or_unpaired_strings_vanish) {
  const ProductState s = ProductState::from_string("110");
  EXPECT_EQ(string_expectation(ModeMask::from_modes({0}), s), 0.0);
  EXPECT_EQ(string_expectation(ModeMask::from_modes({1, 2}), s), 0.0);
  EXPECT_EQ(string_expectation(ModeMask::from_modes({0, 1, 2}), s), 0.0);
  EXPECT_EQ(string_expectation(ModeMask{}, s), 1.0);
  // pair on an occupied mode: gamma_{2j,2j+1} = 2 n_j - 1
  EXPECT_EQ(string_expectation(ModeMask::from_modes({0, 1}), s), 1.0);
  EXPECT_EQ(string_expectation(ModeMask::from_modes({4, 5}), s), -1.0);
}

TEST(number_operator, idempotent_with_half_trace) {
  for (int j = 0; j < 3; ++j) {
    const MajoranaPolynomial n = number_operator(j, 6);
    EXPECT_EQ(n.size(), 2u);
    EXPECT_EQ(n.coefficient(ModeMask{}), Complex(0.5, 0.0));
    EXPECT_LT(frobenius_distance(poly_multiply(n, n), n), 1e-15);
    EXPECT_EQ(expectation(n, ProductState::vacuum(6)), 0.0);
    ProductState s = ProductState::vacuum(6);
    s.set(j, true);
    EXPECT_EQ(expectation(n, s), 1.0);
  }
  EXPECT_LT(frobenius_distance(number_operator(1, 6),
                               poly_multiply(creation_operator(1, 6), annihilation_operator(1, 6))),
            1e-15);
}

TEST(hole_density, on_simple_states) {
  const MajoranaPolynomial h = hole_density_observable(1, 8);
  EXPECT_EQ(h.degree(), 4);
  EXPECT_EQ(expectation(h, ProductState::vacuum(8)), 1.0);
  EXPECT_EQ(expectation(h, ProductState::from_string("0011")), 0.0);
  EXPECT_EQ(expectation(h, ProductState::from_string("0010")), 0.0);
  EXPECT_EQ(expectation(h, ProductState::from_string("1100")), 1.0);
  EXPECT_LT(frobenius_distance(poly_multiply(h, h), h), 1e-15);
}

TEST(antiferromagnetic_hole_state, three_by_three) {
  const ProductState s = antiferromagnetic_hole_state(3);
  EXPECT_EQ(s.n_majorana(), 36);
  EXPECT_EQ(s.particle_count(), 8);
  EXPECT_EQ(central_site(3), 4);
  EXPECT_FALSE(s.occupied(spin_orbital(4, false)));
  EXPECT_FALSE(s.occupied(spin_orbital(4, true)));
  for (int site = 0; site < 9; ++site) {
    if (site == 4) continue;
    EXPECT_NE(s.occupied(spin_orbital(site, false)), s.occupied(spin_orbital(site, true))) << site;
    // nearest neighbours carry opposite spins
    if (site % 3 != 2 && site + 1 != 4) {
      EXPECT_NE(s.occupied(spin_orbital(site, false)), s.occupied(spin_orbital(site + 1, false)));
    }
  }
  EXPECT_EQ(expectation(hole_density_observable(4, 36), s), 1.0);
  EXPECT_EQ(expectation(hole_density_observable(0, 36), s), 0.0);
  EXPECT_THROW(antiferromagnetic_hole_state(4), UsageError);
  EXPECT_EQ(central_site(5), 12);
}

TEST(product_state, bitstrings) {
  const ProductState s = ProductState::from_string("0110");
  EXPECT_EQ(s.to_string(), "0110");
  EXPECT_EQ(s.particle_count(), 2);
  EXPECT_EQ(s.n_fermions(), 4);
  EXPECT_TRUE(s.occupied(1));
  EXPECT_THROW(ProductState::from_string("01x"), ValidationError);
  EXPECT_THROW(ProductState(5, {}), UsageError);
  EXPECT_THROW(ProductState(4, {true}), UsageError);
}
