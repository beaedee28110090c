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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "majprop/errors.hpp"
#include "majprop/oracle.hpp"
#include "majprop/polynomial.hpp"
#include "majprop/verification.hpp"

using namespace majprop;

namespace {

DenseMatrix dense(const MajoranaString& s) { return string_to_dense(s).matrix; }

// Dense matrix of a polynomial assembled from c / c* products only.
DenseMatrix dense_slow(const MajoranaPolynomial& p) {
  const auto dim = static_cast<Eigen::Index>(dense_dimension(p.n_modes()));
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const Term& t : p.terms()) m += t.coeff * dense(MajoranaString(t.mask, p.n_modes()));
  return m;
}

double max_abs(const DenseMatrix& m) { return m.cwiseAbs().maxCoeff(); }

MajoranaString string_of(uint64_t bits, int n) {
  ModeMask m;
  m.set_word(0, bits);
  return MajoranaString(m, n);
}

}  // namespace

TEST(string_multiply, square_is_identity) {
  for (uint64_t b = 0; b < 64; ++b) {
    const auto s = string_of(b, 6);
    const auto [p, r] = string_multiply(s, s);
    EXPECT_EQ(p, Phase::one());
    EXPECT_TRUE(r.mask().empty());
  }
}

TEST(string_multiply, identity_is_neutral) {
  for (uint64_t b = 0; b < 64; ++b) {
    const auto t = string_of(b, 6);
    const auto [p, r] = string_multiply(MajoranaString::identity(6), t);
    EXPECT_EQ(p, Phase::one());
    EXPECT_EQ(r, t);
  }
}

TEST(string_multiply, overlapping_pair_matches_dense) {
  const auto s = MajoranaString::of({0, 1}, 4);
  const auto t = MajoranaString::of({1, 2}, 4);
  const auto [p, r] = string_multiply(s, t);
  EXPECT_EQ(r, MajoranaString::of({0, 2}, 4));
  EXPECT_EQ(p, Phase::i());
  EXPECT_LT(max_abs(dense(s) * dense(t) - p.value() * dense(r)), 1e-12);
}

TEST(string_multiply, single_modes) {
  // gamma_0 gamma_1 = -i gamma_{01}
  const auto [p, r] = string_multiply(MajoranaString::of({0}, 2), MajoranaString::of({1}, 2));
  EXPECT_EQ(r, MajoranaString::of({0, 1}, 2));
  EXPECT_EQ(p, Phase::minus_i());
  const auto [q, r2] = string_multiply(MajoranaString::of({1}, 2), MajoranaString::of({0}, 2));
  EXPECT_EQ(r2, r);
  EXPECT_EQ(q, Phase::i());
}

TEST(string_multiply, mismatched_modes_throw) {
  EXPECT_THROW(string_multiply(MajoranaString::of({0}, 2), MajoranaString::of({0}, 4)), UsageError);
  EXPECT_THROW(strings_anticommute(MajoranaString::of({0}, 2), MajoranaString::of({0}, 4)), UsageError);
}

TEST(string_multiply, exhaustive_dense_n6) {
  std::vector<DenseMatrix> mats;
  for (uint64_t b = 0; b < 64; ++b) mats.push_back(dense(string_of(b, 6)));
  for (uint64_t a = 0; a < 64; ++a) {
    for (uint64_t b = 0; b < 64; ++b) {
      const auto [p, r] = string_multiply(string_of(a, 6), string_of(b, 6));
      ASSERT_EQ(r.mask().word(0), a ^ b);
      ASSERT_LT(max_abs(mats[a] * mats[b] - p.value() * mats[a ^ b]), 1e-12) << a << " " << b;
      const bool anti = strings_anticommute(string_of(a, 6), string_of(b, 6));
      const double anticomm = max_abs(mats[a] * mats[b] + mats[b] * mats[a]);
      const double comm = max_abs(mats[a] * mats[b] - mats[b] * mats[a]);
      ASSERT_LT(anti ? anticomm : comm, 1e-12) << a << " " << b;
    }
  }
}

TEST(string_multiply, associative_exhaustive_n4) {
  for (uint64_t a = 0; a < 16; ++a) {
    for (uint64_t b = 0; b < 16; ++b) {
      for (uint64_t c = 0; c < 16; ++c) {
        const auto [p1, ab] = string_multiply(string_of(a, 4), string_of(b, 4));
        const auto [p2, left] = string_multiply(ab, string_of(c, 4));
        const auto [q1, bc] = string_multiply(string_of(b, 4), string_of(c, 4));
        const auto [q2, right] = string_multiply(string_of(a, 4), bc);
        ASSERT_EQ(left, right);
        ASSERT_EQ(p1 * p2, q1 * q2);
      }
    }
  }
}

TEST(string_multiply, associative_random_up_to_256_modes) {
  std::mt19937_64 rng(11);
  for (int n : {8, 16, 64, 130, 256}) {
    std::uniform_int_distribution<int> deg(0, n);
    for (int k = 0; k < 300; ++k) {
      const MajoranaString a(random_mask(rng, n, deg(rng)), n);
      const MajoranaString b(random_mask(rng, n, deg(rng)), n);
      const MajoranaString c(random_mask(rng, n, deg(rng)), n);
      const auto [p1, ab] = string_multiply(a, b);
      const auto [p2, left] = string_multiply(ab, c);
      const auto [q1, bc] = string_multiply(b, c);
      const auto [q2, right] = string_multiply(a, bc);
      ASSERT_EQ(left, right);
      ASSERT_EQ(p1 * p2, q1 * q2);
    }
  }
}

TEST(string_multiply, random_n16_via_embedding) {
  // The phase only depends on the relative order of the modes involved, so a
  // pair at N = 16 can be checked densely after compressing S u T onto 0..k-1.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(0, 5);
  for (int k = 0; k < 300; ++k) {
    const MajoranaString s(random_mask(rng, 16, deg(rng)), 16);
    const MajoranaString t(random_mask(rng, 16, deg(rng)), 16);
    const std::vector<int> used = (s.mask() | t.mask()).modes();
    const int small_n = std::max(2, static_cast<int>(used.size() + used.size() % 2));
    auto compress = [&](const MajoranaString& x) {
      ModeMask m;
      for (std::size_t i = 0; i < used.size(); ++i) {
        if (x.mask().test(used[i])) m.set(static_cast<int>(i));
      }
      return MajoranaString(m, small_n);
    };
    const auto [p, r] = string_multiply(s, t);
    const auto [q, rs] = string_multiply(compress(s), compress(t));
    ASSERT_EQ(p, q);
    ASSERT_EQ(compress(r), rs);
    ASSERT_LT(max_abs(dense(compress(s)) * dense(compress(t)) - p.value() * dense(rs)), 1e-12);
    ASSERT_EQ(strings_anticommute(s, t), strings_anticommute(compress(s), compress(t)));
  }
}

TEST(string_multiply, direct_dense_n16) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 4; ++k) {
    const MajoranaString s(random_mask(rng, 16, 3 + k), 16);
    const MajoranaString t(random_mask(rng, 16, 6 - k), 16);
    const auto [p, r] = string_multiply(s, t);
    const DenseMatrix lhs = to_dense(MajoranaPolynomial::monomial(s)).matrix * to_dense(MajoranaPolynomial::monomial(t)).matrix;
    EXPECT_LT(max_abs(lhs - p.value() * to_dense(MajoranaPolynomial::monomial(r)).matrix), 1e-12);
  }
}

TEST(strings_anticommute, examples) {
  const auto s = MajoranaString::of({0, 1}, 4);
  EXPECT_FALSE(strings_anticommute(s, s));
  EXPECT_FALSE(strings_anticommute(s, MajoranaString::of({2, 3}, 4)));
  EXPECT_FALSE(strings_anticommute(s, MajoranaString::of({2}, 4)));
  EXPECT_TRUE(strings_anticommute(s, MajoranaString::of({1, 2}, 4)));
  EXPECT_TRUE(strings_anticommute(MajoranaString::of({0}, 4), MajoranaString::of({1}, 4)));
  const DenseMatrix a = dense(s);
  const DenseMatrix b = dense(MajoranaString::of({1, 2}, 4));
  EXPECT_GT(max_abs(a * b - b * a), 1.0);
}

TEST(dense_oracle, canonical_anticommutation_relations) {
  for (int n = 2; n <= 10; n += 2) {
    std::vector<DenseMatrix> g;
    for (int i = 0; i < n; ++i) g.push_back(dense(MajoranaString::of({i}, n)));
    const auto dim = g.front().rows();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const DenseMatrix expect = (i == j ? 2.0 : 0.0) * DenseMatrix::Identity(dim, dim);
        ASSERT_LT(max_abs(g[i] * g[j] + g[j] * g[i] - expect), 1e-12) << n << " " << i << " " << j;
      }
    }
  }
}

TEST(dense_oracle, every_string_is_hermitian_n10) {
  for (uint64_t b = 0; b < 1024; ++b) {
    const DenseMatrix m = dense(string_of(b, 10));
    ASSERT_LT(max_abs(m - m.adjoint()), 1e-12) << b;
  }
}

TEST(rotate_string, theta_zero_and_commuting) {
  const auto t = MajoranaString::of({0, 1}, 6);
  const auto s = MajoranaString::of({2, 3, 4}, 6);
  EXPECT_EQ(rotate_string(0.0, t, MajoranaString::of({1, 2}, 6)), MajoranaPolynomial::monomial(MajoranaString::of({1, 2}, 6)));
  for (double theta : {0.3, 1.0, 2.5}) EXPECT_EQ(rotate_string(theta, t, s), MajoranaPolynomial::monomial(s));
}

TEST(rotate_string, exhaustive_dense_n6) {
  const Complex i(0.0, 1.0);
  const DenseMatrix id = DenseMatrix::Identity(8, 8);
  std::vector<DenseMatrix> mats;
  for (uint64_t b = 0; b < 64; ++b) mats.push_back(dense(string_of(b, 6)));
  for (double theta : {0.0, std::numbers::pi / 7, std::numbers::pi / 2}) {
    for (uint64_t tb = 0; tb < 64; ++tb) {
      // exp(+-i theta/2 gamma_T) = cos(theta/2) 1 +- i sin(theta/2) gamma_T since gamma_T^2 = 1
      const DenseMatrix u = std::cos(theta / 2) * id + i * std::sin(theta / 2) * mats[tb];
      const DenseMatrix ud = std::cos(theta / 2) * id - i * std::sin(theta / 2) * mats[tb];
      for (uint64_t sb = 0; sb < 64; ++sb) {
        const MajoranaPolynomial r = rotate_string(theta, string_of(tb, 6), string_of(sb, 6));
        ASSERT_LE(r.size(), 2u);
        ASSERT_LT(max_abs(dense_slow(r) - u * mats[sb] * ud), 1e-12) << theta << " " << tb << " " << sb;
        ASSERT_NEAR(frobenius_norm(r), 1.0, 1e-12);
      }
    }
  }
}

TEST(rotate_string, quarter_turn_leaves_only_the_product) {
  const auto t = MajoranaString::of({0, 1}, 6);
  const auto s = MajoranaString::of({1, 2}, 6);
  const MajoranaPolynomial r = rotate_string(std::numbers::pi / 2, t, s);
  const auto [p, prod] = string_multiply(t, s);
  EXPECT_LT(std::abs(r.coefficient(s.mask())), 1e-15);
  EXPECT_LT(std::abs(r.coefficient(prod.mask()) - Complex(0, 1) * p.value()), 1e-15);
}

TEST(polynomial, canonical_form) {
  const MajoranaPolynomial p(4, {{ModeMask::from_modes({0, 1}), 1.0},
                                 {ModeMask{}, 2.0},
                                 {ModeMask::from_modes({0, 1}), -1.0},
                                 {ModeMask::from_modes({2}), 0.0}});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient(ModeMask{}), Complex(2.0));
  EXPECT_EQ(MajoranaPolynomial(4).degree(), 0);
  EXPECT_THROW(MajoranaPolynomial(3), UsageError);
  EXPECT_THROW(MajoranaPolynomial(4, {{ModeMask::from_modes({4}), 1.0}}), UsageError);
}

TEST(poly_add_scaled, examples) {
  const MajoranaPolynomial p(4, {{ModeMask{}, 1.0}});
  const MajoranaPolynomial q(4, {{ModeMask{}, 2.0}, {ModeMask::from_modes({0, 1}), 1.0}});
  EXPECT_EQ(poly_add_scaled(p, q, 0.0), p);
  EXPECT_TRUE(poly_add_scaled(q, q, -1.0).is_zero());
  const MajoranaPolynomial sum = poly_add_scaled(p, q, 1.0);
  EXPECT_EQ(sum, MajoranaPolynomial(4, {{ModeMask{}, 3.0}, {ModeMask::from_modes({0, 1}), 1.0}}));
}

TEST(poly_multiply, matches_dense) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const MajoranaPolynomial p = random_polynomial(rng, 8, 1 + k % 5, 6);
    const MajoranaPolynomial q = random_polynomial(rng, 8, 1 + k % 3, 6);
    ASSERT_LT(max_abs(dense_slow(poly_multiply(p, q)) - dense_slow(p) * dense_slow(q)), 1e-12);
  }
}

TEST(poly_commutator, examples_and_dense) {
  const auto a = MajoranaPolynomial::monomial(MajoranaString::of({0, 1}, 4));
  const auto b = MajoranaPolynomial::monomial(MajoranaString::of({1, 2}, 4));
  const DenseMatrix expect = dense_slow(a) * dense_slow(b) - dense_slow(b) * dense_slow(a);
  EXPECT_LT(max_abs(dense_slow(poly_commutator(a, b)) - expect), 1e-12);
  EXPECT_TRUE(poly_commutator(a, a).is_zero());
  EXPECT_TRUE(poly_commutator(MajoranaPolynomial::identity(4), b).is_zero());
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    const MajoranaPolynomial p = random_polynomial(rng, 8, 1 + k % 6, 6);
    const MajoranaPolynomial q = random_polynomial(rng, 8, 1 + k % 4, 6);
    const DenseMatrix dp = dense_slow(p);
    const DenseMatrix dq = dense_slow(q);
    ASSERT_LT(max_abs(dense_slow(poly_commutator(p, q)) - (dp * dq - dq * dp)), 1e-11);
    ASSERT_TRUE(poly_commutator(p, p).is_zero());
  }
}

TEST(poly_commutator, degree_bound_for_even_strings) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 500; ++k) {
    const int n = 24;
    const int s_degree = 2 * (1 + k % 3);
    const MajoranaString s(random_mask(rng, n, s_degree), n);
    const MajoranaPolynomial p = random_polynomial(rng, n, 1 + k % 8, 10);
    const MajoranaPolynomial c = poly_commutator(MajoranaPolynomial::monomial(s), p);
    ASSERT_LE(c.degree(), p.degree() + s_degree - 2);
  }
}

TEST(frobenius_norm, examples) {
  EXPECT_DOUBLE_EQ(frobenius_norm(MajoranaPolynomial::monomial(MajoranaString::of({1, 3}, 4))), 1.0);
  EXPECT_EQ(frobenius_norm(MajoranaPolynomial(4)), 0.0);
  const MajoranaPolynomial p(4, {{ModeMask::from_modes({0}), 0.6}, {ModeMask::from_modes({1, 2}), 0.8}});
  EXPECT_NEAR(frobenius_norm(p), 1.0, 1e-15);
  // normalized trace norm of the dense matrix
  EXPECT_NEAR(dense_frobenius_norm(dense_slow(p)), 1.0, 1e-12);
}

TEST(truncate_degree, examples) {
  std::mt19937_64 rng(8);
  const MajoranaPolynomial p = random_polynomial(rng, 10, 5, 8);
  EXPECT_EQ(truncate_degree(p, 5), p);
  EXPECT_EQ(truncate_degree(p, 9), p);
  const MajoranaPolynomial traceless = poly_add_scaled(p, MajoranaPolynomial::identity(10, p.coefficient({})), -1.0);
  EXPECT_TRUE(truncate_degree(traceless, 0).is_zero());
  EXPECT_THROW(truncate_degree(p, -1), UsageError);
}

TEST(truncate_degree, pythagorean_and_nonexpansive) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 300; ++k) {
    const MajoranaPolynomial p = random_polynomial(rng, 16, 1 + k % 10, 12);
    const int ell = k % 11;
    const MajoranaPolynomial t = truncate_degree(p, ell);
    const double rest = frobenius_norm(poly_add_scaled(p, t, -1.0));
    ASSERT_NEAR(std::pow(frobenius_norm(p), 2), std::pow(frobenius_norm(t), 2) + rest * rest, 1e-12);
    ASSERT_LE(frobenius_norm(t), frobenius_norm(p));
    ASSERT_EQ(truncate_degree(t, ell), t);
    ASSERT_NEAR(truncation_tail(p, ell), rest, 1e-12);
  }
}

TEST(prune_coefficients, examples) {
  std::mt19937_64 rng(10);
  const MajoranaPolynomial p = random_polynomial(rng, 8, 4, 8);
  EXPECT_EQ(prune_coefficients(p, 0.0), p);
  EXPECT_TRUE(prune_coefficients(p, 1e9).is_zero());
  const MajoranaPolynomial q(4, {{ModeMask{}, 1.0}, {ModeMask::from_modes({0, 1}), 1e-6}});
  EXPECT_EQ(prune_coefficients(q, 1e-5), MajoranaPolynomial(4, {{ModeMask{}, 1.0}}));
  EXPECT_THROW(prune_coefficients(q, -1.0), UsageError);
}

TEST(prune_coefficients, error_is_bounded_by_count) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    const MajoranaPolynomial p = poly_scale(random_polynomial(rng, 12, 6, 12), 0.1);
    const double eps = 0.05;
    const MajoranaPolynomial q = prune_coefficients(p, eps);
    const double removed = static_cast<double>(p.size() - q.size());
    ASSERT_LE(frobenius_distance(p, q), std::sqrt(removed) * eps + 1e-15);
  }
}

TEST(require_hermitian, flags_imaginary_parts) {
  const MajoranaPolynomial real(4, {{ModeMask::from_modes({0, 1}), Complex(0.5, 1e-12)}});
  EXPECT_NO_THROW(require_hermitian(real));
  const MajoranaPolynomial complex(4, {{ModeMask::from_modes({0, 1}), Complex(0.5, 1e-3)}});
  EXPECT_THROW(require_hermitian(complex), ValidationError);
}
