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

#include "majprop/hamiltonian.hpp"

#include <gtest/gtest.h>

#include <random>

#include "majprop/errors.hpp"
#include "majprop/fermion.hpp"
#include "majprop/oracle.hpp"
#include "majprop/verification.hpp"

using namespace majprop;

namespace {

HamiltonianTerm term(std::initializer_list<int> modes, double c) { return {ModeMask::from_modes(modes), c}; }

// -sum_{<ij>,s} (c*_is c_js + h.c.) + U sum_i n_iu n_id straight from the c / c* matrices.
DenseMatrix hubbard_from_ladder_operators(int n_sites, const std::vector<std::pair<int, int>>& bonds, double u) {
  const int n = 4 * n_sites;
  const auto dim = static_cast<Eigen::Index>(dense_dimension(n));
  DenseMatrix h = DenseMatrix::Zero(dim, dim);
  for (const auto& [i, j] : bonds) {
    for (bool down : {false, true}) {
      const DenseMatrix hop =
          creation_matrix(spin_orbital(i, down), n) * annihilation_matrix(spin_orbital(j, down), n);
      h -= hop + hop.adjoint();
    }
  }
  for (int i = 0; i < n_sites; ++i) {
    const DenseMatrix nu = creation_matrix(spin_orbital(i, false), n) * annihilation_matrix(spin_orbital(i, false), n);
    const DenseMatrix nd = creation_matrix(spin_orbital(i, true), n) * annihilation_matrix(spin_orbital(i, true), n);
    h += u * nu * nd;
  }
  return h;
}

int recount_sparsity(const QuarticHamiltonian& h) {
  int best = 0;
  for (int m = 0; m < h.n_modes(); ++m) {
    int c = 0;
    for (const HamiltonianTerm& t : h.terms()) c += t.mask.test(m) ? 1 : 0;
    best = std::max(best, c);
  }
  return best;
}

bool groups_disjoint(const QuarticHamiltonian& h, const TrotterSchedule& s) {
  for (const auto& g : s.groups) {
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        if (overlap(h.terms()[g[a]].mask, h.terms()[g[b]].mask) != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(quartic_hamiltonian, rejects_bad_terms) {
  EXPECT_THROW(QuarticHamiltonian(4, {term({0, 1, 2}, 1.0)}), ValidationError);
  EXPECT_THROW(QuarticHamiltonian(4, {term({0}, 1.0)}), ValidationError);
  EXPECT_THROW(QuarticHamiltonian(4, {term({3, 4}, 1.0)}), ValidationError);
  EXPECT_THROW(QuarticHamiltonian(4, {term({0, 1}, std::nan(""))}), ValidationError);
  EXPECT_THROW(QuarticHamiltonian(5, {}), ValidationError);
}

TEST(quartic_hamiltonian, merges_duplicates_in_first_position) {
  const QuarticHamiltonian h(6, {term({2, 3}, 1.0), term({0, 1}, 0.5), term({2, 3}, 0.25), term({4, 5}, 1.0),
                                 term({4, 5}, -1.0)});
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h.terms()[0], term({2, 3}, 1.25));
  EXPECT_EQ(h.terms()[1], term({0, 1}, 0.5));
}

TEST(sparsity, examples) {
  EXPECT_EQ(QuarticHamiltonian(4, {term({0, 1}, 1.0)}).sparsity(), 1);
  const QuarticHamiltonian two(4, {term({0, 1}, 1.0), term({1, 2}, 1.0)});
  EXPECT_EQ(two.sparsity(), 2);
  EXPECT_EQ(sparsity(two), 2);
  for (int sites = 2; sites <= 8; ++sites) {
    const QuarticHamiltonian h = build_hubbard_1d(sites, 1.0);
    EXPECT_EQ(h.sparsity(), recount_sparsity(h));
    EXPECT_EQ(sparsity(h), recount_sparsity(h));
  }
  const QuarticHamiltonian h2 = build_hubbard_2d(3, 1.0);
  EXPECT_EQ(h2.sparsity(), recount_sparsity(h2));
}

TEST(greedy_color_partition, disjoint_terms_share_one_color) {
  const QuarticHamiltonian h(8, {term({0, 1}, 1.0), term({2, 3}, 1.0), term({4, 5, 6, 7}, 1.0)});
  EXPECT_EQ(greedy_color_partition(h).group_count(), 1u);
}

TEST(greedy_color_partition, path_needs_two_colors) {
  const QuarticHamiltonian h(4, {term({0, 1}, 1.0), term({1, 2}, 1.0), term({2, 3}, 1.0)});
  const TrotterSchedule one{{{0, 1, 2}}};
  EXPECT_FALSE(check_schedule(h, one).empty());
  const TrotterSchedule s = greedy_color_partition(h);
  EXPECT_EQ(s, (TrotterSchedule{{{0, 2}, {1}}}));
  EXPECT_EQ(check_schedule(h, s), "");
}

TEST(greedy_color_partition, hubbard_instances_are_valid) {
  std::vector<QuarticHamiltonian> models;
  for (int sites = 2; sites <= 8; ++sites) models.push_back(build_hubbard_1d(sites, 1.0));
  models.push_back(build_hubbard_2d(3, 1.0));
  models.push_back(build_hubbard_2d(5, 1.0));
  for (const QuarticHamiltonian& h : models) {
    const TrotterSchedule s = greedy_color_partition(h);
    EXPECT_EQ(check_schedule(h, s), "");
    EXPECT_TRUE(groups_disjoint(h, s));
    EXPECT_LE(s.group_count(), static_cast<std::size_t>(4 * h.sparsity()));
    std::vector<int> seen(h.size(), 0);
    for (const auto& g : s.groups) {
      for (std::size_t i : g) ++seen[i];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST(check_schedule, detects_problems) {
  const QuarticHamiltonian h(4, {term({0, 1}, 1.0), term({2, 3}, 1.0)});
  EXPECT_EQ(check_schedule(h, TrotterSchedule{{{0, 1}}}), "");
  EXPECT_NE(check_schedule(h, TrotterSchedule{{{0}}}), "");
  EXPECT_NE(check_schedule(h, TrotterSchedule{{{0, 1}, {1}}}), "");
  EXPECT_NE(check_schedule(h, TrotterSchedule{{{0, 1, 2}}}), "");
}

TEST(build_hubbard_1d, free_chain_is_quadratic) {
  const QuarticHamiltonian h = build_hubbard_1d(5, 0.0);
  for (const HamiltonianTerm& t : h.terms()) EXPECT_EQ(t.mask.popcount(), 2);
  EXPECT_EQ(h.size(), 4u * 2u * 2u);
  EXPECT_EQ(h.identity_shift(), 0.0);
}

TEST(build_hubbard_1d, two_sites_match_ladder_operators) {
  for (double u : {0.0, 1.0, 2.5, -3.0}) {
    const QuarticHamiltonian h = build_hubbard_1d(2, u);
    const DenseMatrix expect = hubbard_from_ladder_operators(2, {{0, 1}}, u);
    EXPECT_LT((to_dense(h).matrix - expect).cwiseAbs().maxCoeff(), 1e-12) << u;
  }
}

TEST(build_hubbard_1d, periodic_ring_matches_ladder_operators) {
  const QuarticHamiltonian h = build_hubbard_1d(3, 1.5, true);
  const DenseMatrix expect = hubbard_from_ladder_operators(3, {{0, 1}, {1, 2}, {2, 0}}, 1.5);
  EXPECT_LT((to_dense(h).matrix - expect).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(build_hubbard_1d, interaction_expansion_constants) {
  const double u = 2.0;
  const QuarticHamiltonian h = build_hubbard_1d(2, u);
  int quartic = 0;
  for (const HamiltonianTerm& t : h.terms()) {
    if (t.mask.popcount() == 4) {
      ++quartic;
      EXPECT_DOUBLE_EQ(std::abs(t.coeff), u / 4);
      EXPECT_DOUBLE_EQ(t.coeff, -u / 4);
    }
  }
  EXPECT_EQ(quartic, 2);
  EXPECT_DOUBLE_EQ(h.identity_shift(), 2 * u / 4);
  // hopping: -(1/2) gamma_{2p,2q+1} + (1/2) gamma_{2p+1,2q} for p < q
  const MajoranaPolynomial poly = h.to_polynomial(false);
  EXPECT_EQ(poly.coefficient(ModeMask::from_modes({0, 5})), Complex(-0.5));
  EXPECT_EQ(poly.coefficient(ModeMask::from_modes({1, 4})), Complex(0.5));
  EXPECT_EQ(poly.coefficient(ModeMask::from_modes({0, 1})), Complex(u / 4));
}

TEST(build_hubbard_1d, rejects_short_chains) {
  EXPECT_THROW(build_hubbard_1d(1, 1.0), UsageError);
  EXPECT_THROW(build_hubbard_1d(65, 1.0), UsageError);
}

TEST(build_hubbard_2d, plaquette_counts_and_dense) {
  const QuarticHamiltonian free = build_hubbard_2d(2, 0.0);
  EXPECT_EQ(free.size(), 4u * 2u * 2u);
  const QuarticHamiltonian h = build_hubbard_2d(2, 1.0);
  const DenseMatrix expect = hubbard_from_ladder_operators(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, 1.0);
  const DenseMatrix got = to_dense(h).matrix;
  EXPECT_LT((got - expect).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((got - got.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(build_hubbard_2d, three_by_three_structure) {
  const QuarticHamiltonian h = build_hubbard_2d(3, 1.0);
  EXPECT_EQ(h.n_modes(), 36);
  // 12 bonds x 2 spins x 2 strings, 9 sites x (1 quartic + 2 quadratic)
  EXPECT_EQ(h.size(), 48u + 27u);
  EXPECT_EQ(h.sparsity(), recount_sparsity(h));
  // real coefficients on Hermitian strings make every term Hermitian
  for (const HamiltonianTerm& t : h.terms()) EXPECT_TRUE(std::isfinite(t.coeff));
}

TEST(hamiltonians, dense_forms_are_hermitian) {
  for (const QuarticHamiltonian& h : {build_hubbard_1d(2, 1.0), build_hubbard_1d(3, 4.0), build_hubbard_1d(3, 1.0, true)}) {
    const DenseMatrix m = to_dense(h).matrix;
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(validate, reports) {
  const ValidationReport empty = validate(QuarticHamiltonian(4, {}));
  EXPECT_EQ(empty.sparsity, 0);
  EXPECT_EQ(empty.groups, 0u);
  EXPECT_TRUE(empty.notes.empty());

  const ValidationReport u4 = validate(build_hubbard_1d(4, 4.0));
  EXPECT_DOUBLE_EQ(u4.max_abs_coeff, 1.0);
  EXPECT_TRUE(u4.normalized);
  EXPECT_TRUE(u4.notes.empty());

  const ValidationReport u8 = validate(build_hubbard_1d(4, 8.0));
  EXPECT_FALSE(u8.normalized);
  EXPECT_EQ(u8.notes.size(), 1u);
  EXPECT_EQ(u8.n_quartic, 4u);
}

TEST(hamiltonian_json, round_trip_is_bit_identical) {
  for (const QuarticHamiltonian& h : {build_hubbard_1d(6, 1.0 / 3.0), build_hubbard_2d(3, 0.7)}) {
    const std::string text = hamiltonian_to_json(h);
    const QuarticHamiltonian back = hamiltonian_from_json(text);
    EXPECT_EQ(back, h);
    EXPECT_EQ(hamiltonian_to_json(back), text);
  }
  EXPECT_THROW(hamiltonian_from_json("{"), ValidationError);
  EXPECT_THROW(hamiltonian_from_json(R"({"n_majorana": 4, "terms": [{"mask_hex": "7", "coeff": 1}]})"),
               ValidationError);
}

TEST(combine, scales_the_perturbation) {
  const QuarticHamiltonian h0 = build_hubbard_1d(3, 0.0);
  const QuarticHamiltonian v = build_hubbard_1d(3, 1.0).degree_part(4);
  const QuarticHamiltonian h = combine(h0, v, 0.5);
  EXPECT_EQ(h.size(), h0.size() + v.size());
  EXPECT_EQ(h.terms()[h0.size()].coeff, -0.125);
  for (std::size_t i = 0; i < h0.size(); ++i) EXPECT_EQ(h.terms()[i], h0.terms()[i]);
}

TEST(sparsity, bounds_anticommuting_term_count) {
  // at most Delta * |S| terms fail to commute with gamma_S
  std::mt19937_64 rng(31);
  for (const QuarticHamiltonian& h : {build_hubbard_1d(6, 1.0), build_hubbard_2d(3, 2.0)}) {
    for (int k = 0; k < 500; ++k) {
      const int degree = 1 + k % 12;
      const ModeMask s = random_mask(rng, h.n_modes(), degree);
      int count = 0;
      for (const HamiltonianTerm& t : h.terms()) count += masks_anticommute(t.mask, s) ? 1 : 0;
      ASSERT_LE(count, h.sparsity() * degree);
    }
  }
}
