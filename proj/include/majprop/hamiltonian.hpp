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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "majprop/polynomial.hpp"

namespace majprop {

/// One term coeff * gamma_X of a quartic Hamiltonian; |X| is 2 or 4 and coeff is real.
struct HamiltonianTerm {
  ModeMask mask;
  double coeff = 0.0;

  friend bool operator==(const HamiltonianTerm&, const HamiltonianTerm&) = default;
};

/// H = identity_shift + sum_X h_X gamma_X with |X| in {2, 4}.
///
/// Duplicate masks are merged into the first occurrence at construction and
/// terms whose merged coefficient is exactly zero are dropped, otherwise the
/// given order is kept (it drives the greedy coloring). The identity shift is
/// carried for energy bookkeeping and never enters propagation.
class QuarticHamiltonian {
 public:
  QuarticHamiltonian() = default;
  /// Throws ValidationError on degree outside {2, 4}, non-finite coefficients or modes >= n_modes.
  QuarticHamiltonian(int n_modes, std::vector<HamiltonianTerm> terms, double identity_shift = 0.0);

  /// Splits a Hermitian polynomial of degree <= 4 into identity shift and terms, in mask order.
  static QuarticHamiltonian from_polynomial(const MajoranaPolynomial& p, double imag_tol = 1e-12);

  int n_modes() const { return n_modes_; }
  std::span<const HamiltonianTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  double identity_shift() const { return identity_shift_; }
  /// Largest number of terms containing a single mode.
  int sparsity() const { return sparsity_; }
  double max_abs_coeff() const { return max_abs_coeff_; }

  MajoranaPolynomial to_polynomial(bool include_identity = true) const;
  /// Terms of the given degree only (identity shift dropped).
  QuarticHamiltonian degree_part(int degree) const;

  friend bool operator==(const QuarticHamiltonian&, const QuarticHamiltonian&) = default;

 private:
  int n_modes_ = 0;
  std::vector<HamiltonianTerm> terms_;
  double identity_shift_ = 0.0;
  int sparsity_ = 0;
  double max_abs_coeff_ = 0.0;
};

/// Recomputes the sparsity by scanning every mode against every term.
int sparsity(const QuarticHamiltonian& h);

/// H0 + u V, keeping H0's terms first.
QuarticHamiltonian combine(const QuarticHamiltonian& h0, const QuarticHamiltonian& v, double u);

/// Ordered groups of term indices; terms inside one group have pairwise disjoint support.
struct TrotterSchedule {
  std::vector<std::vector<std::size_t>> groups;

  std::size_t group_count() const { return groups.size(); }
  friend bool operator==(const TrotterSchedule&, const TrotterSchedule&) = default;
};

/// Terms in listed order, each assigned the smallest color whose members it does not touch.
TrotterSchedule greedy_color_partition(const QuarticHamiltonian& h);

/// Empty string if the schedule is a valid disjoint-support partition of h's terms, else the first problem found.
std::string check_schedule(const QuarticHamiltonian& h, const TrotterSchedule& schedule);

struct ValidationReport {
  int n_modes = 0;
  std::size_t n_terms = 0;
  std::size_t n_quadratic = 0;
  std::size_t n_quartic = 0;
  int sparsity = 0;
  std::size_t groups = 0;
  double max_abs_coeff = 0.0;
  double identity_shift = 0.0;
  /// max |h_X| <= 1.
  bool normalized = true;
  std::vector<std::string> notes;
};

/// Re-checks structural invariants (throws ValidationError) and reports sparsity, color count and normalization.
ValidationReport validate(const QuarticHamiltonian& h);

/// 1D Fermi-Hubbard chain with unit hopping on N = 4L Majorana modes. Throws UsageError for L < 2.
QuarticHamiltonian build_hubbard_1d(int sites, double interaction, bool periodic = false);
/// Open-boundary L x L Fermi-Hubbard lattice, sites numbered row-major.
QuarticHamiltonian build_hubbard_2d(int side, double interaction);

/// {"n_majorana": N, "identity_shift": c, "terms": [{"mask_hex": "...", "coeff": h}, ...]}
std::string hamiltonian_to_json(const QuarticHamiltonian& h);
QuarticHamiltonian hamiltonian_from_json(const std::string& text);

std::string schedule_to_string(const QuarticHamiltonian& h, const TrotterSchedule& schedule);

}  // namespace majprop
