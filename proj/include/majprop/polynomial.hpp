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
#include <cstddef>
#include <span>
#include <vector>

#include "majprop/majorana_string.hpp"

namespace majprop {

using Complex = std::complex<double>;

struct Term {
  ModeMask mask;
  Complex coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse observable A = sum_X a_X gamma_X over a fixed number of Majorana modes.
///
/// Terms are kept sorted by mask with no duplicate masks and no exactly-zero
/// coefficients. Approximate zeros are only removed by prune_coefficients.
class MajoranaPolynomial {
 public:
  MajoranaPolynomial() = default;
  explicit MajoranaPolynomial(int n_modes);
  /// Sorts, merges duplicate masks (summing in input order) and drops exact zeros.
  MajoranaPolynomial(int n_modes, std::vector<Term> terms);

  static MajoranaPolynomial monomial(const MajoranaString& s, Complex coeff = 1.0);
  static MajoranaPolynomial identity(int n_modes, Complex coeff = 1.0);

  int n_modes() const { return n_modes_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }

  /// Coefficient of gamma_X, zero if absent.
  Complex coefficient(const ModeMask& mask) const;
  /// Largest stored popcount; 0 for the zero polynomial.
  int degree() const;
  /// Largest |Im a_X|.
  double max_imag() const;

  /// Takes ownership of already-canonical terms. Used by the propagation engine.
  static MajoranaPolynomial from_sorted_unique(int n_modes, std::vector<Term> terms);

  friend bool operator==(const MajoranaPolynomial&, const MajoranaPolynomial&) = default;

 private:
  int n_modes_ = 0;
  std::vector<Term> terms_;
};

/// P + c Q.
MajoranaPolynomial poly_add_scaled(const MajoranaPolynomial& p, const MajoranaPolynomial& q, Complex c);
MajoranaPolynomial poly_scale(const MajoranaPolynomial& p, Complex c);
MajoranaPolynomial poly_multiply(const MajoranaPolynomial& p, const MajoranaPolynomial& q);
/// [P, Q] = PQ - QP, only anticommuting string pairs contribute.
MajoranaPolynomial poly_commutator(const MajoranaPolynomial& p, const MajoranaPolynomial& q);
/// Adjoint: a_X -> conj(a_X), since every gamma_X is Hermitian.
MajoranaPolynomial poly_adjoint(const MajoranaPolynomial& p);

/// Normalized Frobenius norm, sqrt(sum |a_X|^2).
double frobenius_norm(const MajoranaPolynomial& p);
/// ||P - Q||_F computed by a merge over both term lists.
double frobenius_distance(const MajoranaPolynomial& p, const MajoranaPolynomial& q);

/// Drops every term of degree > ell.
MajoranaPolynomial truncate_degree(const MajoranaPolynomial& p, int ell);
/// sqrt(sum_{|X| > ell} |a_X|^2), i.e. ||P - Trunc_ell(P)||_F.
double truncation_tail(const MajoranaPolynomial& p, int ell);
/// Drops every term with |a_X| <= eps. eps = 0 is a no-op on canonical input.
MajoranaPolynomial prune_coefficients(const MajoranaPolynomial& p, double eps);

/// exp(i theta/2 gamma_T) gamma_S exp(-i theta/2 gamma_T): gamma_S when the two commute,
/// otherwise cos(theta) gamma_S + i sin(theta) gamma_T gamma_S.
MajoranaPolynomial rotate_string(double theta, const MajoranaString& t, const MajoranaString& s);

/// Throws ValidationError if some coefficient has |Im| > tol.
void require_hermitian(const MajoranaPolynomial& p, double tol = 1e-10);

}  // namespace majprop
