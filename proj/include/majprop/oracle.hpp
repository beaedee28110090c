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
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "majprop/hamiltonian.hpp"
#include "majprop/polynomial.hpp"

namespace majprop {

// Dense Fock-space realization used as ground truth on small systems.
// Basis state b has bit j equal to n_j; c*_j carries the sign (-1)^{sum_{k<j} n_k}.

constexpr int kDefaultOracleCap = 16;
constexpr int kHardOracleCap = 24;

using DenseMatrix = Eigen::MatrixXcd;

struct DenseOperator {
  int n_majorana = 0;
  DenseMatrix matrix;
};

/// 2^{n_majorana/2}. Throws UsageError if n_majorana is odd, above cap, or cap exceeds kHardOracleCap.
std::size_t dense_dimension(int n_majorana, int cap = kDefaultOracleCap);

DenseMatrix annihilation_matrix(int mode, int n_majorana, int cap = kDefaultOracleCap);
DenseMatrix creation_matrix(int mode, int n_majorana, int cap = kDefaultOracleCap);

/// gamma_S built from c / c* matrix products, independent of the symbolic algebra.
DenseOperator string_to_dense(const MajoranaString& s, int cap = kDefaultOracleCap);
DenseOperator to_dense(const MajoranaPolynomial& p, int cap = kDefaultOracleCap);
/// Includes the identity shift.
DenseOperator to_dense(const QuarticHamiltonian& h, int cap = kDefaultOracleCap);

/// sqrt(tr(M* M) / dim).
double dense_frobenius_norm(const DenseMatrix& m);

/// a_X = tr(gamma_X M) / dim for every X, exact zeros dropped.
MajoranaPolynomial majorana_expansion(const DenseOperator& m, int cap = kDefaultOracleCap);
/// sqrt(sum_{|X| > ell} |tr(gamma_X M) / dim|^2).
double dense_truncation_tail(const DenseOperator& m, int ell, int cap = kDefaultOracleCap);

/// exp(iHt) A exp(-iHt) from one Hermitian eigendecomposition of H.
class ExactEvolver {
 public:
  explicit ExactEvolver(const QuarticHamiltonian& h, int cap = kDefaultOracleCap);

  int n_majorana() const { return n_majorana_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  DenseOperator evolve(const DenseOperator& a, double t) const;
  DenseOperator evolve(const MajoranaPolynomial& a, double t) const;

 private:
  int n_majorana_;
  int cap_;
  Eigen::VectorXd eigenvalues_;
  DenseMatrix eigenvectors_;
};

DenseOperator exact_heisenberg(const MajoranaPolynomial& a, const QuarticHamiltonian& h, double t,
                               int cap = kDefaultOracleCap);

/// Largest tail norm above degree ell of A(s) over grid_points equally spaced s in [0, t], endpoints included.
double best_truncation_error(const ExactEvolver& evolver, const MajoranaPolynomial& a, double t, int ell,
                             int grid_points = 64);
double best_truncation_error(const QuarticHamiltonian& h, const MajoranaPolynomial& a, double t, int ell,
                             int grid_points = 64, int cap = kDefaultOracleCap);

/// log(e/u) / (8 e^2 Delta (deg A + 2)); infinity for u = 0.
double weak_interaction_horizon(double u, int sparsity, int degree_a);
/// (t/t_max)^{(ell - deg A)/2} / (1 - t/t_max) * ||A||_F; requires t < t_max.
double weak_interaction_rhs(double t, double t_max, int ell, int degree_a, double norm_a);

struct WeakInteractionReport {
  double u = 0.0;
  double t = 0.0;
  int ell = 0;
  int degree_a = 0;
  int sparsity = 0;
  int grid_points = 0;
  double t_max = 0.0;
  double norm_a = 0.0;
  /// Grid maximum; a lower bound on the supremum over [0, t].
  double eta_star = 0.0;
  double rhs = 0.0;
  /// False when t >= t_max; the bound says nothing there.
  bool applicable = false;
  bool pass = false;
};

/// eta* for H0 + u V against the weak-interaction bound.
WeakInteractionReport verify_weak_interaction_bound(const QuarticHamiltonian& h0, const QuarticHamiltonian& v, double u,
                                                    const MajoranaPolynomial& a, double t, int ell,
                                                    int grid_points = 64, int cap = kDefaultOracleCap);

/// Untruncated Trotter evolution, i.e. propagation with ell = N and the given pruning threshold.
MajoranaPolynomial trotter_only_reference(const MajoranaPolynomial& a, const QuarticHamiltonian& h,
                                          const TrotterSchedule& schedule, double t, double dt,
                                          double prune_eps = 0.0, std::size_t term_cap = 50'000'000,
                                          unsigned workers = 1);

/// Dense counterpart of the Trotter sweeps: exp(i dt H^g) conjugations in group order,
/// full steps of dt followed by one shorter step if t is not a multiple of dt.
class DenseTrotter {
 public:
  DenseTrotter(const QuarticHamiltonian& h, const TrotterSchedule& schedule, int cap = kDefaultOracleCap);

  DenseOperator sweep(const DenseOperator& a, double dt) const;
  DenseOperator evolve(const DenseOperator& a, double t, double dt) const;

 private:
  int n_majorana_;
  std::vector<Eigen::VectorXd> eigenvalues_;
  std::vector<DenseMatrix> eigenvectors_;
};

}  // namespace majprop
