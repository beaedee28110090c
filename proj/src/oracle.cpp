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

#include "majprop/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "majprop/errors.hpp"
#include "majprop/propagation.hpp"

namespace majprop {

namespace {

int fermion_count(int n_majorana) { return n_majorana / 2; }

bool below_parity(uint64_t state, int mode) {
  return (std::popcount(state & ((uint64_t{1} << mode) - 1)) & 1) != 0;
}

// gamma_X |b> = phase[b] |b ^ flip>.
struct MonomialAction {
  uint64_t flip = 0;
  std::vector<Complex> phase;
};

MonomialAction monomial_action(const ModeMask& x, int n_majorana) {
  const std::size_t dim = std::size_t{1} << fermion_count(n_majorana);
  const std::vector<int> modes = x.modes();
  MonomialAction act;
  act.phase.resize(dim);
  for (int m : modes) act.flip ^= uint64_t{1} << (m / 2);
  const Complex lead = Phase(hermitian_phase_exponent(static_cast<int>(modes.size()))).value();
  for (std::size_t b = 0; b < dim; ++b) {
    uint64_t s = b;
    Phase ph;
    bool negative = false;
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) {
      const int j = *it / 2;
      if (below_parity(s, j)) negative = !negative;
      if (*it % 2 == 1) ph = ph * (((s >> j) & 1) ? Phase::minus_i() : Phase::i());
      s ^= uint64_t{1} << j;
    }
    act.phase[b] = (negative ? -lead : lead) * ph.value();
  }
  return act;
}

void check_cap(int cap) {
  if (cap < 2 || cap > kHardOracleCap) {
    throw UsageError("oracle cap must be in [2, " + std::to_string(kHardOracleCap) + "], got " + std::to_string(cap));
  }
}

DenseMatrix heisenberg(const DenseMatrix& a, const Eigen::VectorXd& w, const DenseMatrix& v, double t) {
  DenseMatrix b = v.adjoint() * a * v;
  const Eigen::Index n = w.size();
  Eigen::VectorXcd e(n);
  for (Eigen::Index j = 0; j < n; ++j) e(j) = std::polar(1.0, w(j) * t);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < n; ++j) b(j, k) *= e(j) * std::conj(e(k));
  }
  return v * b * v.adjoint();
}

}  // namespace

std::size_t dense_dimension(int n_majorana, int cap) {
  check_cap(cap);
  if (n_majorana < 0 || n_majorana % 2 != 0) throw UsageError("number of Majorana modes must be even and >= 0");
  if (n_majorana > cap) {
    throw UsageError("dense oracle limited to " + std::to_string(cap) + " Majorana modes, got " +
                     std::to_string(n_majorana));
  }
  return std::size_t{1} << fermion_count(n_majorana);
}

DenseMatrix annihilation_matrix(int mode, int n_majorana, int cap) {
  const auto dim = static_cast<Eigen::Index>(dense_dimension(n_majorana, cap));
  if (mode < 0 || mode >= fermion_count(n_majorana)) throw UsageError("fermionic mode out of range");
  DenseMatrix c = DenseMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto s = static_cast<uint64_t>(b);
    if ((s >> mode) & 1) {
      c(static_cast<Eigen::Index>(s ^ (uint64_t{1} << mode)), b) = below_parity(s, mode) ? -1.0 : 1.0;
    }
  }
  return c;
}

DenseMatrix creation_matrix(int mode, int n_majorana, int cap) {
  return annihilation_matrix(mode, n_majorana, cap).adjoint();
}

DenseOperator string_to_dense(const MajoranaString& s, int cap) {
  const int n = s.n_modes();
  const auto dim = static_cast<Eigen::Index>(dense_dimension(n, cap));
  DenseMatrix m = DenseMatrix::Identity(dim, dim);
  const Complex i(0.0, 1.0);
  for (int x : s.mask().modes()) {
    const DenseMatrix c = annihilation_matrix(x / 2, n, cap);
    const DenseMatrix cd = c.adjoint();
    const DenseMatrix g = (x % 2 == 0) ? DenseMatrix(cd + c) : DenseMatrix(i * (cd - c));
    m = m * g;
  }
  if (hermitian_phase_exponent(s.degree()) == 1) m *= i;
  return {n, std::move(m)};
}

DenseOperator to_dense(const MajoranaPolynomial& p, int cap) {
  const auto dim = static_cast<Eigen::Index>(dense_dimension(p.n_modes(), cap));
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const Term& t : p.terms()) {
    const MonomialAction act = monomial_action(t.mask, p.n_modes());
    for (Eigen::Index b = 0; b < dim; ++b) {
      m(static_cast<Eigen::Index>(static_cast<uint64_t>(b) ^ act.flip), b) += t.coeff * act.phase[static_cast<std::size_t>(b)];
    }
  }
  return {p.n_modes(), std::move(m)};
}

DenseOperator to_dense(const QuarticHamiltonian& h, int cap) {
  return to_dense(h.to_polynomial(true), cap);
}

double dense_frobenius_norm(const DenseMatrix& m) {
  if (m.rows() == 0) return 0.0;
  return std::sqrt(m.squaredNorm() / static_cast<double>(m.rows()));
}

namespace {

// Calls f(mask, a_X) for every string X; a_X = tr(gamma_X M) / dim = sum_b phase_X(b) M(b, b ^ f) / dim.
template <typename F>
void for_each_coefficient(const DenseOperator& m, int cap, F&& f) {
  const int n = m.n_majorana;
  const std::size_t dim = dense_dimension(n, cap);
  if (static_cast<std::size_t>(m.matrix.rows()) != dim || static_cast<std::size_t>(m.matrix.cols()) != dim) {
    throw UsageError("dense operator shape does not match its mode count");
  }
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t bits = 0; bits < count; ++bits) {
    ModeMask x;
    x.set_word(0, bits);
    const MonomialAction act = monomial_action(x, n);
    Complex sum = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
      sum += act.phase[b] * m.matrix(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b ^ act.flip));
    }
    f(x, sum / static_cast<double>(dim));
  }
}

}  // namespace

MajoranaPolynomial majorana_expansion(const DenseOperator& m, int cap) {
  std::vector<Term> terms;
  for_each_coefficient(m, cap, [&](const ModeMask& x, Complex a) {
    if (a != Complex(0.0, 0.0)) terms.push_back({x, a});
  });
  return MajoranaPolynomial(m.n_majorana, std::move(terms));
}

double dense_truncation_tail(const DenseOperator& m, int ell, int cap) {
  double sq = 0.0;
  for_each_coefficient(m, cap, [&](const ModeMask& x, Complex a) {
    if (x.popcount() > ell) sq += std::norm(a);
  });
  return std::sqrt(sq);
}

ExactEvolver::ExactEvolver(const QuarticHamiltonian& h, int cap) : n_majorana_(h.n_modes()), cap_(cap) {
  const DenseOperator hd = to_dense(h, cap);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(hd.matrix);
  if (solver.info() != Eigen::Success) throw ValidationError("Hamiltonian eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

DenseOperator ExactEvolver::evolve(const DenseOperator& a, double t) const {
  if (a.n_majorana != n_majorana_) throw UsageError("observable and Hamiltonian mode counts differ");
  return {n_majorana_, heisenberg(a.matrix, eigenvalues_, eigenvectors_, t)};
}

DenseOperator ExactEvolver::evolve(const MajoranaPolynomial& a, double t) const {
  return evolve(to_dense(a, cap_), t);
}

DenseOperator exact_heisenberg(const MajoranaPolynomial& a, const QuarticHamiltonian& h, double t, int cap) {
  return ExactEvolver(h, cap).evolve(a, t);
}

double best_truncation_error(const ExactEvolver& evolver, const MajoranaPolynomial& a, double t, int ell,
                             int grid_points) {
  if (grid_points < 2) throw UsageError("eta* grid needs at least 2 points");
  if (!(t >= 0.0)) throw UsageError("eta* horizon must be >= 0");
  if (ell < 0) throw UsageError("ell must be >= 0");
  const DenseOperator a0 = to_dense(a, kHardOracleCap);
  double worst = 0.0;
  const int points = t == 0.0 ? 1 : grid_points;
  for (int k = 0; k < points; ++k) {
    const double s = points == 1 ? 0.0 : t * static_cast<double>(k) / static_cast<double>(points - 1);
    worst = std::max(worst, dense_truncation_tail(evolver.evolve(a0, s), ell, kHardOracleCap));
  }
  return worst;
}

double best_truncation_error(const QuarticHamiltonian& h, const MajoranaPolynomial& a, double t, int ell,
                             int grid_points, int cap) {
  return best_truncation_error(ExactEvolver(h, cap), a, t, ell, grid_points);
}

double weak_interaction_horizon(double u, int sparsity, int degree_a) {
  if (u < 0.0) throw UsageError("interaction strength u must be >= 0");
  if (u == 0.0) return std::numeric_limits<double>::infinity();
  if (sparsity < 1) throw UsageError("sparsity must be >= 1");
  constexpr double e = std::numbers::e;
  return std::log(e / u) / (8.0 * e * e * sparsity * (degree_a + 2.0));
}

double weak_interaction_rhs(double t, double t_max, int ell, int degree_a, double norm_a) {
  const double ratio = std::isinf(t_max) ? 0.0 : t / t_max;
  if (!(ratio < 1.0)) throw UsageError("weak-interaction bound needs t < t_max");
  return std::pow(ratio, 0.5 * (ell - degree_a)) / (1.0 - ratio) * norm_a;
}

WeakInteractionReport verify_weak_interaction_bound(const QuarticHamiltonian& h0, const QuarticHamiltonian& v, double u,
                                                    const MajoranaPolynomial& a, double t, int ell, int grid_points,
                                                    int cap) {
  for (const HamiltonianTerm& term : h0.terms()) {
    if (term.mask.popcount() != 2) throw UsageError("H0 must be quadratic");
  }
  for (const HamiltonianTerm& term : v.terms()) {
    if (term.mask.popcount() != 4) throw UsageError("V must be quartic");
  }
  const QuarticHamiltonian h = combine(h0, v, u);
  WeakInteractionReport r;
  r.u = u;
  r.t = t;
  r.ell = ell;
  r.degree_a = a.degree();
  r.sparsity = h.sparsity();
  r.grid_points = grid_points;
  r.norm_a = frobenius_norm(a);
  r.t_max = weak_interaction_horizon(u, std::max(1, r.sparsity), r.degree_a);
  r.eta_star = best_truncation_error(h, a, t, ell, grid_points, cap);
  r.applicable = t < r.t_max && ell >= r.degree_a;
  if (r.applicable) {
    r.rhs = weak_interaction_rhs(t, r.t_max, ell, r.degree_a, r.norm_a);
    r.pass = r.eta_star <= r.rhs + 1e-12;
  } else {
    r.rhs = std::numeric_limits<double>::infinity();
    r.pass = true;
  }
  return r;
}

MajoranaPolynomial trotter_only_reference(const MajoranaPolynomial& a, const QuarticHamiltonian& h,
                                          const TrotterSchedule& schedule, double t, double dt, double prune_eps,
                                          std::size_t term_cap, unsigned workers) {
  MPConfig cfg;
  cfg.delta_t = dt;
  cfg.ell = a.n_modes();
  cfg.prune_eps = prune_eps;
  cfg.truncation_mode = TruncationMode::per_rotation;
  cfg.record_diagnostics = false;
  cfg.term_cap = term_cap;
  cfg.workers = workers;
  return mp_propagate(a, h, schedule, t, cfg).first;
}

DenseTrotter::DenseTrotter(const QuarticHamiltonian& h, const TrotterSchedule& schedule, int cap)
    : n_majorana_(h.n_modes()) {
  if (auto problem = check_schedule(h, schedule); !problem.empty()) throw UsageError("invalid Trotter schedule: " + problem);
  for (const auto& group : schedule.groups) {
    std::vector<HamiltonianTerm> terms;
    for (std::size_t idx : group) terms.push_back(h.terms()[idx]);
    const DenseOperator hg = to_dense(QuarticHamiltonian(h.n_modes(), std::move(terms)), cap);
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(hg.matrix);
    if (solver.info() != Eigen::Success) throw ValidationError("group eigendecomposition failed");
    eigenvalues_.push_back(solver.eigenvalues());
    eigenvectors_.push_back(solver.eigenvectors());
  }
}

DenseOperator DenseTrotter::sweep(const DenseOperator& a, double dt) const {
  if (a.n_majorana != n_majorana_) throw UsageError("observable and Hamiltonian mode counts differ");
  DenseMatrix m = a.matrix;
  for (std::size_t g = 0; g < eigenvalues_.size(); ++g) m = heisenberg(m, eigenvalues_[g], eigenvectors_[g], dt);
  return {n_majorana_, std::move(m)};
}

DenseOperator DenseTrotter::evolve(const DenseOperator& a, double t, double dt) const {
  const auto [full, rest] = step_split(t, dt);
  DenseOperator out = a;
  for (std::size_t k = 0; k < full; ++k) out = sweep(out, dt);
  if (rest > 0.0) out = sweep(out, rest);
  return out;
}

}  // namespace majprop
