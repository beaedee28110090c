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
#include <string>
#include <utility>
#include <vector>

#include "majprop/hamiltonian.hpp"
#include "majprop/polynomial.hpp"
#include "majprop/term_table.hpp"

namespace majprop {

enum class TruncationMode {
  /// Drop strings above degree ell (and prune) right after every single term rotation.
  per_rotation,
  /// Truncate and prune once after each full Trotter sweep.
  per_sweep,
};

std::string to_string(TruncationMode mode);
/// Accepts "per_rotation" / "per_sweep". Throws UsageError.
TruncationMode truncation_mode_from_string(const std::string& s);

struct MPConfig {
  double delta_t = 0.01;
  int ell = 4;
  double prune_eps = 0.0;
  TruncationMode truncation_mode = TruncationMode::per_rotation;
  bool record_diagnostics = true;
  /// Abort with TermCapExceeded once the working polynomial holds more terms than this.
  std::size_t term_cap = 50'000'000;
  /// Threads used to scan for anticommuting terms. Results do not depend on it.
  unsigned workers = 1;
};

struct TraceRecord {
  std::size_t step = 0;
  double time = 0.0;
  std::size_t n_terms = 0;
  int max_degree = 0;
  double frob_norm = 0.0;
  /// sqrt of the sum of squared coefficients discarded so far (truncation and pruning).
  double discarded_weight = 0.0;
};

struct PropagationTrace {
  std::vector<TraceRecord> records;
  std::vector<std::string> warnings;
};

/// Columns step,time,n_terms,max_degree,frob_norm,discarded_weight.
void write_trace_csv(std::ostream& out, const PropagationTrace& trace);

/// Counters for one or more rotations.
struct RotationStats {
  double discarded_sq = 0.0;
  std::size_t generated = 0;
};

/// Conjugates every term of the table by exp(i theta/2 gamma_gen) in place.
///
/// Generated strings above max_degree are dropped, and touched terms with
/// |a| <= prune_eps (or exactly zero) are erased.
void rotate_table(TermTable& table, const ModeMask& generator, double theta, int max_degree, double prune_eps,
                  RotationStats& stats, unsigned workers = 1);

/// tau^g_dt(P) = exp(i dt H^g) P exp(-i dt H^g), each term rotated with theta = 2 dt h_X.
MajoranaPolynomial apply_group(const MajoranaPolynomial& p, const QuarticHamiltonian& h,
                               const TrotterSchedule& schedule, std::size_t group, double dt);

/// Groups applied in order 1..G, no truncation.
MajoranaPolynomial trotter_sweep(const MajoranaPolynomial& p, const QuarticHamiltonian& h,
                                 const TrotterSchedule& schedule, double dt);

/// Stateful Majorana propagation of one observable.
class Propagator {
 public:
  Propagator(const MajoranaPolynomial& a, const QuarticHamiltonian& h, const TrotterSchedule& schedule, MPConfig cfg);

  /// One Trotter sweep of length dt followed by the configured truncation.
  void step(double dt);
  /// Full delta_t sweeps from the current time, then one shorter sweep if t is not reached exactly.
  void advance_to(double t);

  double time() const { return time_; }
  std::size_t steps() const { return steps_; }
  const TermTable& table() const { return table_; }
  MajoranaPolynomial polynomial() const { return table_.to_polynomial(); }
  const PropagationTrace& trace() const { return trace_; }
  const MPConfig& config() const { return cfg_; }

 private:
  void truncate_all();
  void record();

  std::vector<std::vector<HamiltonianTerm>> groups_;
  MPConfig cfg_;
  TermTable table_;
  double time_ = 0.0;
  std::size_t steps_ = 0;
  std::size_t full_steps_ = 0;
  double partial_time_ = 0.0;
  double discarded_sq_ = 0.0;
  PropagationTrace trace_;
};

/// Number of full steps and length of the trailing partial step covering [0, t].
std::pair<std::size_t, double> step_split(double t, double dt);

/// MP output Trunc o T_{rest} o (Trunc o T_dt)^{floor(t/dt)} (A) and its trace.
std::pair<MajoranaPolynomial, PropagationTrace> mp_propagate(const MajoranaPolynomial& a, const QuarticHamiltonian& h,
                                                             const TrotterSchedule& schedule, double t,
                                                             const MPConfig& cfg);

/// 34 t dt Delta^2 (ell+2)^2 ||A||_F + ceil(t/dt) eta_star.
double apriori_error_bound(double t, double dt, int sparsity, int ell, double eta_star, double norm_a);

/// sqrt(eta_star) / (ell Delta) with unit prefactor; 0.01 when eta_star is 0.
double optimal_time_step(int ell, int sparsity, double eta_star);

/// 2 Delta max(1, max|h|) sqrt(d(d+2)) ||A||_F, the degree-d commutator bound.
double commutator_bound(int sparsity, double max_abs_coeff, int degree, double norm_a);

/// 2 (t(d+2))^2 (G^2 + Delta^2) max(1, max|h|)^2 ||A||_F for disjoint-support groups.
double trotter_error_bound(double t, int degree, std::size_t groups, int sparsity, double max_abs_coeff,
                           double norm_a);

}  // namespace majprop
