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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "majprop/hamiltonian.hpp"
#include "majprop/polynomial.hpp"
#include "majprop/propagation.hpp"

namespace majprop {

/// One measured quantity against its bound.
struct BoundCheck {
  std::string label;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<BoundCheck> checks;
  /// Extra scalar diagnostics, in insertion order.
  std::vector<std::pair<std::string, double>> metrics;

  std::size_t violations() const;
  double metric(const std::string& key) const;
};

/// Pair string gamma_{2m,2m+1} of the up-spin orbital on 0-based site ceil(L/2) - 1 of a chain.
MajoranaPolynomial default_pair_observable(int sites, int n_majorana);

/// Uniformly random string of exactly `degree` modes.
ModeMask random_mask(std::mt19937_64& rng, int n_modes, int degree);
/// 1 to max_terms random strings of degree <= degree (one of them exactly degree) with Gaussian complex coefficients.
MajoranaPolynomial random_polynomial(std::mt19937_64& rng, int n_modes, int degree, int max_terms = 8);

struct CommutatorSuiteOptions {
  std::vector<int> chain_lengths{3, 4};
  double interaction = 1.0;
  int samples = 200;
  int max_degree = 6;
  uint64_t seed = 12345;
};
/// ||[H, A]||_F against 2 Delta max(1, max|h|) sqrt(d(d+2)) ||A||_F, symbolically.
SuiteResult verify_commutator_suite(const CommutatorSuiteOptions& opt);

struct TrotterSuiteOptions {
  int sites = 3;
  double interaction = 1.0;
  int samples = 20;
  int degree = 2;
  std::vector<double> times{0.05, 0.1, 0.2};
  uint64_t seed = 23456;
};
/// Dense single-sweep Trotter error against the disjoint-group bound. Also records the
/// error(2t)/error(t) ratios for the first two times (metrics ratio_min, ratio_max, ratio_aggregate).
SuiteResult verify_trotter_suite(const TrotterSuiteOptions& opt);

struct MPErrorSuiteOptions {
  int sites = 3;
  double interaction = 1.0;
  int ell = 4;
  double delta_t = 0.01;
  std::vector<double> times{0.1, 0.3, 0.5};
  int eta_grid = 64;
  TruncationMode mode = TruncationMode::per_sweep;
};
/// ||A_MP(t) - A(t)||_F against the a-priori bound with the oracle's eta*.
SuiteResult verify_mp_error_suite(const MPErrorSuiteOptions& opt);

struct WeakInteractionSuiteOptions {
  int sites = 2;
  std::vector<double> couplings{0.02, 0.05};
  std::vector<int> ell_offsets{0, 2, 4};
  std::vector<double> horizon_fractions{0.25, 0.5};
  int eta_grid = 64;
};
/// eta* for hopping + u * (on-site quartic part) against the weak-interaction bound.
SuiteResult verify_weak_interaction_suite(const WeakInteractionSuiteOptions& opt);

struct QuadraticSuiteOptions {
  int sites = 3;
  std::vector<double> times{0.1, 0.5, 1.0};
  double delta_t = 0.01;
  int ell = 2;
  int eta_grid = 16;
};
/// For a quadratic H: eta* = 0 and the MP error equals the pure Trotter error.
SuiteResult verify_quadratic_suite(const QuadraticSuiteOptions& opt);

/// {"suites": [{"name", "violations", "checks": [...], "metrics": {...}}], "violations": n}
std::string suites_to_json(const std::vector<SuiteResult>& suites);

}  // namespace majprop
