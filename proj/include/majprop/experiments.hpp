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
#include <iosfwd>
#include <string>
#include <vector>

#include "majprop/hamiltonian.hpp"
#include "majprop/polynomial.hpp"
#include "majprop/propagation.hpp"
#include "majprop/states.hpp"

namespace majprop {

/// Settings shared by the batch commands. Field names match the JSON keys and CLI flags.
struct ExperimentConfig {
  std::string model = "hubbard1d";  // hubbard1d | hubbard2d | file
  int L = 6;
  std::vector<double> U{1.0};
  bool periodic = false;
  std::string hamiltonian_file;
  /// Evaluation times for fig1.
  std::vector<double> times{0.2, 0.4};
  /// Horizon for fig2 and propagate.
  double t_max = 1.0;
  double delta_t = 0.01;
  std::vector<int> ell{4, 6, 8, 10};
  double prune_eps = 0.0;
  /// Pruning threshold of the untruncated fig1 reference run.
  double reference_prune_eps = 1e-16;
  std::string truncation_mode = "per_rotation";
  /// pair:center | pair:<orbital> | hole:center | hole:<site> | number:<orbital> | file:<majpoly path>
  std::string observable = "pair:center";
  /// afm_hole | vacuum | bitstring over fermionic modes
  std::string state = "afm_hole";
  std::string output;
  std::string trace_output;
  std::string polynomial_output;
  /// fig2: add exact dense columns (small systems only).
  bool oracle = false;
  int eta_grid = 64;
  std::size_t term_cap = 50'000'000;
  unsigned workers = 1;
  uint64_t seed = 12345;
  int samples = 200;
};

/// Defaults for one of fig1, fig2, verify, propagate, color, validate.
ExperimentConfig default_config(const std::string& command);
std::vector<std::string> config_keys();
/// Applies a JSON object; unknown keys and wrong types raise UsageError.
void apply_config_json(ExperimentConfig& cfg, const std::string& json_text);
/// Applies one "--key value" override. Lists are comma separated or JSON arrays.
void apply_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);
/// Range checks shared by every command. Throws UsageError.
void check_config(const ExperimentConfig& cfg);
/// Single-line JSON of every setting that can change results (output paths and workers excluded).
std::string config_echo(const ExperimentConfig& cfg);

QuarticHamiltonian build_model(const ExperimentConfig& cfg, double interaction);
MajoranaPolynomial resolve_observable(const ExperimentConfig& cfg, int n_majorana);
ProductState resolve_state(const ExperimentConfig& cfg, int n_majorana);
MPConfig mp_config(const ExperimentConfig& cfg, int ell);

/// "U0.0ell4": integral U values keep one decimal.
std::string series_label(double u, int ell);
/// Shortest decimal of a time rounded to 12 significant digits ("0.2", not "0.20000000000000001").
std::string format_time(double t);

struct Fig1Result {
  std::vector<double> times;
  std::vector<int> ells;
  /// distance[i][j] = ||A_MP^{ell_i}(t_j) - A_trot(t_j)||_F
  std::vector<std::vector<double>> distance;
  std::vector<std::size_t> reference_terms;
};

struct Fig2Result {
  std::vector<double> times;
  std::vector<std::string> labels;
  /// value[k][c] for time k and column c.
  std::vector<std::vector<double>> value;
};

/// Distances to the untruncated Trotter reference. Progress goes to log if non-null.
Fig1Result run_fig1(const ExperimentConfig& cfg, std::ostream* log = nullptr);
/// <psi|A_MP(t)|psi> for every (U, ell), one row per time step.
Fig2Result run_fig2(const ExperimentConfig& cfg, std::ostream* log = nullptr);

/// "# majprop <version>", "# command: <name>" and "# config: <echo>" lines.
void write_csv_preamble(std::ostream& out, const std::string& command, const ExperimentConfig& cfg);
void write_fig1_csv(std::ostream& out, const Fig1Result& r);
void write_fig2_csv(std::ostream& out, const Fig2Result& r);

}  // namespace majprop
