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

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "majprop/errors.hpp"
#include "majprop/experiments.hpp"
#include "majprop/polynomial_io.hpp"
#include "majprop/verification.hpp"

namespace {

using namespace majprop;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitViolation = 3;
constexpr int kExitTermCap = 4;

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  std::string config_file;
  std::map<std::string, std::string> flags;
  std::vector<std::string> suites;
};

ExperimentConfig load_config(const Command& cmd) {
  ExperimentConfig cfg = default_config(cmd.name);
  if (!cmd.config_file.empty()) {
    std::ifstream in(cmd.config_file);
    if (!in) throw UsageError("cannot open config file " + cmd.config_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    apply_config_json(cfg, ss.str());
  }
  for (const std::string& key : config_keys()) {
    if (cmd.app->count("--" + key) > 0) apply_config_value(cfg, key, cmd.flags.at(key));
  }
  check_config(cfg);
  return cfg;
}

// Writes to cfg.output, or stdout when it is empty.
template <typename F>
void emit(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  write(out);
}

int run_fig1_command(const Command& cmd) {
  const ExperimentConfig cfg = load_config(cmd);
  const Fig1Result r = run_fig1(cfg, &std::cerr);
  emit(cfg.output, [&](std::ostream& out) {
    write_csv_preamble(out, "fig1", cfg);
    write_fig1_csv(out, r);
  });
  return kExitOk;
}

int run_fig2_command(const Command& cmd) {
  const ExperimentConfig cfg = load_config(cmd);
  const Fig2Result r = run_fig2(cfg, &std::cerr);
  emit(cfg.output, [&](std::ostream& out) {
    write_csv_preamble(out, "fig2", cfg);
    write_fig2_csv(out, r);
  });
  return kExitOk;
}

int run_verify_command(const Command& cmd) {
  const ExperimentConfig cfg = load_config(cmd);
  std::vector<std::string> wanted = cmd.suites;
  if (wanted.empty()) wanted = {"commutator", "trotter", "mp_error", "weak_interaction", "quadratic"};
  std::vector<SuiteResult> results;
  for (const std::string& name : wanted) {
    std::cerr << "verify " << name << '\n';
    if (name == "commutator") {
      CommutatorSuiteOptions opt;
      opt.samples = cfg.samples;
      opt.seed = cfg.seed;
      results.push_back(verify_commutator_suite(opt));
    } else if (name == "trotter") {
      TrotterSuiteOptions opt;
      opt.seed = cfg.seed;
      results.push_back(verify_trotter_suite(opt));
    } else if (name == "mp_error") {
      MPErrorSuiteOptions opt;
      opt.eta_grid = cfg.eta_grid;
      results.push_back(verify_mp_error_suite(opt));
    } else if (name == "weak_interaction") {
      WeakInteractionSuiteOptions opt;
      opt.eta_grid = cfg.eta_grid;
      results.push_back(verify_weak_interaction_suite(opt));
    } else if (name == "quadratic") {
      results.push_back(verify_quadratic_suite({}));
    } else {
      throw UsageError("unknown suite '" + name + "'");
    }
  }
  std::size_t violations = 0;
  for (const SuiteResult& s : results) violations += s.violations();
  emit(cfg.output, [&](std::ostream& out) { out << suites_to_json(results) << '\n'; });
  return violations == 0 ? kExitOk : kExitViolation;
}

int run_propagate_command(const Command& cmd) {
  const ExperimentConfig cfg = load_config(cmd);
  const QuarticHamiltonian h = build_model(cfg, cfg.U.front());
  const TrotterSchedule schedule = greedy_color_partition(h);
  const MajoranaPolynomial a = resolve_observable(cfg, h.n_modes());
  MPConfig mp = mp_config(cfg, cfg.ell.front());
  mp.record_diagnostics = true;
  auto [result, trace] = mp_propagate(a, h, schedule, cfg.t_max, mp);
  for (const std::string& w : trace.warnings) std::cerr << "warning: " << w << '\n';
  const std::string trace_path = cfg.trace_output.empty() ? cfg.output : cfg.trace_output;
  emit(trace_path, [&](std::ostream& out) {
    write_csv_preamble(out, "propagate", cfg);
    write_trace_csv(out, trace);
  });
  if (!cfg.polynomial_output.empty()) {
    emit(cfg.polynomial_output, [&](std::ostream& out) { write_polynomial(out, result); });
  }
  std::cerr << "terms " << result.size() << " degree " << result.degree() << " norm "
            << format_double(frobenius_norm(result)) << '\n';
  if (!cfg.state.empty()) {
    const ProductState s = resolve_state(cfg, h.n_modes());
    std::cerr << "expectation " << format_double(expectation(result, s)) << '\n';
  }
  return kExitOk;
}

int run_color_command(const Command& cmd) {
  const ExperimentConfig cfg = load_config(cmd);
  const QuarticHamiltonian h = build_model(cfg, cfg.U.front());
  emit(cfg.output, [&](std::ostream& out) { out << schedule_to_string(h, greedy_color_partition(h)); });
  return kExitOk;
}

int run_validate_command(const Command& cmd) {
  const ExperimentConfig cfg = load_config(cmd);
  const QuarticHamiltonian h = build_model(cfg, cfg.U.front());
  const ValidationReport r = validate(h);
  nlohmann::ordered_json j;
  j["n_majorana"] = r.n_modes;
  j["n_terms"] = r.n_terms;
  j["n_quadratic"] = r.n_quadratic;
  j["n_quartic"] = r.n_quartic;
  j["sparsity"] = r.sparsity;
  j["groups"] = r.groups;
  j["max_abs_coeff"] = r.max_abs_coeff;
  j["identity_shift"] = r.identity_shift;
  j["normalized"] = r.normalized;
  j["notes"] = r.notes;
  emit(cfg.output, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorana propagation for quartic fermionic Hamiltonians"};
  app.set_version_flag("--version", std::string(MAJPROP_VERSION));
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"fig1", "distance to the untruncated Trotter evolution versus truncation degree"},
      {"fig2", "hole-density time series on a product state"},
      {"verify", "check the error bounds against the dense oracle (JSON report)"},
      {"propagate", "single propagation run with a step trace"},
      {"color", "print the Trotter group schedule"},
      {"validate", "check a Hamiltonian and report sparsity and normalization"},
  };
  std::vector<std::unique_ptr<Command>> parsed;
  for (const auto& [name, help] : commands) {
    auto cmd = std::make_unique<Command>();
    cmd->name = name;
    cmd->app = app.add_subcommand(name, help);
    cmd->app->add_option("--config", cmd->config_file, "JSON config file; flags override its values");
    for (const std::string& key : config_keys()) {
      cmd->app->add_option("--" + key, cmd->flags[key]);
    }
    if (name == "verify") {
      cmd->app->add_option("--suite", cmd->suites,
                           "commutator, trotter, mp_error, weak_interaction or quadratic (default: all)");
    }
    parsed.push_back(std::move(cmd));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    for (const auto& cmd : parsed) {
      if (!cmd->app->parsed()) continue;
      if (cmd->name == "fig1") return run_fig1_command(*cmd);
      if (cmd->name == "fig2") return run_fig2_command(*cmd);
      if (cmd->name == "verify") return run_verify_command(*cmd);
      if (cmd->name == "propagate") return run_propagate_command(*cmd);
      if (cmd->name == "color") return run_color_command(*cmd);
      if (cmd->name == "validate") return run_validate_command(*cmd);
    }
  } catch (const TermCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTermCap;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
