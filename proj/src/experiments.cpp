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

#include "majprop/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "majprop/errors.hpp"
#include "majprop/fermion.hpp"
#include "majprop/oracle.hpp"
#include "majprop/polynomial_io.hpp"
#include "majprop/verification.hpp"

namespace majprop {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

enum class Kind { text, integer, count, real, flag, reals, integers };

struct Field {
  const char* key;
  Kind kind;
};

constexpr Field kFields[] = {
    {"model", Kind::text},
    {"L", Kind::integer},
    {"U", Kind::reals},
    {"periodic", Kind::flag},
    {"hamiltonian_file", Kind::text},
    {"times", Kind::reals},
    {"t_max", Kind::real},
    {"delta_t", Kind::real},
    {"ell", Kind::integers},
    {"prune_eps", Kind::real},
    {"reference_prune_eps", Kind::real},
    {"truncation_mode", Kind::text},
    {"observable", Kind::text},
    {"state", Kind::text},
    {"output", Kind::text},
    {"trace_output", Kind::text},
    {"polynomial_output", Kind::text},
    {"oracle", Kind::flag},
    {"eta_grid", Kind::integer},
    {"term_cap", Kind::count},
    {"workers", Kind::count},
    {"seed", Kind::count},
    {"samples", Kind::integer},
};

const Field& field(const std::string& key) {
  for (const Field& f : kFields) {
    if (key == f.key) return f;
  }
  throw UsageError("unknown config key '" + key + "'");
}

[[noreturn]] void type_error(const std::string& key, const char* expected) {
  throw UsageError("config key '" + key + "' expects " + expected);
}

double as_real(const std::string& key, const json& v) {
  if (!v.is_number()) type_error(key, "a number");
  return v.get<double>();
}

long long as_integer(const std::string& key, const json& v) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 9e15) return static_cast<long long>(d);
  }
  type_error(key, "an integer");
}

void assign(ExperimentConfig& c, const std::string& key, const json& v) {
  const Field& f = field(key);
  switch (f.kind) {
    case Kind::text:
      if (!v.is_string()) type_error(key, "a string");
      break;
    case Kind::flag:
      if (!v.is_boolean()) type_error(key, "true or false");
      break;
    case Kind::reals:
      if (!v.is_array() && !v.is_number()) type_error(key, "a number or a list of numbers");
      break;
    case Kind::integers:
      if (!v.is_array() && !v.is_number()) type_error(key, "an integer or a list of integers");
      break;
    default:
      break;
  }
  auto reals = [&] {
    std::vector<double> out;
    if (v.is_array()) {
      for (const json& x : v) out.push_back(as_real(key, x));
    } else {
      out.push_back(as_real(key, v));
    }
    return out;
  };
  auto count = [&] {
    const long long n = as_integer(key, v);
    if (n < 0) type_error(key, "a non-negative integer");
    return static_cast<unsigned long long>(n);
  };

  if (key == "model") c.model = v.get<std::string>();
  else if (key == "L") c.L = static_cast<int>(as_integer(key, v));
  else if (key == "U") c.U = reals();
  else if (key == "periodic") c.periodic = v.get<bool>();
  else if (key == "hamiltonian_file") c.hamiltonian_file = v.get<std::string>();
  else if (key == "times") c.times = reals();
  else if (key == "t_max") c.t_max = as_real(key, v);
  else if (key == "delta_t") c.delta_t = as_real(key, v);
  else if (key == "ell") {
    c.ell.clear();
    if (v.is_array()) {
      for (const json& x : v) c.ell.push_back(static_cast<int>(as_integer(key, x)));
    } else {
      c.ell.push_back(static_cast<int>(as_integer(key, v)));
    }
  }
  else if (key == "prune_eps") c.prune_eps = as_real(key, v);
  else if (key == "reference_prune_eps") c.reference_prune_eps = as_real(key, v);
  else if (key == "truncation_mode") c.truncation_mode = v.get<std::string>();
  else if (key == "observable") c.observable = v.get<std::string>();
  else if (key == "state") c.state = v.get<std::string>();
  else if (key == "output") c.output = v.get<std::string>();
  else if (key == "trace_output") c.trace_output = v.get<std::string>();
  else if (key == "polynomial_output") c.polynomial_output = v.get<std::string>();
  else if (key == "oracle") c.oracle = v.get<bool>();
  else if (key == "eta_grid") c.eta_grid = static_cast<int>(as_integer(key, v));
  else if (key == "term_cap") c.term_cap = static_cast<std::size_t>(count());
  else if (key == "workers") c.workers = static_cast<unsigned>(count());
  else if (key == "seed") c.seed = static_cast<uint64_t>(count());
  else if (key == "samples") c.samples = static_cast<int>(as_integer(key, v));
}

json parse_scalar(const std::string& key, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    throw UsageError("cannot parse value '" + text + "' for --" + key);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_index(const std::string& desc, const std::string& text) {
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("bad index in '" + desc + "'");
  }
  return value;
}

// 0-based site whose up-spin orbital or hole density is used by the "center" specs.
int centre_site(const ExperimentConfig& cfg) {
  if (cfg.model == "hubbard1d") return (cfg.L + 1) / 2 - 1;
  if (cfg.model == "hubbard2d") return central_site(cfg.L);
  throw UsageError("'center' observables need a lattice model");
}

// ||ref - p||_F with ref held in a table; sums in table order.
double table_distance(const TermTable& ref, const MajoranaPolynomial& p) {
  double sq = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) sq += std::norm(ref.coeff(i) - p.coefficient(ref.mask(i)));
  for (const Term& t : p.terms()) {
    if (ref.find(t.mask) == TermTable::npos) sq += std::norm(t.coeff);
  }
  return std::sqrt(sq);
}

double table_expectation(const TermTable& table, const ProductState& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double v = string_expectation(table.mask(i), s);
    if (v != 0.0) sum += table.coeff(i).real() * v;
  }
  return sum;
}

std::string format_interaction(double u) {
  if (std::floor(u) == u && std::abs(u) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", u);
    return buf;
  }
  return format_double(u);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ExperimentConfig default_config(const std::string& command) {
  ExperimentConfig c;
  if (command == "fig2") {
    c.model = "hubbard2d";
    c.L = 3;
    c.U = {0.0, 1.0};
    c.delta_t = 0.02;
    c.t_max = 1.0;
    c.prune_eps = 1e-5;
    c.observable = "hole:center";
    c.state = "afm_hole";
  } else if (command == "propagate") {
    c.L = 3;
    c.ell = {4};
    c.t_max = 0.5;
    c.state = "";
  }
  return c;
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const Field& f : kFields) keys.emplace_back(f.key);
  return keys;
}

void apply_config_json(ExperimentConfig& cfg, const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) assign(cfg, it.key(), it.value());
}

void apply_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  const Field& f = field(key);
  switch (f.kind) {
    case Kind::text:
      assign(cfg, key, json(value));
      return;
    case Kind::reals:
    case Kind::integers: {
      if (!value.empty() && value.front() == '[') {
        assign(cfg, key, parse_scalar(key, value));
        return;
      }
      json list = json::array();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) list.push_back(parse_scalar(key, item));
      assign(cfg, key, list);
      return;
    }
    default:
      assign(cfg, key, parse_scalar(key, value));
  }
}

void check_config(const ExperimentConfig& cfg) {
  if (cfg.model != "hubbard1d" && cfg.model != "hubbard2d" && cfg.model != "file") {
    throw UsageError("model must be hubbard1d, hubbard2d or file");
  }
  if (cfg.model == "file" && cfg.hamiltonian_file.empty()) throw UsageError("model 'file' needs hamiltonian_file");
  if (cfg.model != "file" && cfg.L < 2) throw UsageError("L must be >= 2");
  if (cfg.U.empty()) throw UsageError("U must list at least one value");
  for (double u : cfg.U) {
    if (!std::isfinite(u)) throw UsageError("U values must be finite");
  }
  if (!(cfg.delta_t > 0.0) || !std::isfinite(cfg.delta_t)) throw UsageError("delta_t must be > 0");
  if (!(cfg.t_max >= 0.0) || !std::isfinite(cfg.t_max)) throw UsageError("t_max must be >= 0");
  if (cfg.ell.empty()) throw UsageError("ell must list at least one value");
  for (int l : cfg.ell) {
    if (l < 0) throw UsageError("ell values must be >= 0");
  }
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    if (!(cfg.times[i] >= 0.0) || (i > 0 && !(cfg.times[i] > cfg.times[i - 1]))) {
      throw UsageError("times must be non-negative and strictly increasing");
    }
  }
  if (!(cfg.prune_eps >= 0.0) || !(cfg.reference_prune_eps >= 0.0)) throw UsageError("pruning thresholds must be >= 0");
  truncation_mode_from_string(cfg.truncation_mode);
  if (cfg.eta_grid < 2) throw UsageError("eta_grid must be >= 2");
  if (cfg.workers < 1) throw UsageError("workers must be >= 1");
  if (cfg.samples < 1) throw UsageError("samples must be >= 1");
}

std::string config_echo(const ExperimentConfig& c) {
  ordered_json j;
  j["model"] = c.model;
  j["L"] = c.L;
  j["U"] = c.U;
  j["periodic"] = c.periodic;
  j["hamiltonian_file"] = c.hamiltonian_file;
  j["times"] = c.times;
  j["t_max"] = c.t_max;
  j["delta_t"] = c.delta_t;
  j["ell"] = c.ell;
  j["prune_eps"] = c.prune_eps;
  j["reference_prune_eps"] = c.reference_prune_eps;
  j["truncation_mode"] = c.truncation_mode;
  j["observable"] = c.observable;
  j["state"] = c.state;
  j["oracle"] = c.oracle;
  j["eta_grid"] = c.eta_grid;
  j["term_cap"] = c.term_cap;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  return j.dump();
}

QuarticHamiltonian build_model(const ExperimentConfig& cfg, double interaction) {
  if (cfg.model == "hubbard1d") return build_hubbard_1d(cfg.L, interaction, cfg.periodic);
  if (cfg.model == "hubbard2d") return build_hubbard_2d(cfg.L, interaction);
  if (cfg.model == "file") return hamiltonian_from_json(read_file(cfg.hamiltonian_file));
  throw UsageError("unknown model '" + cfg.model + "'");
}

MajoranaPolynomial resolve_observable(const ExperimentConfig& cfg, int n_majorana) {
  const std::string& desc = cfg.observable;
  const auto colon = desc.find(':');
  const std::string kind = desc.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : desc.substr(colon + 1);
  if (kind == "file") {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open observable file " + arg);
    MajoranaPolynomial p = read_polynomial(in);
    if (p.n_modes() != n_majorana) throw UsageError("observable file has the wrong number of modes");
    return p;
  }
  if (kind == "pair" || kind == "number") {
    const int orbital = arg == "center" ? spin_orbital(centre_site(cfg), false) : parse_index(desc, arg);
    if (orbital < 0 || 2 * orbital + 1 >= n_majorana) throw UsageError("orbital out of range in '" + desc + "'");
    if (kind == "number") return number_operator(orbital, n_majorana);
    return MajoranaPolynomial::monomial(MajoranaString::of({2 * orbital, 2 * orbital + 1}, n_majorana));
  }
  if (kind == "hole") {
    const int site = arg == "center" ? centre_site(cfg) : parse_index(desc, arg);
    return hole_density_observable(site, n_majorana);
  }
  throw UsageError("unknown observable '" + desc + "'");
}

ProductState resolve_state(const ExperimentConfig& cfg, int n_majorana) {
  ProductState s;
  if (cfg.state == "afm_hole") {
    if (cfg.model != "hubbard2d") throw UsageError("state afm_hole needs model hubbard2d");
    s = antiferromagnetic_hole_state(cfg.L);
  } else if (cfg.state == "vacuum") {
    s = ProductState::vacuum(n_majorana);
  } else {
    try {
      s = ProductState::from_string(cfg.state);
    } catch (const ValidationError& e) {
      throw UsageError(e.what());
    }
  }
  if (s.n_majorana() != n_majorana) throw UsageError("state '" + cfg.state + "' does not match the model size");
  return s;
}

MPConfig mp_config(const ExperimentConfig& cfg, int ell) {
  MPConfig m;
  m.delta_t = cfg.delta_t;
  m.ell = ell;
  m.prune_eps = cfg.prune_eps;
  m.truncation_mode = truncation_mode_from_string(cfg.truncation_mode);
  m.term_cap = cfg.term_cap;
  m.workers = cfg.workers;
  m.record_diagnostics = false;
  return m;
}

std::string series_label(double u, int ell) { return "U" + format_interaction(u) + "ell" + std::to_string(ell); }

std::string format_time(double t) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", t);
  return buf;
}

Fig1Result run_fig1(const ExperimentConfig& cfg, std::ostream* log) {
  check_config(cfg);
  if (cfg.U.size() != 1) throw UsageError("fig1 takes a single U value");
  if (cfg.times.empty()) throw UsageError("fig1 needs at least one time");
  const QuarticHamiltonian h = build_model(cfg, cfg.U.front());
  const TrotterSchedule schedule = greedy_color_partition(h);
  const MajoranaPolynomial a = resolve_observable(cfg, h.n_modes());

  Fig1Result r;
  r.times = cfg.times;
  r.ells = cfg.ell;
  std::vector<std::vector<MajoranaPolynomial>> snapshots(cfg.ell.size());
  for (std::size_t i = 0; i < cfg.ell.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Propagator prop(a, h, schedule, mp_config(cfg, cfg.ell[i]));
    for (double t : cfg.times) {
      prop.advance_to(t);
      snapshots[i].push_back(prop.polynomial());
    }
    if (log) {
      *log << "fig1 ell=" << cfg.ell[i] << " terms=" << prop.table().size() << " (" << seconds_since(start) << " s)\n";
    }
  }

  // One untruncated pass; distances are taken against the live table at each time.
  r.distance.assign(cfg.ell.size(), std::vector<double>(cfg.times.size(), 0.0));
  MPConfig ref_cfg = mp_config(cfg, h.n_modes());
  ref_cfg.prune_eps = cfg.reference_prune_eps;
  ref_cfg.truncation_mode = TruncationMode::per_rotation;
  const auto start = std::chrono::steady_clock::now();
  Propagator ref(a, h, schedule, ref_cfg);
  for (std::size_t j = 0; j < cfg.times.size(); ++j) {
    ref.advance_to(cfg.times[j]);
    r.reference_terms.push_back(ref.table().size());
    for (std::size_t i = 0; i < cfg.ell.size(); ++i) r.distance[i][j] = table_distance(ref.table(), snapshots[i][j]);
    if (log) {
      *log << "fig1 reference t=" << format_time(cfg.times[j]) << " terms=" << ref.table().size() << " ("
           << seconds_since(start) << " s)\n";
    }
  }
  return r;
}

Fig2Result run_fig2(const ExperimentConfig& cfg, std::ostream* log) {
  check_config(cfg);
  const QuarticHamiltonian probe = build_model(cfg, cfg.U.front());
  const int n = probe.n_modes();
  const MajoranaPolynomial a = resolve_observable(cfg, n);
  const ProductState state = resolve_state(cfg, n);
  const auto [full, rest] = step_split(cfg.t_max, cfg.delta_t);
  const std::size_t rows = full + 1 + (rest > 0.0 ? 1 : 0);

  Fig2Result r;
  r.value.assign(rows, {});
  for (double u : cfg.U) {
    const QuarticHamiltonian h = build_model(cfg, u);
    const TrotterSchedule schedule = greedy_color_partition(h);
    for (int ell : cfg.ell) {
      const auto start = std::chrono::steady_clock::now();
      r.labels.push_back(series_label(u, ell));
      Propagator prop(a, h, schedule, mp_config(cfg, ell));
      std::vector<double> times{0.0};
      r.value[0].push_back(table_expectation(prop.table(), state));
      std::size_t peak = prop.table().size();
      for (std::size_t k = 1; k < rows; ++k) {
        prop.step(k <= full ? cfg.delta_t : rest);
        times.push_back(prop.time());
        r.value[k].push_back(table_expectation(prop.table(), state));
        peak = std::max(peak, prop.table().size());
      }
      if (r.times.empty()) r.times = times;
      if (log) {
        *log << "fig2 " << r.labels.back() << " peak_terms=" << peak << " final=" << r.value.back().back() << " ("
             << seconds_since(start) << " s)\n";
      }
    }
    if (cfg.oracle) {
      const ExactEvolver exact(h);
      const DenseOperator ad = to_dense(a);
      Eigen::Index b = 0;
      for (int j = 0; j < state.n_fermions(); ++j) {
        if (state.occupied(j)) b |= Eigen::Index{1} << j;
      }
      r.labels.push_back("exactU" + format_interaction(u));
      for (std::size_t k = 0; k < rows; ++k) r.value[k].push_back(exact.evolve(ad, r.times[k]).matrix(b, b).real());
    }
  }
  return r;
}

void write_csv_preamble(std::ostream& out, const std::string& command, const ExperimentConfig& cfg) {
  out << "# majprop " << MAJPROP_VERSION << '\n';
  out << "# command: " << command << '\n';
  out << "# config: " << config_echo(cfg) << '\n';
}

void write_fig1_csv(std::ostream& out, const Fig1Result& r) {
  out << "deg";
  for (double t : r.times) out << ",t" << format_time(t);
  out << '\n';
  for (std::size_t i = 0; i < r.ells.size(); ++i) {
    out << r.ells[i];
    for (double d : r.distance[i]) out << ',' << format_double(d);
    out << '\n';
  }
}

void write_fig2_csv(std::ostream& out, const Fig2Result& r) {
  out << "time";
  for (const std::string& l : r.labels) out << ',' << l;
  out << '\n';
  for (std::size_t k = 0; k < r.times.size(); ++k) {
    out << format_time(r.times[k]);
    for (double v : r.value[k]) out << ',' << format_double(v);
    out << '\n';
  }
}

}  // namespace majprop
