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

#include "majprop/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "majprop/errors.hpp"
#include "majprop/fermion.hpp"
#include "majprop/oracle.hpp"
#include "majprop/polynomial_io.hpp"

namespace majprop {

std::size_t SuiteResult::violations() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.pass; }));
}

double SuiteResult::metric(const std::string& key) const {
  for (const auto& [k, v] : metrics) {
    if (k == key) return v;
  }
  throw UsageError("no metric named " + key);
}

MajoranaPolynomial default_pair_observable(int sites, int n_majorana) {
  if (sites < 1) throw UsageError("need at least one site");
  const int m = spin_orbital((sites + 1) / 2 - 1, false);
  return MajoranaPolynomial::monomial(MajoranaString::of({2 * m, 2 * m + 1}, n_majorana));
}

ModeMask random_mask(std::mt19937_64& rng, int n_modes, int degree) {
  if (degree < 0 || degree > n_modes) throw UsageError("random string degree out of range");
  std::vector<int> modes(static_cast<std::size_t>(n_modes));
  for (int i = 0; i < n_modes; ++i) modes[static_cast<std::size_t>(i)] = i;
  // partial Fisher-Yates
  for (int i = 0; i < degree; ++i) {
    std::uniform_int_distribution<int> pick(i, n_modes - 1);
    std::swap(modes[static_cast<std::size_t>(i)], modes[static_cast<std::size_t>(pick(rng))]);
  }
  return ModeMask::from_modes(std::span<const int>(modes.data(), static_cast<std::size_t>(degree)));
}

MajoranaPolynomial random_polynomial(std::mt19937_64& rng, int n_modes, int degree, int max_terms) {
  std::uniform_int_distribution<int> count(1, std::max(1, max_terms));
  std::uniform_int_distribution<int> deg(0, degree);
  std::normal_distribution<double> gauss;
  const int n = count(rng);
  std::vector<Term> terms;
  for (int k = 0; k < n; ++k) {
    const int d = k == 0 ? degree : deg(rng);
    const double re = gauss(rng);
    const double im = gauss(rng);
    terms.push_back({random_mask(rng, n_modes, d), Complex(re, im)});
  }
  MajoranaPolynomial p(n_modes, std::move(terms));
  if (p.degree() != degree) return random_polynomial(rng, n_modes, degree, max_terms);
  return p;
}

SuiteResult verify_commutator_suite(const CommutatorSuiteOptions& opt) {
  SuiteResult out{"commutator", {}, {}};
  if (opt.chain_lengths.empty() || opt.max_degree < 1) throw UsageError("commutator suite needs chains and degrees");
  std::vector<QuarticHamiltonian> models;
  std::vector<MajoranaPolynomial> polys;
  for (int sites : opt.chain_lengths) {
    models.push_back(build_hubbard_1d(sites, opt.interaction));
    polys.push_back(models.back().to_polynomial(false));
  }
  std::mt19937_64 rng(opt.seed);
  double worst = 0.0;
  for (int k = 0; k < opt.samples; ++k) {
    const std::size_t which = static_cast<std::size_t>(k) % models.size();
    const int d = 1 + (k / static_cast<int>(models.size())) % opt.max_degree;
    const QuarticHamiltonian& h = models[which];
    const MajoranaPolynomial a = random_polynomial(rng, h.n_modes(), d);
    const double measured = frobenius_norm(poly_commutator(polys[which], a));
    const double bound = commutator_bound(h.sparsity(), h.max_abs_coeff(), a.degree(), frobenius_norm(a));
    worst = std::max(worst, measured / bound);
    out.checks.push_back({"L=" + std::to_string(opt.chain_lengths[which]) + " d=" + std::to_string(d) + " #" +
                              std::to_string(k),
                          measured, bound, measured <= bound});
  }
  out.metrics.emplace_back("max_ratio", worst);
  return out;
}

SuiteResult verify_trotter_suite(const TrotterSuiteOptions& opt) {
  SuiteResult out{"trotter", {}, {}};
  const QuarticHamiltonian h = build_hubbard_1d(opt.sites, opt.interaction);
  const TrotterSchedule schedule = greedy_color_partition(h);
  const ExactEvolver exact(h);
  const DenseTrotter trotter(h, schedule);
  std::mt19937_64 rng(opt.seed);
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = 0.0;
  double sum0 = 0.0;
  double sum1 = 0.0;
  for (int k = 0; k < opt.samples; ++k) {
    const auto a = MajoranaPolynomial::monomial(MajoranaString(random_mask(rng, h.n_modes(), opt.degree), h.n_modes()));
    const DenseOperator ad = to_dense(a);
    std::vector<double> errors;
    for (double t : opt.times) {
      const double err = dense_frobenius_norm(exact.evolve(ad, t).matrix - trotter.sweep(ad, t).matrix);
      const double bound =
          trotter_error_bound(t, a.degree(), schedule.group_count(), h.sparsity(), h.max_abs_coeff(), 1.0);
      errors.push_back(err);
      out.checks.push_back({"#" + std::to_string(k) + " t=" + format_double(t), err, bound, err <= bound});
    }
    if (errors.size() >= 2 && errors[0] > 0.0) {
      const double r = errors[1] / errors[0];
      ratio_min = std::min(ratio_min, r);
      ratio_max = std::max(ratio_max, r);
      sum0 += errors[0];
      sum1 += errors[1];
    }
  }
  out.metrics.emplace_back("groups", static_cast<double>(schedule.group_count()));
  out.metrics.emplace_back("sparsity", static_cast<double>(h.sparsity()));
  out.metrics.emplace_back("ratio_min", ratio_min);
  out.metrics.emplace_back("ratio_max", ratio_max);
  out.metrics.emplace_back("ratio_aggregate", sum0 > 0.0 ? sum1 / sum0 : 0.0);
  return out;
}

SuiteResult verify_mp_error_suite(const MPErrorSuiteOptions& opt) {
  SuiteResult out{"mp_error", {}, {}};
  const QuarticHamiltonian h = build_hubbard_1d(opt.sites, opt.interaction);
  const TrotterSchedule schedule = greedy_color_partition(h);
  const ExactEvolver exact(h);
  const MajoranaPolynomial a = default_pair_observable(opt.sites, h.n_modes());
  const double norm_a = frobenius_norm(a);
  MPConfig cfg;
  cfg.delta_t = opt.delta_t;
  cfg.ell = opt.ell;
  cfg.truncation_mode = opt.mode;
  cfg.record_diagnostics = false;
  for (double t : opt.times) {
    const MajoranaPolynomial mp = mp_propagate(a, h, schedule, t, cfg).first;
    const double err = dense_frobenius_norm(to_dense(mp).matrix - exact.evolve(a, t).matrix);
    const double eta = best_truncation_error(exact, a, t, opt.ell, opt.eta_grid);
    const double bound = apriori_error_bound(t, opt.delta_t, h.sparsity(), opt.ell, eta, norm_a);
    out.checks.push_back({"t=" + format_double(t), err, bound, err <= bound});
    out.metrics.emplace_back("eta_star_t" + format_double(t), eta);
  }
  out.metrics.emplace_back("sparsity", static_cast<double>(h.sparsity()));
  return out;
}

SuiteResult verify_weak_interaction_suite(const WeakInteractionSuiteOptions& opt) {
  SuiteResult out{"weak_interaction", {}, {}};
  const QuarticHamiltonian h0 = build_hubbard_1d(opt.sites, 0.0);
  const QuarticHamiltonian v = build_hubbard_1d(opt.sites, 1.0).degree_part(4);
  const MajoranaPolynomial a = default_pair_observable(opt.sites, h0.n_modes());
  for (double u : opt.couplings) {
    const QuarticHamiltonian h = combine(h0, v, u);
    const double t_max = weak_interaction_horizon(u, h.sparsity(), a.degree());
    out.metrics.emplace_back("t_max_u" + format_double(u), t_max);
    for (int offset : opt.ell_offsets) {
      for (double frac : opt.horizon_fractions) {
        const double t = frac * t_max;
        const WeakInteractionReport r =
            verify_weak_interaction_bound(h0, v, u, a, t, a.degree() + offset, opt.eta_grid);
        out.checks.push_back({"u=" + format_double(u) + " ell=" + std::to_string(r.ell) + " t/t_max=" +
                                  format_double(frac),
                              r.eta_star, r.rhs, r.applicable && r.pass});
      }
    }
  }
  return out;
}

SuiteResult verify_quadratic_suite(const QuadraticSuiteOptions& opt) {
  SuiteResult out{"quadratic", {}, {}};
  const QuarticHamiltonian h = build_hubbard_1d(opt.sites, 0.0);
  const TrotterSchedule schedule = greedy_color_partition(h);
  const ExactEvolver exact(h);
  const MajoranaPolynomial a = default_pair_observable(opt.sites, h.n_modes());
  MPConfig cfg;
  cfg.delta_t = opt.delta_t;
  cfg.ell = opt.ell;
  cfg.record_diagnostics = false;
  for (double t : opt.times) {
    const double eta = best_truncation_error(exact, a, t, opt.ell, opt.eta_grid);
    out.checks.push_back({"eta* t=" + format_double(t), eta, 1e-12, eta <= 1e-12});
    const MajoranaPolynomial mp = mp_propagate(a, h, schedule, t, cfg).first;
    const MajoranaPolynomial trot = trotter_only_reference(a, h, schedule, t, opt.delta_t);
    const DenseMatrix target = exact.evolve(a, t).matrix;
    const double gap = std::abs(dense_frobenius_norm(to_dense(mp).matrix - target) -
                                dense_frobenius_norm(to_dense(trot).matrix - target));
    out.checks.push_back({"mp vs trotter t=" + format_double(t), gap, 1e-10, gap <= 1e-10});
  }
  return out;
}

std::string suites_to_json(const std::vector<SuiteResult>& suites) {
  using nlohmann::ordered_json;
  ordered_json root;
  std::size_t total = 0;
  ordered_json list = ordered_json::array();
  for (const SuiteResult& s : suites) {
    ordered_json js;
    js["name"] = s.name;
    js["violations"] = s.violations();
    total += s.violations();
    ordered_json metrics = ordered_json::object();
    for (const auto& [k, v] : s.metrics) metrics[k] = v;
    js["metrics"] = metrics;
    ordered_json checks = ordered_json::array();
    for (const BoundCheck& c : s.checks) {
      checks.push_back({{"label", c.label}, {"measured", c.measured}, {"bound", c.bound}, {"pass", c.pass}});
    }
    js["checks"] = checks;
    list.push_back(js);
  }
  root["suites"] = list;
  root["violations"] = total;
  return root.dump(2);
}

}  // namespace majprop
