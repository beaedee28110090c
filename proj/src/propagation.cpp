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

#include "majprop/propagation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cmath>
#include <ostream>
#include <thread>

#include "majprop/errors.hpp"
#include "majprop/polynomial_io.hpp"

namespace majprop {

namespace {

constexpr std::size_t kParallelScanThreshold = std::size_t{1} << 15;

void scan_range(const TermTable& table, const ModeMask& gen, std::size_t begin, std::size_t end,
                std::vector<uint32_t>& out) {
  const int gen_degree = gen.popcount();
  if (gen_degree % 2 == 1) {
    for (std::size_t i = begin; i < end; ++i) {
      if (masks_anticommute(table.mask(i), gen)) out.push_back(static_cast<uint32_t>(i));
    }
    return;
  }
  // even generator: anticommutes iff the overlap is odd
  std::array<const uint64_t*, ModeMask::kWords> data{};
  std::array<uint64_t, ModeMask::kWords> bits{};
  std::size_t used = 0;
  for (std::size_t w = 0; w < ModeMask::kWords; ++w) {
    if (gen.word(w) != 0) {
      data[used] = table.word_data(w);
      bits[used] = gen.word(w);
      ++used;
    }
  }
  if (used == 1) {
    const uint64_t* d = data[0];
    const uint64_t b = bits[0];
    for (std::size_t i = begin; i < end; ++i) {
      if (std::popcount(d[i] & b) & 1) out.push_back(static_cast<uint32_t>(i));
    }
    return;
  }
  for (std::size_t i = begin; i < end; ++i) {
    int parity = 0;
    for (std::size_t k = 0; k < used; ++k) parity ^= std::popcount(data[k][i] & bits[k]);
    if (parity & 1) out.push_back(static_cast<uint32_t>(i));
  }
}

// Positions of anticommuting terms in ascending order, independent of the worker count.
std::vector<uint32_t> find_anticommuting(const TermTable& table, const ModeMask& gen, unsigned workers) {
  std::vector<uint32_t> hits;
  const std::size_t n = table.size();
  if (workers <= 1 || n < kParallelScanThreshold) {
    scan_range(table, gen, 0, n, hits);
    return hits;
  }
  std::vector<std::vector<uint32_t>> parts(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(n, w * chunk);
      const std::size_t end = std::min(n, begin + chunk);
      threads.emplace_back([&, w, begin, end] { scan_range(table, gen, begin, end, parts[w]); });
    }
  }
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  hits.reserve(total);
  for (const auto& p : parts) hits.insert(hits.end(), p.begin(), p.end());
  return hits;
}

bool below_threshold(Complex c, double eps) {
  return (c.real() == 0.0 && c.imag() == 0.0) || std::abs(c) <= eps;
}

std::vector<std::vector<HamiltonianTerm>> resolve_groups(const QuarticHamiltonian& h, const TrotterSchedule& s) {
  if (auto problem = check_schedule(h, s); !problem.empty()) throw UsageError("invalid Trotter schedule: " + problem);
  std::vector<std::vector<HamiltonianTerm>> groups;
  groups.reserve(s.groups.size());
  for (const auto& g : s.groups) {
    auto& out = groups.emplace_back();
    for (std::size_t idx : g) out.push_back(h.terms()[idx]);
  }
  return groups;
}

}  // namespace

std::string to_string(TruncationMode mode) {
  return mode == TruncationMode::per_rotation ? "per_rotation" : "per_sweep";
}

TruncationMode truncation_mode_from_string(const std::string& s) {
  if (s == "per_rotation") return TruncationMode::per_rotation;
  if (s == "per_sweep") return TruncationMode::per_sweep;
  throw UsageError("unknown truncation mode '" + s + "' (expected per_rotation or per_sweep)");
}

void write_trace_csv(std::ostream& out, const PropagationTrace& trace) {
  out << "step,time,n_terms,max_degree,frob_norm,discarded_weight\n";
  for (const TraceRecord& r : trace.records) {
    out << r.step << ',' << format_double(r.time) << ',' << r.n_terms << ',' << r.max_degree << ','
        << format_double(r.frob_norm) << ',' << format_double(r.discarded_weight) << '\n';
  }
}

void rotate_table(TermTable& table, const ModeMask& generator, double theta, int max_degree, double prune_eps,
                  RotationStats& stats, unsigned workers) {
  const std::vector<uint32_t> hits = find_anticommuting(table, generator, workers);
  if (hits.empty()) return;
  const double c = std::cos(theta);
  const double s = std::sin(theta);

  // i sin(theta) gamma_gen gamma_S, computed from the coefficients before this rotation
  std::vector<Term> generated;
  generated.reserve(hits.size());
  for (uint32_t i : hits) {
    const ModeMask m = table.mask(i);
    const Complex a = table.coeff(i);
    generated.push_back({m ^ generator, times_phase(Complex(-s * a.imag(), s * a.real()), product_phase(generator, m))});
  }
  for (uint32_t i : hits) {
    const Complex a = table.coeff(i);
    table.coeff(i) = Complex(c * a.real(), c * a.imag());
  }

  std::vector<std::size_t> inserted;
  for (const Term& g : generated) {
    if (g.coeff == Complex(0.0, 0.0)) continue;
    const std::size_t idx = table.find(g.mask);
    if (idx != TermTable::npos) {
      table.coeff(idx) += g.coeff;
    } else if (g.mask.popcount() <= max_degree) {
      inserted.push_back(table.insert(g.mask, g.coeff));
      ++stats.generated;
    } else {
      stats.discarded_sq += std::norm(g.coeff);
    }
  }

  // Candidates in descending position order: a swap-remove only ever moves an
  // already-checked (or untouched) term into the hole.
  for (auto it = inserted.rbegin(); it != inserted.rend(); ++it) {
    if (below_threshold(table.coeff(*it), prune_eps)) {
      stats.discarded_sq += std::norm(table.coeff(*it));
      table.erase(*it);
    }
  }
  for (auto it = hits.rbegin(); it != hits.rend(); ++it) {
    if (below_threshold(table.coeff(*it), prune_eps)) {
      stats.discarded_sq += std::norm(table.coeff(*it));
      table.erase(*it);
    }
  }
}

MajoranaPolynomial apply_group(const MajoranaPolynomial& p, const QuarticHamiltonian& h,
                               const TrotterSchedule& schedule, std::size_t group, double dt) {
  if (p.n_modes() != h.n_modes()) throw UsageError("apply_group: observable and Hamiltonian mode counts differ");
  if (group >= schedule.group_count()) {
    throw UsageError("group index " + std::to_string(group) + " out of range (G = " +
                     std::to_string(schedule.group_count()) + ")");
  }
  TermTable table(p);
  RotationStats stats;
  for (std::size_t idx : schedule.groups[group]) {
    const HamiltonianTerm& term = h.terms()[idx];
    rotate_table(table, term.mask, 2.0 * dt * term.coeff, INT_MAX, 0.0, stats);
  }
  return table.to_polynomial();
}

MajoranaPolynomial trotter_sweep(const MajoranaPolynomial& p, const QuarticHamiltonian& h,
                                 const TrotterSchedule& schedule, double dt) {
  if (p.n_modes() != h.n_modes()) throw UsageError("trotter_sweep: observable and Hamiltonian mode counts differ");
  const auto groups = resolve_groups(h, schedule);
  TermTable table(p);
  RotationStats stats;
  for (const auto& group : groups) {
    for (const HamiltonianTerm& term : group) rotate_table(table, term.mask, 2.0 * dt * term.coeff, INT_MAX, 0.0, stats);
  }
  return table.to_polynomial();
}

Propagator::Propagator(const MajoranaPolynomial& a, const QuarticHamiltonian& h, const TrotterSchedule& schedule,
                       MPConfig cfg)
    : groups_(resolve_groups(h, schedule)), cfg_(cfg), table_(a.n_modes()) {
  if (a.n_modes() != h.n_modes()) throw UsageError("observable and Hamiltonian mode counts differ");
  if (!(cfg_.delta_t > 0.0)) throw UsageError("delta_t must be > 0");
  if (cfg_.ell < 0) throw UsageError("ell must be >= 0");
  if (!(cfg_.prune_eps >= 0.0)) throw UsageError("prune_eps must be >= 0");
  if (cfg_.workers == 0) cfg_.workers = 1;
  if (a.degree() > cfg_.ell) {
    trace_.warnings.push_back("ell = " + std::to_string(cfg_.ell) + " is below deg(A) = " +
                              std::to_string(a.degree()) + "; the initial observable is truncated");
  }
  table_ = TermTable(a);
  truncate_all();
  record();
}

void Propagator::truncate_all() {
  for (std::size_t i = table_.size(); i-- > 0;) {
    const Complex c = table_.coeff(i);
    if (table_.mask(i).popcount() > cfg_.ell || below_threshold(c, cfg_.prune_eps)) {
      discarded_sq_ += std::norm(c);
      table_.erase(i);
    }
  }
}

void Propagator::record() {
  TraceRecord r;
  r.step = steps_;
  r.time = time_;
  r.n_terms = table_.size();
  r.discarded_weight = std::sqrt(discarded_sq_);
  if (cfg_.record_diagnostics) {
    double sq = 0.0;
    int deg = 0;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      sq += std::norm(table_.coeff(i));
      deg = std::max(deg, table_.mask(i).popcount());
    }
    r.frob_norm = std::sqrt(sq);
    r.max_degree = deg;
  }
  trace_.records.push_back(r);
}

void Propagator::step(double dt) {
  if (!(dt >= 0.0)) throw UsageError("step length must be >= 0");
  const bool per_rotation = cfg_.truncation_mode == TruncationMode::per_rotation;
  const int max_degree = per_rotation ? cfg_.ell : INT_MAX;
  const double eps = per_rotation ? cfg_.prune_eps : 0.0;
  RotationStats stats;
  for (const auto& group : groups_) {
    for (const HamiltonianTerm& term : group) {
      rotate_table(table_, term.mask, 2.0 * dt * term.coeff, max_degree, eps, stats, cfg_.workers);
      if (table_.size() > cfg_.term_cap) {
        throw TermCapExceeded(cfg_.term_cap, table_.size(),
                              "step " + std::to_string(steps_ + 1) + " at t = " + format_double(time_ + dt));
      }
    }
  }
  discarded_sq_ += stats.discarded_sq;
  if (!per_rotation) truncate_all();
  ++steps_;
  if (dt == cfg_.delta_t) {
    ++full_steps_;
  } else {
    partial_time_ += dt;
  }
  time_ = static_cast<double>(full_steps_) * cfg_.delta_t + partial_time_;
  record();
}

void Propagator::advance_to(double t) {
  const double remaining = t - time_;
  if (remaining < -1e-12 * std::max(1.0, std::abs(t))) {
    throw UsageError("cannot propagate backwards from t = " + format_double(time_) + " to " + format_double(t));
  }
  const auto [full, rest] = step_split(std::max(0.0, remaining), cfg_.delta_t);
  for (std::size_t k = 0; k < full; ++k) step(cfg_.delta_t);
  if (rest > 0.0) step(rest);
}

std::pair<std::size_t, double> step_split(double t, double dt) {
  if (!(dt > 0.0)) throw UsageError("time step must be > 0");
  if (!(t >= 0.0)) throw UsageError("horizon must be >= 0");
  const double ratio = t / dt;
  const auto full = static_cast<std::size_t>(std::floor(ratio + 1e-9));
  double rest = t - static_cast<double>(full) * dt;
  if (rest <= 1e-12 * std::max(1.0, t)) rest = 0.0;
  return {full, rest};
}

std::pair<MajoranaPolynomial, PropagationTrace> mp_propagate(const MajoranaPolynomial& a, const QuarticHamiltonian& h,
                                                             const TrotterSchedule& schedule, double t,
                                                             const MPConfig& cfg) {
  if (!(t >= 0.0)) throw UsageError("mp_propagate: horizon t must be >= 0");
  Propagator prop(a, h, schedule, cfg);
  prop.advance_to(t);
  return {prop.polynomial(), prop.trace()};
}

double apriori_error_bound(double t, double dt, int sparsity, int ell, double eta_star, double norm_a) {
  if (t == 0.0) return 0.0;
  const auto [full, rest] = step_split(t, dt);
  const double steps = static_cast<double>(full + (rest > 0.0 ? 1 : 0));
  const double d = static_cast<double>(sparsity);
  const double l2 = static_cast<double>(ell) + 2.0;
  return 34.0 * t * dt * d * d * l2 * l2 * norm_a + steps * eta_star;
}

double optimal_time_step(int ell, int sparsity, double eta_star) {
  if (eta_star < 0.0) throw UsageError("eta_star must be >= 0");
  if (ell < 1 || sparsity < 1) throw UsageError("ell and sparsity must be >= 1");
  if (eta_star == 0.0) return 0.01;
  return std::sqrt(eta_star) / (static_cast<double>(ell) * static_cast<double>(sparsity));
}

double commutator_bound(int sparsity, double max_abs_coeff, int degree, double norm_a) {
  const double d = static_cast<double>(degree);
  return 2.0 * sparsity * std::max(1.0, max_abs_coeff) * std::sqrt(d * (d + 2.0)) * norm_a;
}

double trotter_error_bound(double t, int degree, std::size_t groups, int sparsity, double max_abs_coeff,
                           double norm_a) {
  const double x = t * (static_cast<double>(degree) + 2.0);
  const double g = static_cast<double>(groups);
  const double d = static_cast<double>(sparsity);
  const double scale = std::max(1.0, max_abs_coeff);
  return 2.0 * x * x * (g * g + d * d) * scale * scale * norm_a;
}

}  // namespace majprop
