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

#include "majprop/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "majprop/errors.hpp"
#include "majprop/fermion.hpp"

namespace majprop {

namespace {

int count_sparsity(int n_modes, std::span<const HamiltonianTerm> terms) {
  std::vector<int> per_mode(static_cast<std::size_t>(n_modes), 0);
  for (const HamiltonianTerm& t : terms) {
    for (int m : t.mask.modes()) ++per_mode[static_cast<std::size_t>(m)];
  }
  return per_mode.empty() ? 0 : *std::max_element(per_mode.begin(), per_mode.end());
}

// Appends the non-identity part of a Hermitian piece, returns its identity coefficient.
double append_piece(const MajoranaPolynomial& piece, std::vector<HamiltonianTerm>& terms) {
  require_hermitian(piece, 1e-12);
  double identity = 0.0;
  for (const Term& t : piece.terms()) {
    if (t.mask.empty()) {
      identity += t.coeff.real();
    } else {
      terms.push_back({t.mask, t.coeff.real()});
    }
  }
  return identity;
}

MajoranaPolynomial number_polynomial(int mode, int n_majorana) {
  return poly_multiply(creation_operator(mode, n_majorana), annihilation_operator(mode, n_majorana));
}

// -(c*_p c_q + c*_q c_p) for both spins
void append_hopping(int site_a, int site_b, int n_majorana, std::vector<HamiltonianTerm>& terms, double& shift) {
  for (bool down : {false, true}) {
    const int p = spin_orbital(site_a, down);
    const int q = spin_orbital(site_b, down);
    const auto forward = poly_multiply(creation_operator(p, n_majorana), annihilation_operator(q, n_majorana));
    const auto hop = poly_add_scaled(forward, poly_adjoint(forward), 1.0);
    shift += append_piece(poly_scale(hop, -1.0), terms);
  }
}

void append_interaction(int site, double u, int n_majorana, std::vector<HamiltonianTerm>& terms, double& shift) {
  if (u == 0.0) return;
  const auto n_up = number_polynomial(spin_orbital(site, false), n_majorana);
  const auto n_down = number_polynomial(spin_orbital(site, true), n_majorana);
  const auto piece = poly_scale(poly_multiply(n_up, n_down), u);
  std::vector<HamiltonianTerm> local;
  shift += append_piece(piece, local);
  // quartic term leads its site in the coloring order
  std::stable_sort(local.begin(), local.end(), [](const HamiltonianTerm& a, const HamiltonianTerm& b) {
    return a.mask.popcount() > b.mask.popcount();
  });
  terms.insert(terms.end(), local.begin(), local.end());
}

}  // namespace

QuarticHamiltonian::QuarticHamiltonian(int n_modes, std::vector<HamiltonianTerm> terms, double identity_shift)
    : n_modes_(n_modes), identity_shift_(identity_shift) {
  if (n_modes < 0 || n_modes > kMaxModes || n_modes % 2 != 0) {
    throw ValidationError("Hamiltonian mode count must be even and in [0, " + std::to_string(kMaxModes) + "]");
  }
  if (!std::isfinite(identity_shift)) throw ValidationError("non-finite identity shift");
  std::unordered_map<ModeMask, std::size_t, ModeMaskHash> first_seen;
  for (const HamiltonianTerm& t : terms) {
    const int d = t.mask.popcount();
    if (d != 2 && d != 4) {
      throw ValidationError("Hamiltonian term " + t.mask.to_hex() + " has degree " + std::to_string(d) +
                            "; only degrees 2 and 4 are supported");
    }
    if (t.mask.highest() >= n_modes) {
      throw ValidationError("Hamiltonian term " + t.mask.to_hex() + " exceeds N = " + std::to_string(n_modes));
    }
    if (!std::isfinite(t.coeff)) throw ValidationError("non-finite coefficient on term " + t.mask.to_hex());
    auto [it, fresh] = first_seen.try_emplace(t.mask, terms_.size());
    if (fresh) {
      terms_.push_back(t);
    } else {
      terms_[it->second].coeff += t.coeff;
    }
  }
  std::erase_if(terms_, [](const HamiltonianTerm& t) { return t.coeff == 0.0; });
  sparsity_ = count_sparsity(n_modes_, terms_);
  for (const HamiltonianTerm& t : terms_) max_abs_coeff_ = std::max(max_abs_coeff_, std::abs(t.coeff));
}

QuarticHamiltonian QuarticHamiltonian::from_polynomial(const MajoranaPolynomial& p, double imag_tol) {
  require_hermitian(p, imag_tol);
  std::vector<HamiltonianTerm> terms;
  double shift = 0.0;
  for (const Term& t : p.terms()) {
    if (t.mask.empty()) {
      shift = t.coeff.real();
    } else {
      terms.push_back({t.mask, t.coeff.real()});
    }
  }
  return QuarticHamiltonian(p.n_modes(), std::move(terms), shift);
}

MajoranaPolynomial QuarticHamiltonian::to_polynomial(bool include_identity) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + 1);
  if (include_identity && identity_shift_ != 0.0) out.push_back({ModeMask{}, identity_shift_});
  for (const HamiltonianTerm& t : terms_) out.push_back({t.mask, t.coeff});
  return MajoranaPolynomial(n_modes_, std::move(out));
}

QuarticHamiltonian QuarticHamiltonian::degree_part(int degree) const {
  std::vector<HamiltonianTerm> out;
  for (const HamiltonianTerm& t : terms_) {
    if (t.mask.popcount() == degree) out.push_back(t);
  }
  return QuarticHamiltonian(n_modes_, std::move(out));
}

int sparsity(const QuarticHamiltonian& h) {
  int best = 0;
  for (int mode = 0; mode < h.n_modes(); ++mode) {
    int count = 0;
    for (const HamiltonianTerm& t : h.terms()) count += t.mask.test(mode) ? 1 : 0;
    best = std::max(best, count);
  }
  return best;
}

QuarticHamiltonian combine(const QuarticHamiltonian& h0, const QuarticHamiltonian& v, double u) {
  if (h0.n_modes() != v.n_modes()) throw UsageError("combine: mode counts differ");
  std::vector<HamiltonianTerm> terms(h0.terms().begin(), h0.terms().end());
  for (const HamiltonianTerm& t : v.terms()) terms.push_back({t.mask, u * t.coeff});
  return QuarticHamiltonian(h0.n_modes(), std::move(terms), h0.identity_shift() + u * v.identity_shift());
}

TrotterSchedule greedy_color_partition(const QuarticHamiltonian& h) {
  TrotterSchedule schedule;
  std::vector<ModeMask> used;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const ModeMask& m = h.terms()[i].mask;
    std::size_t color = 0;
    while (color < used.size() && overlap(used[color], m) != 0) ++color;
    if (color == used.size()) {
      used.emplace_back();
      schedule.groups.emplace_back();
    }
    used[color] |= m;
    schedule.groups[color].push_back(i);
  }
  return schedule;
}

std::string check_schedule(const QuarticHamiltonian& h, const TrotterSchedule& schedule) {
  std::vector<int> seen(h.size(), 0);
  for (std::size_t g = 0; g < schedule.groups.size(); ++g) {
    ModeMask used;
    for (std::size_t idx : schedule.groups[g]) {
      if (idx >= h.size()) return "group " + std::to_string(g) + " references term " + std::to_string(idx);
      ++seen[idx];
      const ModeMask& m = h.terms()[idx].mask;
      if (overlap(used, m) != 0) {
        return "group " + std::to_string(g) + ": term " + std::to_string(idx) + " overlaps another term";
      }
      used |= m;
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 1) return "term " + std::to_string(i) + " appears " + std::to_string(seen[i]) + " times";
  }
  return {};
}

ValidationReport validate(const QuarticHamiltonian& h) {
  ValidationReport r;
  r.n_modes = h.n_modes();
  r.n_terms = h.size();
  r.identity_shift = h.identity_shift();
  std::unordered_map<ModeMask, int, ModeMaskHash> seen;
  for (const HamiltonianTerm& t : h.terms()) {
    const int d = t.mask.popcount();
    if (d == 2) {
      ++r.n_quadratic;
    } else if (d == 4) {
      ++r.n_quartic;
    } else {
      throw ValidationError("term " + t.mask.to_hex() + " has degree " + std::to_string(d));
    }
    if (++seen[t.mask] > 1) throw ValidationError("duplicate term " + t.mask.to_hex());
    if (!std::isfinite(t.coeff) || t.coeff == 0.0) {
      throw ValidationError("term " + t.mask.to_hex() + " has invalid coefficient");
    }
  }
  r.sparsity = sparsity(h);
  if (r.sparsity != h.sparsity()) throw ValidationError("cached sparsity disagrees with recount");
  const TrotterSchedule schedule = greedy_color_partition(h);
  if (auto problem = check_schedule(h, schedule); !problem.empty()) throw ValidationError(problem);
  r.groups = schedule.group_count();
  r.max_abs_coeff = h.max_abs_coeff();
  r.normalized = r.max_abs_coeff <= 1.0;
  if (!r.normalized) {
    r.notes.push_back("max |h_X| = " + std::to_string(r.max_abs_coeff) +
                      " exceeds 1; theory bounds need a max(1, max|h_X|) factor");
  }
  if (r.groups > static_cast<std::size_t>(4 * r.sparsity)) {
    r.notes.push_back("color count exceeds 4 * sparsity");
  }
  return r;
}

QuarticHamiltonian build_hubbard_1d(int sites, double interaction, bool periodic) {
  if (sites < 2) throw UsageError("1D Hubbard chain needs at least 2 sites");
  const int n = 4 * sites;
  if (n > kMaxModes) throw UsageError("1D Hubbard chain too long for " + std::to_string(kMaxModes) + " modes");
  std::vector<HamiltonianTerm> terms;
  double shift = 0.0;
  for (int i = 0; i + 1 < sites; ++i) append_hopping(i, i + 1, n, terms, shift);
  if (periodic) append_hopping(sites - 1, 0, n, terms, shift);
  for (int i = 0; i < sites; ++i) append_interaction(i, interaction, n, terms, shift);
  return QuarticHamiltonian(n, std::move(terms), shift);
}

QuarticHamiltonian build_hubbard_2d(int side, double interaction) {
  if (side < 2) throw UsageError("2D Hubbard lattice needs side >= 2");
  const int n = 4 * side * side;
  if (n > kMaxModes) throw UsageError("2D Hubbard lattice too large for " + std::to_string(kMaxModes) + " modes");
  std::vector<HamiltonianTerm> terms;
  double shift = 0.0;
  for (int row = 0; row < side; ++row) {
    for (int col = 0; col < side; ++col) {
      const int site = row * side + col;
      if (col + 1 < side) append_hopping(site, site + 1, n, terms, shift);
      if (row + 1 < side) append_hopping(site, site + side, n, terms, shift);
    }
  }
  for (int site = 0; site < side * side; ++site) append_interaction(site, interaction, n, terms, shift);
  return QuarticHamiltonian(n, std::move(terms), shift);
}

std::string hamiltonian_to_json(const QuarticHamiltonian& h) {
  nlohmann::ordered_json j;
  j["n_majorana"] = h.n_modes();
  j["identity_shift"] = h.identity_shift();
  j["terms"] = nlohmann::ordered_json::array();
  for (const HamiltonianTerm& t : h.terms()) {
    j["terms"].push_back({{"mask_hex", t.mask.to_hex()}, {"coeff", t.coeff}});
  }
  return j.dump(2);
}

QuarticHamiltonian hamiltonian_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("Hamiltonian JSON: ") + e.what());
  }
  try {
    std::vector<HamiltonianTerm> terms;
    for (const auto& t : j.at("terms")) {
      terms.push_back({ModeMask::from_hex(t.at("mask_hex").get<std::string>()), t.at("coeff").get<double>()});
    }
    return QuarticHamiltonian(j.at("n_majorana").get<int>(), std::move(terms), j.value("identity_shift", 0.0));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("Hamiltonian JSON: ") + e.what());
  }
}

std::string schedule_to_string(const QuarticHamiltonian& h, const TrotterSchedule& schedule) {
  std::ostringstream out;
  out << "groups " << schedule.group_count() << " sparsity " << h.sparsity() << '\n';
  for (std::size_t g = 0; g < schedule.groups.size(); ++g) {
    out << "group " << g << ':';
    for (std::size_t idx : schedule.groups[g]) out << ' ' << h.terms()[idx].mask.to_hex();
    out << '\n';
  }
  return out.str();
}

}  // namespace majprop
