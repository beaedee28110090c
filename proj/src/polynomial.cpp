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

#include "majprop/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "majprop/errors.hpp"

namespace majprop {

namespace {

void check_modes(int n_modes) {
  if (n_modes < 0 || n_modes > kMaxModes || n_modes % 2 != 0) {
    throw UsageError("mode count must be even and in [0, " + std::to_string(kMaxModes) + "], got " +
                     std::to_string(n_modes));
  }
}

void check_same_modes(const MajoranaPolynomial& p, const MajoranaPolynomial& q) {
  if (p.n_modes() != q.n_modes()) {
    throw UsageError("polynomials over different mode counts (" + std::to_string(p.n_modes()) + " vs " +
                     std::to_string(q.n_modes()) + ")");
  }
}

std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mask < b.mask; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mask == t.mask) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == Complex(0.0, 0.0); });
  return out;
}

}  // namespace

MajoranaPolynomial::MajoranaPolynomial(int n_modes) : n_modes_(n_modes) { check_modes(n_modes); }

MajoranaPolynomial::MajoranaPolynomial(int n_modes, std::vector<Term> terms) : n_modes_(n_modes) {
  check_modes(n_modes);
  for (const Term& t : terms) {
    if (t.mask.highest() >= n_modes) {
      throw UsageError("term mask " + t.mask.to_hex() + " exceeds N = " + std::to_string(n_modes));
    }
  }
  terms_ = canonicalize(std::move(terms));
}

MajoranaPolynomial MajoranaPolynomial::from_sorted_unique(int n_modes, std::vector<Term> terms) {
  MajoranaPolynomial p(n_modes);
  p.terms_ = std::move(terms);
  return p;
}

MajoranaPolynomial MajoranaPolynomial::monomial(const MajoranaString& s, Complex coeff) {
  return MajoranaPolynomial(s.n_modes(), {Term{s.mask(), coeff}});
}

MajoranaPolynomial MajoranaPolynomial::identity(int n_modes, Complex coeff) {
  return MajoranaPolynomial(n_modes, {Term{ModeMask{}, coeff}});
}

Complex MajoranaPolynomial::coefficient(const ModeMask& mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, const ModeMask& m) { return t.mask < m; });
  if (it != terms_.end() && it->mask == mask) return it->coeff;
  return 0.0;
}

int MajoranaPolynomial::degree() const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mask.popcount());
  return d;
}

double MajoranaPolynomial::max_imag() const {
  double m = 0.0;
  for (const Term& t : terms_) m = std::max(m, std::abs(t.coeff.imag()));
  return m;
}

MajoranaPolynomial poly_add_scaled(const MajoranaPolynomial& p, const MajoranaPolynomial& q, Complex c) {
  check_same_modes(p, q);
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  while (a != p.terms().end() || b != q.terms().end()) {
    if (b == q.terms().end() || (a != p.terms().end() && a->mask < b->mask)) {
      out.push_back(*a++);
    } else if (a == p.terms().end() || b->mask < a->mask) {
      out.push_back({b->mask, c * b->coeff});
      ++b;
    } else {
      out.push_back({a->mask, a->coeff + c * b->coeff});
      ++a;
      ++b;
    }
    if (out.back().coeff == Complex(0.0, 0.0)) out.pop_back();
  }
  return MajoranaPolynomial::from_sorted_unique(p.n_modes(), std::move(out));
}

MajoranaPolynomial poly_scale(const MajoranaPolynomial& p, Complex c) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    const Complex v = c * t.coeff;
    if (v != Complex(0.0, 0.0)) out.push_back({t.mask, v});
  }
  return MajoranaPolynomial::from_sorted_unique(p.n_modes(), std::move(out));
}

MajoranaPolynomial poly_multiply(const MajoranaPolynomial& p, const MajoranaPolynomial& q) {
  check_same_modes(p, q);
  std::vector<Term> out;
  out.reserve(p.size() * q.size());
  for (const Term& a : p.terms()) {
    for (const Term& b : q.terms()) {
      out.push_back({a.mask ^ b.mask, times_phase(a.coeff * b.coeff, product_phase(a.mask, b.mask))});
    }
  }
  return MajoranaPolynomial(p.n_modes(), std::move(out));
}

MajoranaPolynomial poly_commutator(const MajoranaPolynomial& p, const MajoranaPolynomial& q) {
  check_same_modes(p, q);
  std::vector<Term> out;
  for (const Term& a : p.terms()) {
    for (const Term& b : q.terms()) {
      if (!masks_anticommute(a.mask, b.mask)) continue;
      out.push_back({a.mask ^ b.mask, times_phase(2.0 * a.coeff * b.coeff, product_phase(a.mask, b.mask))});
    }
  }
  return MajoranaPolynomial(p.n_modes(), std::move(out));
}

MajoranaPolynomial poly_adjoint(const MajoranaPolynomial& p) {
  std::vector<Term> out(p.terms().begin(), p.terms().end());
  for (Term& t : out) t.coeff = std::conj(t.coeff);
  return MajoranaPolynomial::from_sorted_unique(p.n_modes(), std::move(out));
}

double frobenius_norm(const MajoranaPolynomial& p) {
  double s = 0.0;
  for (const Term& t : p.terms()) s += std::norm(t.coeff);
  return std::sqrt(s);
}

double frobenius_distance(const MajoranaPolynomial& p, const MajoranaPolynomial& q) {
  check_same_modes(p, q);
  double s = 0.0;
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  while (a != p.terms().end() || b != q.terms().end()) {
    if (b == q.terms().end() || (a != p.terms().end() && a->mask < b->mask)) {
      s += std::norm(a->coeff);
      ++a;
    } else if (a == p.terms().end() || b->mask < a->mask) {
      s += std::norm(b->coeff);
      ++b;
    } else {
      s += std::norm(a->coeff - b->coeff);
      ++a;
      ++b;
    }
  }
  return std::sqrt(s);
}

MajoranaPolynomial truncate_degree(const MajoranaPolynomial& p, int ell) {
  if (ell < 0) throw UsageError("truncation degree must be >= 0");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    if (t.mask.popcount() <= ell) out.push_back(t);
  }
  return MajoranaPolynomial::from_sorted_unique(p.n_modes(), std::move(out));
}

double truncation_tail(const MajoranaPolynomial& p, int ell) {
  double s = 0.0;
  for (const Term& t : p.terms()) {
    if (t.mask.popcount() > ell) s += std::norm(t.coeff);
  }
  return std::sqrt(s);
}

MajoranaPolynomial prune_coefficients(const MajoranaPolynomial& p, double eps) {
  if (!(eps >= 0.0)) throw UsageError("pruning threshold must be >= 0");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    if (std::abs(t.coeff) > eps) out.push_back(t);
  }
  return MajoranaPolynomial::from_sorted_unique(p.n_modes(), std::move(out));
}

MajoranaPolynomial rotate_string(double theta, const MajoranaString& t, const MajoranaString& s) {
  if (!strings_anticommute(t, s)) return MajoranaPolynomial::monomial(s);
  const Phase phase = product_phase(t.mask(), s.mask());
  const Complex generated = times_phase(Complex(0.0, std::sin(theta)), phase);
  return MajoranaPolynomial(s.n_modes(), {Term{s.mask(), std::cos(theta)}, Term{t.mask() ^ s.mask(), generated}});
}

void require_hermitian(const MajoranaPolynomial& p, double tol) {
  const double im = p.max_imag();
  if (im > tol) {
    throw ValidationError("polynomial declared Hermitian has imaginary coefficient of size " + std::to_string(im));
  }
}

}  // namespace majprop
