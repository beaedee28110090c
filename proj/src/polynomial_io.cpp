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

#include "majprop/polynomial_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

#include "majprop/errors.hpp"

namespace majprop {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("cannot parse number '" + std::string(text) + "'");
  }
  return v;
}

void write_polynomial(std::ostream& out, const MajoranaPolynomial& p) {
  out << "majpoly v1 N=" << p.n_modes() << '\n';
  for (const Term& t : p.terms()) {
    out << t.mask.to_hex() << ' ' << format_double(t.coeff.real()) << ' ' << format_double(t.coeff.imag()) << '\n';
  }
}

MajoranaPolynomial read_polynomial(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("majpoly: missing header");
  constexpr std::string_view kPrefix = "majpoly v1 N=";
  if (!std::string_view(line).starts_with(kPrefix)) {
    throw ValidationError("majpoly: bad header '" + line + "'");
  }
  int n_modes = 0;
  {
    const std::string_view rest = std::string_view(line).substr(kPrefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n_modes);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw ValidationError("majpoly: bad mode count in header '" + line + "'");
    }
  }
  std::vector<Term> terms;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string mask, re, im, extra;
    if (!(fields >> mask >> re >> im) || (fields >> extra)) {
      throw ValidationError("majpoly: line " + std::to_string(line_no) + " is not '<mask> <re> <im>'");
    }
    terms.push_back({ModeMask::from_hex(mask), Complex(parse_double(re), parse_double(im))});
  }
  try {
    return MajoranaPolynomial(n_modes, std::move(terms));
  } catch (const UsageError& e) {
    throw ValidationError(std::string("majpoly: ") + e.what());
  }
}

std::string polynomial_to_string(const MajoranaPolynomial& p) {
  std::ostringstream out;
  write_polynomial(out, p);
  return out.str();
}

MajoranaPolynomial polynomial_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_polynomial(in);
}

}  // namespace majprop
