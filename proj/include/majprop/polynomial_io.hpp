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

#include <iosfwd>
#include <string>
#include <string_view>

#include "majprop/polynomial.hpp"

namespace majprop {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);
/// Parses a double written by format_double (or any decimal/inf/nan). Throws ValidationError.
double parse_double(std::string_view text);

/// Writes the `majpoly v1 N=<N>` format: a header line, then one `<hex mask> <re> <im>` line per term.
void write_polynomial(std::ostream& out, const MajoranaPolynomial& p);
MajoranaPolynomial read_polynomial(std::istream& in);

std::string polynomial_to_string(const MajoranaPolynomial& p);
MajoranaPolynomial polynomial_from_string(const std::string& text);

}  // namespace majprop
