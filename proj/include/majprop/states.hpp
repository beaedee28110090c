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

#include <string>
#include <vector>

#include "majprop/polynomial.hpp"

namespace majprop {

/// Fock basis state |n_0 n_1 ...> over n_majorana / 2 fermionic modes.
class ProductState {
 public:
  ProductState() = default;
  /// Throws UsageError if n_majorana is odd or occupations has the wrong length.
  ProductState(int n_majorana, std::vector<bool> occupations);
  static ProductState vacuum(int n_majorana);
  /// Bitstring over fermionic modes, mode 0 leftmost. Throws ValidationError on other characters.
  static ProductState from_string(const std::string& bits);

  int n_majorana() const { return 2 * static_cast<int>(occ_.size()); }
  int n_fermions() const { return static_cast<int>(occ_.size()); }
  bool occupied(int mode) const { return occ_.at(static_cast<std::size_t>(mode)); }
  void set(int mode, bool value) { occ_.at(static_cast<std::size_t>(mode)) = value; }
  int particle_count() const;
  std::string to_string() const;

  friend bool operator==(const ProductState&, const ProductState&) = default;

 private:
  std::vector<bool> occ_;
};

/// <n|gamma_X|n>: nonzero only when X is a union of complete pairs {2j, 2j+1}.
double string_expectation(const ModeMask& mask, const ProductState& s);

/// <n|P|n> including the imaginary part.
Complex expectation_complex(const MajoranaPolynomial& p, const ProductState& s);
/// <n|P|n>; throws UsageError on a mode-count mismatch and ValidationError if |Im| > 1e-10.
double expectation(const MajoranaPolynomial& p, const ProductState& s);

/// n_j = (1 + gamma_{2j,2j+1}) / 2.
MajoranaPolynomial number_operator(int mode, int n_majorana);
/// (1 - n_{site,up}) (1 - n_{site,down}), the probability that a site is empty.
MajoranaPolynomial hole_density_observable(int site, int n_majorana);

/// L x L lattice filled with alternating spins around an empty central site. Throws UsageError for even L.
ProductState antiferromagnetic_hole_state(int side);
/// Row-major id of the central site of an odd L x L lattice.
int central_site(int side);

}  // namespace majprop
