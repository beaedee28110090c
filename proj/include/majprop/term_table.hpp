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

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "majprop/polynomial.hpp"

namespace majprop {

/// Mutable term store for the propagation hot loop.
///
/// Terms live in insertion order in structure-of-arrays form (one array per
/// mask word, one for coefficients) so a scan against a rotation generator
/// only touches the words the generator occupies. An open-addressing index
/// maps masks to positions. Erasure swaps the last term into the hole, so the
/// iteration order is a pure function of the operation sequence. Only the
/// words below n_modes are stored.
class TermTable {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  explicit TermTable(int n_modes = 0);
  explicit TermTable(const MajoranaPolynomial& p);

  int n_modes() const { return n_modes_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  ModeMask mask(std::size_t i) const {
    ModeMask m;
    for (std::size_t w = 0; w < n_words_; ++w) m.set_word(w, words_[w][i]);
    return m;
  }
  /// Word w of every stored mask; nullptr above the stored words.
  const uint64_t* word_data(std::size_t w) const { return w < n_words_ ? words_[w].data() : nullptr; }
  Complex coeff(std::size_t i) const { return coeffs_[i]; }
  Complex& coeff(std::size_t i) { return coeffs_[i]; }

  std::size_t find(const ModeMask& m) const;
  /// Appends a term whose mask must not already be present; returns its position.
  std::size_t insert(const ModeMask& m, Complex c);
  /// Removes position i; the last term (if any) moves to i.
  void erase(std::size_t i);
  void clear();
  void reserve(std::size_t n);

  /// Canonical (sorted) copy.
  MajoranaPolynomial to_polynomial() const;

 private:
  static constexpr uint32_t kEmpty = std::numeric_limits<uint32_t>::max();

  std::size_t home_slot(const ModeMask& m) const { return ModeMaskHash{}(m) & slot_mask_; }
  bool mask_equals(std::size_t i, const ModeMask& m) const {
    for (std::size_t w = 0; w < n_words_; ++w) {
      if (words_[w][i] != m.word(w)) return false;
    }
    return true;
  }
  std::size_t slot_of(std::size_t i) const;
  void rehash(std::size_t slot_count);

  int n_modes_ = 0;
  std::size_t n_words_ = 1;
  std::array<std::vector<uint64_t>, ModeMask::kWords> words_;
  std::vector<Complex> coeffs_;
  std::vector<uint32_t> slots_;
  std::size_t slot_mask_ = 0;
};

}  // namespace majprop
