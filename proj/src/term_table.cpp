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

#include "majprop/term_table.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "majprop/errors.hpp"

namespace majprop {

TermTable::TermTable(int n_modes)
    : n_modes_(n_modes), n_words_(std::max<std::size_t>(1, (static_cast<std::size_t>(std::max(0, n_modes)) + 63) / 64)) {
  rehash(16);
}

TermTable::TermTable(const MajoranaPolynomial& p) : TermTable(p.n_modes()) {
  reserve(p.size());
  for (const Term& t : p.terms()) insert(t.mask, t.coeff);
}

void TermTable::reserve(std::size_t n) {
  for (std::size_t w = 0; w < n_words_; ++w) words_[w].reserve(n);
  coeffs_.reserve(n);
  const std::size_t wanted = std::bit_ceil(std::max<std::size_t>(16, 2 * n));
  if (wanted > slots_.size()) rehash(wanted);
}

void TermTable::clear() {
  for (auto& w : words_) w.clear();
  coeffs_.clear();
  std::fill(slots_.begin(), slots_.end(), kEmpty);
}

std::size_t TermTable::find(const ModeMask& m) const {
  for (std::size_t s = home_slot(m);; s = (s + 1) & slot_mask_) {
    const uint32_t idx = slots_[s];
    if (idx == kEmpty) return npos;
    if (mask_equals(idx, m)) return idx;
  }
}

std::size_t TermTable::insert(const ModeMask& m, Complex c) {
  if (size() >= std::numeric_limits<uint32_t>::max() - 1) {
    throw TermCapExceeded(std::numeric_limits<uint32_t>::max() - 1, size() + 1, "term table index width");
  }
  if (2 * (size() + 1) > slots_.size()) rehash(slots_.size() * 2);
  const std::size_t idx = size();
  for (std::size_t w = 0; w < n_words_; ++w) words_[w].push_back(m.word(w));
  coeffs_.push_back(c);
  std::size_t s = home_slot(m);
  while (slots_[s] != kEmpty) s = (s + 1) & slot_mask_;
  slots_[s] = static_cast<uint32_t>(idx);
  return idx;
}

std::size_t TermTable::slot_of(std::size_t i) const {
  for (std::size_t s = home_slot(mask(i));; s = (s + 1) & slot_mask_) {
    if (slots_[s] == i) return s;
  }
}

void TermTable::erase(std::size_t i) {
  // backward-shift deletion keeps linear probing tombstone-free
  std::size_t hole = slot_of(i);
  for (std::size_t s = (hole + 1) & slot_mask_; slots_[s] != kEmpty; s = (s + 1) & slot_mask_) {
    const std::size_t home = home_slot(mask(slots_[s]));
    // move entry at s into the hole if its home is not in the cyclic range (hole, s]
    const bool in_range = hole <= s ? (home > hole && home <= s) : (home > hole || home <= s);
    if (!in_range) {
      slots_[hole] = slots_[s];
      hole = s;
    }
  }
  slots_[hole] = kEmpty;

  const std::size_t last = size() - 1;
  if (i != last) {
    slots_[slot_of(last)] = static_cast<uint32_t>(i);
    for (std::size_t w = 0; w < n_words_; ++w) words_[w][i] = words_[w][last];
    coeffs_[i] = coeffs_[last];
  }
  for (std::size_t w = 0; w < n_words_; ++w) words_[w].pop_back();
  coeffs_.pop_back();
}

void TermTable::rehash(std::size_t slot_count) {
  slots_.assign(slot_count, kEmpty);
  slot_mask_ = slot_count - 1;
  for (std::size_t i = 0; i < size(); ++i) {
    std::size_t s = home_slot(mask(i));
    while (slots_[s] != kEmpty) s = (s + 1) & slot_mask_;
    slots_[s] = static_cast<uint32_t>(i);
  }
}

MajoranaPolynomial TermTable::to_polynomial() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<ModeMask> masks(size());
  for (std::size_t i = 0; i < size(); ++i) masks[i] = mask(i);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return masks[a] < masks[b]; });
  std::vector<Term> terms;
  terms.reserve(size());
  for (std::size_t i : order) {
    if (coeffs_[i] != Complex(0.0, 0.0)) terms.push_back({masks[i], coeffs_[i]});
  }
  return MajoranaPolynomial::from_sorted_unique(n_modes_, std::move(terms));
}

}  // namespace majprop
