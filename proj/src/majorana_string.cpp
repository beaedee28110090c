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

#include "majprop/majorana_string.hpp"

#include <string>

#include "majprop/errors.hpp"

namespace majprop {

namespace {

// Bit x of the result is the parity of |{bits of w below x}|.
constexpr uint64_t exclusive_prefix_parity(uint64_t w) {
  uint64_t p = w << 1;
  p ^= p << 1;
  p ^= p << 2;
  p ^= p << 4;
  p ^= p << 8;
  p ^= p << 16;
  p ^= p << 32;
  return p;
}

void check_same_modes(const MajoranaString& s, const MajoranaString& t) {
  if (s.n_modes() != t.n_modes()) {
    throw UsageError("Majorana strings over different mode counts (" + std::to_string(s.n_modes()) +
                     " vs " + std::to_string(t.n_modes()) + ")");
  }
}

}  // namespace

MajoranaString::MajoranaString(ModeMask mask, int n_modes) : mask_(mask), n_modes_(n_modes) {
  if (n_modes < 0 || n_modes > kMaxModes || n_modes % 2 != 0) {
    throw UsageError("mode count must be even and in [0, " + std::to_string(kMaxModes) + "], got " +
                     std::to_string(n_modes));
  }
  if (mask.highest() >= n_modes) {
    throw UsageError("mask has mode " + std::to_string(mask.highest()) + " >= N = " + std::to_string(n_modes));
  }
}

int inversion_parity(const ModeMask& s, const ModeMask& t) {
  // sum over s in S of |T n [0, s)|, mod 2
  uint64_t carry = 0;
  int parity = 0;
  for (std::size_t i = 0; i < ModeMask::kWords; ++i) {
    const uint64_t tw = t.word(i);
    uint64_t prefix = exclusive_prefix_parity(tw);
    if (carry) prefix = ~prefix;
    parity ^= std::popcount(s.word(i) & prefix) & 1;
    carry ^= static_cast<uint64_t>(std::popcount(tw) & 1);
  }
  return parity;
}

std::pair<Phase, MajoranaString> string_multiply(const MajoranaString& s, const MajoranaString& t) {
  check_same_modes(s, t);
  return {product_phase(s.mask(), t.mask()), MajoranaString(s.mask() ^ t.mask(), s.n_modes())};
}

bool strings_anticommute(const MajoranaString& s, const MajoranaString& t) {
  check_same_modes(s, t);
  return masks_anticommute(s.mask(), t.mask());
}

}  // namespace majprop
