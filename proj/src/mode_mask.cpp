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

#include "majprop/mode_mask.hpp"

#include <cctype>

#include "majprop/errors.hpp"

namespace majprop {

ModeMask ModeMask::from_modes(std::span<const int> modes) {
  ModeMask m;
  for (int mode : modes) {
    if (mode < 0 || mode >= kMaxModes) {
      throw UsageError("mode index " + std::to_string(mode) + " outside [0, " +
                       std::to_string(kMaxModes) + ")");
    }
    m.set(mode);
  }
  return m;
}

ModeMask ModeMask::from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw ValidationError("empty hex mask");
  ModeMask m;
  int bit = 0;
  for (std::size_t i = hex.size(); i-- > 0; bit += 4) {
    const char c = hex[i];
    int v;
    if (c >= '0' && c <= '9') {
      v = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      v = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      v = c - 'A' + 10;
    } else {
      throw ValidationError("invalid hex digit in mask '" + std::string(hex) + "'");
    }
    if (v == 0) continue;
    if (bit >= kMaxModes) throw ValidationError("hex mask wider than " + std::to_string(kMaxModes) + " bits");
    m.words_[static_cast<std::size_t>(bit) >> 6] |= static_cast<uint64_t>(v) << (bit & 63);
  }
  return m;
}

ModeMask ModeMask::prefix(int n) {
  ModeMask m;
  for (std::size_t i = 0; i < kWords; ++i) {
    const int lo = static_cast<int>(i) * 64;
    if (n >= lo + 64) {
      m.words_[i] = ~uint64_t{0};
    } else if (n > lo) {
      m.words_[i] = (uint64_t{1} << (n - lo)) - 1;
    }
  }
  return m;
}

int ModeMask::highest() const {
  for (std::size_t i = kWords; i-- > 0;) {
    if (words_[i] != 0) return static_cast<int>(i) * 64 + 63 - std::countl_zero(words_[i]);
  }
  return -1;
}

std::vector<int> ModeMask::modes() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount()));
  for (std::size_t i = 0; i < kWords; ++i) {
    uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i) * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::string ModeMask::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int top = highest();
  if (top < 0) return "0";
  std::string out;
  for (int nibble = top / 4; nibble >= 0; --nibble) {
    const int bit = nibble * 4;
    const uint64_t v = (words_[static_cast<std::size_t>(bit) >> 6] >> (bit & 63)) & 0xF;
    out.push_back(kDigits[v]);
  }
  return out;
}

}  // namespace majprop
