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
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace majprop {

/// Largest number of Majorana modes a mask can address.
inline constexpr int kMaxModes = 256;

/// Fixed-width set of Majorana mode indices, bit i <-> mode i.
///
/// Word 0 holds modes 0..63. Ordering compares the mask as an unsigned
/// integer, most significant word first.
class ModeMask {
 public:
  static constexpr std::size_t kWords = kMaxModes / 64;

  constexpr ModeMask() = default;

  static ModeMask from_modes(std::span<const int> modes);
  static ModeMask from_modes(std::initializer_list<int> modes) {
    return from_modes(std::span<const int>(modes.begin(), modes.size()));
  }
  /// Parses lowercase or uppercase hex, optionally prefixed with 0x. Throws ValidationError.
  static ModeMask from_hex(std::string_view hex);
  /// Mask with bits [0, n) set.
  static ModeMask prefix(int n);

  constexpr bool test(int mode) const {
    return (words_[static_cast<std::size_t>(mode) >> 6] >> (mode & 63)) & 1U;
  }
  constexpr void set(int mode) { words_[static_cast<std::size_t>(mode) >> 6] |= uint64_t{1} << (mode & 63); }
  constexpr void reset(int mode) {
    words_[static_cast<std::size_t>(mode) >> 6] &= ~(uint64_t{1} << (mode & 63));
  }
  constexpr void flip(int mode) { words_[static_cast<std::size_t>(mode) >> 6] ^= uint64_t{1} << (mode & 63); }

  constexpr int popcount() const {
    int n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
  }
  constexpr bool empty() const {
    uint64_t acc = 0;
    for (uint64_t w : words_) acc |= w;
    return acc == 0;
  }
  /// Highest set mode, or -1 for the empty mask.
  int highest() const;
  std::vector<int> modes() const;
  std::string to_hex() const;

  constexpr uint64_t word(std::size_t i) const { return words_[i]; }
  constexpr void set_word(std::size_t i, uint64_t w) { words_[i] = w; }
  constexpr const std::array<uint64_t, kWords>& words() const { return words_; }

  constexpr ModeMask& operator^=(const ModeMask& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  constexpr ModeMask& operator&=(const ModeMask& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr ModeMask& operator|=(const ModeMask& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend constexpr ModeMask operator^(ModeMask a, const ModeMask& b) { return a ^= b; }
  friend constexpr ModeMask operator&(ModeMask a, const ModeMask& b) { return a &= b; }
  friend constexpr ModeMask operator|(ModeMask a, const ModeMask& b) { return a |= b; }

  friend constexpr bool operator==(const ModeMask&, const ModeMask&) = default;
  friend constexpr std::strong_ordering operator<=>(const ModeMask& a, const ModeMask& b) {
    for (std::size_t i = kWords; i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::array<uint64_t, kWords> words_{};
};

/// Number of modes shared by two masks.
constexpr int overlap(const ModeMask& a, const ModeMask& b) {
  int n = 0;
  for (std::size_t i = 0; i < ModeMask::kWords; ++i) n += std::popcount(a.word(i) & b.word(i));
  return n;
}

struct ModeMaskHash {
  std::size_t operator()(const ModeMask& m) const noexcept {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t w : m.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace majprop
