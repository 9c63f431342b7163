// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYTUTTE_SUBSET_HPP
#define POLYTUTTE_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace polytutte {

// Subsets of the ground set as bitmasks: element i (0-based) is bit i.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;

constexpr Mask full_mask(int n) noexcept {
  return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

constexpr Mask bit(int i) noexcept { return Mask{1} << i; }

constexpr bool contains(Mask m, int i) noexcept { return (m >> i) & 1u; }

constexpr int popcount(Mask m) noexcept { return std::popcount(m); }

// Index of the smallest element; undefined for the empty set.
constexpr int lowest(Mask m) noexcept { return std::countr_zero(m); }

// Spreads the low bits of `compact` over the set bits of `survivors`, in
// order. This maps a subset of a relabeled ground set back to the original.
constexpr Mask scatter(Mask compact, Mask survivors) noexcept {
  Mask out = 0;
  int k = 0;
  for (Mask s = survivors; s != 0; s &= s - 1, ++k) {
    if ((compact >> k) & 1u) out |= s & (~s + 1);
  }
  return out;
}

// Inverse of scatter: keeps the bits of `m` that lie in `survivors`, packed.
constexpr Mask gather(Mask m, Mask survivors) noexcept {
  Mask out = 0;
  int k = 0;
  for (Mask s = survivors; s != 0; s &= s - 1, ++k) {
    if (m & s & (~s + 1)) out |= Mask{1} << k;
  }
  return out;
}

// Original (0-based) labels of the elements kept by `survivors`.
inline std::vector<int> surviving_labels(int n, Mask removed) {
  std::vector<int> labels;
  for (int i = 0; i < n; ++i) {
    if (!contains(removed, i)) labels.push_back(i);
  }
  return labels;
}

// "{1,3}" with 1-based labels, as elements are named in reports.
inline std::string subset_text(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; m >> i; ++i) {
    if (!contains(m, i)) continue;
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

}  // namespace polytutte

#endif  // POLYTUTTE_SUBSET_HPP
