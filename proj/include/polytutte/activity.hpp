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

#ifndef POLYTUTTE_ACTIVITY_HPP
#define POLYTUTTE_ACTIVITY_HPP

#include <algorithm>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "polytutte/bipoly.hpp"
#include "polytutte/polymatroid.hpp"

namespace polytutte {

// Internal/external activity of one basis. Index sets are masks over [n].
struct ActivityProfile {
  Vec basis;
  Mask internal = 0;
  Mask external = 0;
  int oi = 0;  // |Int \ Ext|
  int oe = 0;  // |Ext \ Int|
  int ie = 0;  // |Int & Ext|
  int iota_bar = 0;
  int eps_bar = 0;

  friend bool operator==(const ActivityProfile&, const ActivityProfile&) = default;
};

// Subsets I with sum_{i in I} a_i = f(I), in increasing mask order.
struct TightFamily {
  Vec basis;
  std::vector<Mask> sets;

  bool contains(Mask m) const {
    return std::binary_search(sets.begin(), sets.end(), m);
  }
};

namespace detail {

inline void require_basis(const Polymatroid& p, std::span<const Coord> a) {
  if (!p.contains(a)) throw Error(ErrorKind::kNotABasis, vec_text(a));
}

inline ActivityProfile make_profile(std::span<const Coord> a, Mask internal,
                                    Mask external) {
  const int n = static_cast<int>(a.size());
  ActivityProfile r;
  r.basis.assign(a.begin(), a.end());
  r.internal = internal;
  r.external = external;
  r.oi = popcount(internal & ~external);
  r.oe = popcount(external & ~internal);
  r.ie = popcount(internal & external);
  r.iota_bar = n - popcount(internal);
  r.eps_bar = n - popcount(external);
  return r;
}

}  // namespace detail

inline TightFamily tight_sets(const Polymatroid& p, const RankTable& f,
                              std::span<const Coord> a) {
  detail::require_basis(p, a);
  TightFamily family;
  family.basis.assign(a.begin(), a.end());
  const std::vector<Coord> sums = detail::subset_sums(a);
  for (Mask m = 0; m <= f.full(); ++m) {
    if (sums[m] == f[m]) family.sets.push_back(m);
  }
  return family;
}

// Index i is internally active when no move a - e_i + e_j with j < i stays in
// P, and externally active when no move a + e_i - e_j with j < i does.
inline ActivityProfile activities(const Polymatroid& p, std::span<const Coord> a) {
  detail::require_basis(p, a);
  const int n = p.ground_size();
  Mask internal = 0;
  Mask external = 0;
  Vec moved(a.begin(), a.end());
  for (int i = 0; i < n; ++i) {
    bool int_active = true;
    bool ext_active = true;
    for (int j = 0; j < i; ++j) {
      --moved[i];
      ++moved[j];
      if (p.contains(moved)) int_active = false;
      moved[i] += 2;
      moved[j] -= 2;
      if (p.contains(moved)) ext_active = false;
      --moved[i];
      ++moved[j];
    }
    if (int_active) internal |= bit(i);
    if (ext_active) external |= bit(i);
  }
  return detail::make_profile(a, internal, external);
}

// Characterization through tight sets: i is internally active iff some I with
// min(I) = i has a tight complement, and externally active iff some tight I'
// has min(I') = i.
inline ActivityProfile activities_via_tight_sets(const Polymatroid& p, const RankTable& f,
                                                 std::span<const Coord> a) {
  const TightFamily family = tight_sets(p, f, a);
  const Mask full = f.full();
  Mask internal = 0;
  Mask external = 0;
  for (Mask tight : family.sets) {
    if (tight != 0) external |= bit(lowest(tight));
    const Mask complement = full & ~tight;
    if (complement != 0) internal |= bit(lowest(complement));
  }
  return detail::make_profile(a, internal, external);
}

// Sum over bases of x^oi y^oe (x+y-1)^ie, accumulated in lexicographic basis
// order.
inline BiPoly tutte_direct(const Polymatroid& p) {
  std::map<std::tuple<int, int, int>, Integer> counts;
  for (const Vec& a : p.bases()) {
    const ActivityProfile r = activities(p, a);
    counts[{r.oi, r.oe, r.ie}] += 1;
  }
  std::vector<BiPoly> powers{BiPoly::constant(1)};
  BiPoly result;
  for (const auto& [key, count] : counts) {
    const auto [oi, oe, ie] = key;
    while (static_cast<int>(powers.size()) <= ie) {
      powers.push_back(powers.back() * BiPoly::x_plus_y_minus_one());
    }
    result += powers[ie].shifted(oi, oe) * count;
  }
  return result;
}

inline BiPoly interior_direct(const Polymatroid& p) {
  BiPoly result;
  for (const Vec& a : p.bases()) result.add_term({activities(p, a).iota_bar, 0}, 1);
  return result;
}

inline BiPoly exterior_direct(const Polymatroid& p) {
  BiPoly result;
  for (const Vec& a : p.bases()) result.add_term({0, activities(p, a).eps_bar}, 1);
  return result;
}

}  // namespace polytutte

#endif  // POLYTUTTE_ACTIVITY_HPP
