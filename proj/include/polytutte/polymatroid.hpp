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

#ifndef POLYTUTTE_POLYMATROID_HPP
#define POLYTUTTE_POLYMATROID_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polytutte/error.hpp"
#include "polytutte/subset.hpp"

namespace polytutte {

using Coord = std::int64_t;
using Vec = std::vector<Coord>;

inline constexpr std::size_t kDefaultMaxBases = 1'000'000;

inline std::string vec_text(std::span<const Coord> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

namespace detail {

inline void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSet) {
    throw Error(ErrorKind::kInvalidArgument,
                "ground set size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxGroundSet) + "]");
  }
}

// Coordinate sums of `a` over every subset, indexed by mask.
inline std::vector<Coord> subset_sums(std::span<const Coord> a) {
  const int n = static_cast<int>(a.size());
  std::vector<Coord> sums(std::size_t{1} << n, 0);
  for (Mask m = 1; m <= full_mask(n); ++m) {
    sums[m] = sums[m & (m - 1)] + a[lowest(m)];
  }
  return sums;
}

}  // namespace detail

// Rank function f: 2^[n] -> Z stored densely by subset mask, with f(0) = 0 and
// f submodular. Monotonicity is not required.
class RankTable {
 public:
  // Validates normalization and submodularity.
  RankTable(int n, std::vector<Coord> values) : n_(n), f_(std::move(values)) {
    validate();
  }

  // For tables produced by operations that preserve submodularity.
  static RankTable trusted(int n, std::vector<Coord> values) {
    return RankTable(n, std::move(values), TrustedTag{});
  }

  int ground_size() const noexcept { return n_; }
  Mask full() const noexcept { return full_mask(n_); }
  Coord operator[](Mask m) const { return f_[m]; }
  Coord total() const { return f_[full()]; }
  const std::vector<Coord>& values() const noexcept { return f_; }

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  struct TrustedTag {};
  RankTable(int n, std::vector<Coord> values, TrustedTag)
      : n_(n), f_(std::move(values)) {}

  void validate() const {
    detail::check_ground_size(n_);
    if (f_.size() != (std::size_t{1} << n_)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "rank table needs 2^" + std::to_string(n_) + " entries, got " +
                      std::to_string(f_.size()));
    }
    if (f_[0] != 0) {
      throw Error(ErrorKind::kNonzeroEmptySet,
                  "f(empty set) = " + std::to_string(f_[0]));
    }
    // Submodularity is equivalent to the local condition
    // f(S+i) + f(S+j) >= f(S+i+j) + f(S) for all S and i, j outside S.
    for (Mask s = 0; s <= full(); ++s) {
      for (int i = 0; i < n_; ++i) {
        if (contains(s, i)) continue;
        for (int j = i + 1; j < n_; ++j) {
          if (contains(s, j)) continue;
          const Mask si = s | bit(i);
          const Mask sj = s | bit(j);
          if (f_[si] + f_[sj] < f_[si | sj] + f_[s]) {
            throw Error(ErrorKind::kSubmodularityFailure,
                        "f(" + subset_text(si) + ") + f(" + subset_text(sj) +
                            ") < f(" + subset_text(si | sj) + ") + f(" +
                            subset_text(s) + ")");
          }
        }
      }
    }
  }

  int n_;
  std::vector<Coord> f_;
};

inline RankTable validate_rank_table(int n, std::vector<Coord> values) {
  return RankTable(n, std::move(values));
}

// Polymatroid given by its finite basis set, kept sorted lexicographically.
class Polymatroid {
 public:
  // Sorts and de-duplicates without checking the polymatroid axioms.
  static Polymatroid trusted(int n, std::vector<Vec> bases) {
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    return Polymatroid(n, std::move(bases));
  }

  int ground_size() const noexcept { return n_; }
  const std::vector<Vec>& bases() const noexcept { return bases_; }
  std::size_t size() const noexcept { return bases_.size(); }

  bool contains(std::span<const Coord> v) const {
    if (static_cast<int>(v.size()) != n_) return false;
    auto it = std::lower_bound(
        bases_.begin(), bases_.end(), v, [](const Vec& a, std::span<const Coord> b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
    return it != bases_.end() && std::equal(it->begin(), it->end(), v.begin(), v.end());
  }

  // Common coordinate sum of all bases, f([n]).
  Coord rank() const {
    return std::accumulate(bases_.front().begin(), bases_.front().end(), Coord{0});
  }

  // alpha_t = f([n]) - f([n] \ t) is the smallest t-th coordinate and
  // beta_t = f({t}) the largest.
  Coord min_coordinate(int t) const {
    Coord m = bases_.front()[t];
    for (const Vec& a : bases_) m = std::min(m, a[t]);
    return m;
  }

  Coord max_coordinate(int t) const {
    Coord m = bases_.front()[t];
    for (const Vec& a : bases_) m = std::max(m, a[t]);
    return m;
  }

  bool all_nonnegative() const {
    for (const Vec& a : bases_) {
      for (Coord c : a) {
        if (c < 0) return false;
      }
    }
    return true;
  }

  bool is_subset_of(const Polymatroid& other) const {
    if (n_ != other.n_) return false;
    return std::includes(other.bases_.begin(), other.bases_.end(), bases_.begin(),
                         bases_.end());
  }

  friend bool operator==(const Polymatroid&, const Polymatroid&) = default;

 private:
  Polymatroid(int n, std::vector<Vec> bases) : n_(n), bases_(std::move(bases)) {}

  int n_;
  std::vector<Vec> bases_;
};

// Checks equal coordinate sums and the symmetric Exchange Axiom.
inline Polymatroid validate_basis_set(int n, std::vector<Vec> vectors) {
  detail::check_ground_size(n);
  if (vectors.empty()) throw Error(ErrorKind::kEmptySet, "no basis vectors");
  for (const Vec& v : vectors) {
    if (static_cast<int>(v.size()) != n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "vector " + vec_text(v) + " does not have " + std::to_string(n) +
                      " coordinates");
    }
  }
  Polymatroid p = Polymatroid::trusted(n, std::move(vectors));
  const auto& bases = p.bases();
  const Coord sum = p.rank();
  for (const Vec& a : bases) {
    if (std::accumulate(a.begin(), a.end(), Coord{0}) != sum) {
      throw Error(ErrorKind::kUnequalSums,
                  vec_text(bases.front()) + " and " + vec_text(a));
    }
  }
  Vec a_moved(n);
  Vec b_moved(n);
  for (const Vec& a : bases) {
    for (const Vec& b : bases) {
      for (int i = 0; i < n; ++i) {
        if (a[i] <= b[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (a[j] >= b[j]) continue;
          a_moved = a;
          ++a_moved[j];
          --a_moved[i];
          b_moved = b;
          ++b_moved[i];
          --b_moved[j];
          found = p.contains(a_moved) && p.contains(b_moved);
        }
        if (!found) {
          throw Error(ErrorKind::kExchangeFailure,
                      "a=" + vec_text(a) + ", b=" + vec_text(b) +
                          ", i=" + std::to_string(i + 1));
        }
      }
    }
  }
  return p;
}

// f_P(I) = max over bases of the coordinate sum over I.
inline RankTable rank_from_bases(const Polymatroid& p) {
  const int n = p.ground_size();
  std::vector<Coord> f;
  bool first = true;
  for (const Vec& a : p.bases()) {
    std::vector<Coord> sums = detail::subset_sums(a);
    if (first) {
      f = std::move(sums);
      first = false;
    } else {
      for (std::size_t m = 0; m < f.size(); ++m) f[m] = std::max(f[m], sums[m]);
    }
  }
  return RankTable::trusted(n, std::move(f));
}

// Greedy (lexicographically maximal for `order`) basis: telescoping rank
// increments along the order. `order` is a permutation of 0..n-1.
inline Vec greedy_basis(const RankTable& f, std::span<const int> order) {
  const int n = f.ground_size();
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::kInvalidArgument, "order is not a permutation of [n]");
  }
  Vec b(n, 0);
  Mask prefix = 0;
  for (int t : order) {
    if (t < 0 || t >= n || contains(prefix, t)) {
      throw Error(ErrorKind::kInvalidArgument, "order is not a permutation of [n]");
    }
    b[t] = f[prefix | bit(t)] - f[prefix];
    prefix |= bit(t);
  }
  return b;
}

inline Vec greedy_basis(const RankTable& f) {
  std::vector<int> order(f.ground_size());
  std::iota(order.begin(), order.end(), 0);
  return greedy_basis(f, order);
}

// Range T_t = {alpha_t, ..., beta_t} of values the t-th coordinate takes.
struct SliceRange {
  int t = 0;
  Coord alpha = 0;
  Coord beta = 0;

  Coord width() const noexcept { return beta - alpha; }
  bool contains(Coord j) const noexcept { return alpha <= j && j <= beta; }
};

inline SliceRange slice_range(const RankTable& f, int t) {
  return {t, f.total() - f[f.full() & ~bit(t)], f[bit(t)]};
}

inline SliceRange slice_range(const Polymatroid& p, int t) {
  return {t, p.min_coordinate(t), p.max_coordinate(t)};
}

// Rank function of the projected slice: f^t_j(I) = min(f(I), f(I + t) - j) on
// the ground set [n] \ t, relabeled order-preservingly.
inline RankTable slice_rank(const RankTable& f, int t, Coord j) {
  const int n = f.ground_size();
  if (t < 0 || t >= n) {
    throw Error(ErrorKind::kInvalidArgument, "element " + std::to_string(t + 1));
  }
  if (n == 1) {
    throw Error(ErrorKind::kFullGroundSet, "cannot slice a one-element ground set");
  }
  const SliceRange range = slice_range(f, t);
  if (!range.contains(j)) {
    throw Error(ErrorKind::kOutOfRange,
                "j=" + std::to_string(j) + " outside [" + std::to_string(range.alpha) +
                    ", " + std::to_string(range.beta) + "]");
  }
  const Mask low = bit(t) - 1;
  std::vector<Coord> g(std::size_t{1} << (n - 1));
  for (Mask m = 0; m < g.size(); ++m) {
    const Mask orig = (m & low) | ((m & ~low) << 1);
    g[m] = std::min(f[orig], f[orig | bit(t)] - j);
  }
  return RankTable::trusted(n - 1, std::move(g));
}

// Projection of {a in P : a_t = j}, dropping coordinate t.
inline Polymatroid slice(const Polymatroid& p, int t, Coord j) {
  const int n = p.ground_size();
  if (t < 0 || t >= n) {
    throw Error(ErrorKind::kInvalidArgument, "element " + std::to_string(t + 1));
  }
  if (n == 1) {
    throw Error(ErrorKind::kFullGroundSet, "cannot slice a one-element ground set");
  }
  std::vector<Vec> out;
  for (const Vec& a : p.bases()) {
    if (a[t] != j) continue;
    Vec b;
    b.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
      if (i != t) b.push_back(a[i]);
    }
    out.push_back(std::move(b));
  }
  if (out.empty()) {
    throw Error(ErrorKind::kEmptySlice,
                "no basis has coordinate " + std::to_string(t + 1) + " equal to " +
                    std::to_string(j));
  }
  // Filtering keeps lexicographic order, so no re-sort is needed.
  return Polymatroid::trusted(n - 1, std::move(out));
}

namespace detail {

inline void enumerate_into(const RankTable& f, Vec& current, std::vector<Vec>& out,
                           std::size_t max_bases) {
  const int n = f.ground_size();
  if (n == 1) {
    current[0] = f[1];
    if (out.size() >= max_bases) {
      throw Error(ErrorKind::kSizeLimitExceeded,
                  "more than " + std::to_string(max_bases) + " bases");
    }
    out.push_back(current);
    return;
  }
  const int t = n - 1;
  const SliceRange range = slice_range(f, t);
  for (Coord j = range.alpha; j <= range.beta; ++j) {
    current[t] = j;
    enumerate_into(slice_rank(f, t, j), current, out, max_bases);
  }
}

}  // namespace detail

// All bases of P_f, by recursion on the last coordinate through its slices.
inline Polymatroid enumerate_bases(const RankTable& f,
                                   std::size_t max_bases = kDefaultMaxBases) {
  std::vector<Vec> out;
  Vec current(f.ground_size(), 0);
  detail::enumerate_into(f, current, out, max_bases);
  return Polymatroid::trusted(f.ground_size(), std::move(out));
}

// Independent enumerator: breadth-first walk over exchange moves a - e_i + e_j
// starting from the greedy basis, testing feasibility against f directly.
inline Polymatroid exchange_closure(const RankTable& f,
                                    std::size_t max_bases = kDefaultMaxBases) {
  const int n = f.ground_size();
  auto feasible = [&f](const Vec& v) {
    std::vector<Coord> sums = detail::subset_sums(v);
    for (Mask m = 0; m <= f.full(); ++m) {
      if (sums[m] > f[m]) return false;
    }
    return sums[f.full()] == f.total();
  };
  std::set<Vec> seen;
  std::deque<Vec> queue;
  Vec start = greedy_basis(f);
  seen.insert(start);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    Vec a = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Vec b = a;
        --b[i];
        ++b[j];
        if (seen.count(b) || !feasible(b)) continue;
        if (seen.size() >= max_bases) {
          throw Error(ErrorKind::kSizeLimitExceeded,
                      "more than " + std::to_string(max_bases) + " bases");
        }
        seen.insert(b);
        queue.push_back(std::move(b));
      }
    }
  }
  return Polymatroid::trusted(n, std::vector<Vec>(seen.begin(), seen.end()));
}

namespace detail {

inline void check_subset(int n, Mask a) {
  if (a & ~full_mask(n)) {
    throw Error(ErrorKind::kInvalidArgument,
                "subset " + subset_text(a) + " is not inside [" + std::to_string(n) + "]");
  }
}

}  // namespace detail

// Rank of P \ A: f restricted to subsets of [n] \ A.
inline RankTable delete_rank(const RankTable& f, Mask a) {
  const int n = f.ground_size();
  detail::check_subset(n, a);
  if (a == f.full()) throw Error(ErrorKind::kFullGroundSet, "deleting all of [n]");
  const Mask keep = f.full() & ~a;
  const int m = n - popcount(a);
  std::vector<Coord> g(std::size_t{1} << m);
  for (Mask t = 0; t < g.size(); ++t) g[t] = f[scatter(t, keep)];
  return RankTable::trusted(m, std::move(g));
}

// Rank of P / A: T -> f(T + A) - f(A) on [n] \ A.
inline RankTable contract_rank(const RankTable& f, Mask a) {
  const int n = f.ground_size();
  detail::check_subset(n, a);
  if (a == f.full()) throw Error(ErrorKind::kFullGroundSet, "contracting all of [n]");
  const Mask keep = f.full() & ~a;
  const int m = n - popcount(a);
  std::vector<Coord> g(std::size_t{1} << m);
  for (Mask t = 0; t < g.size(); ++t) g[t] = f[scatter(t, keep) | a] - f[a];
  return RankTable::trusted(m, std::move(g));
}

// Rank of (P \ A) / B, computed as a deletion followed by a contraction on the
// relabeled ground set.
inline RankTable minor_rank(const RankTable& f, Mask a, Mask b) {
  const int n = f.ground_size();
  detail::check_subset(n, a);
  detail::check_subset(n, b);
  if (a & b) {
    throw Error(ErrorKind::kOverlappingSets,
                subset_text(a) + " and " + subset_text(b) + " intersect");
  }
  if ((a | b) == f.full()) throw Error(ErrorKind::kFullGroundSet, "minor removes all of [n]");
  RankTable deleted = a ? delete_rank(f, a) : f;
  const Mask b_relabeled = gather(b, f.full() & ~a);
  return b_relabeled ? contract_rank(deleted, b_relabeled) : deleted;
}

inline Polymatroid deletion(const Polymatroid& p, Mask a,
                            std::size_t max_bases = kDefaultMaxBases) {
  if (a == 0) return p;
  return enumerate_bases(delete_rank(rank_from_bases(p), a), max_bases);
}

inline Polymatroid contraction(const Polymatroid& p, Mask a,
                               std::size_t max_bases = kDefaultMaxBases) {
  if (a == 0) return p;
  return enumerate_bases(contract_rank(rank_from_bases(p), a), max_bases);
}

inline Polymatroid minor(const Polymatroid& p, Mask a, Mask b,
                         std::size_t max_bases = kDefaultMaxBases) {
  const RankTable f = rank_from_bases(p);
  Polymatroid result = enumerate_bases(minor_rank(f, a, b), max_bases);
#ifndef NDEBUG
  {
    const RankTable contracted = b ? contract_rank(f, b) : f;
    const Mask a_relabeled = gather(a, f.full() & ~b);
    const RankTable other = a_relabeled ? delete_rank(contracted, a_relabeled) : contracted;
    assert(enumerate_bases(other, max_bases) == result);
  }
#endif
  return result;
}

inline Polymatroid dual(const Polymatroid& p) {
  std::vector<Vec> out = p.bases();
  for (Vec& a : out) {
    for (Coord& c : a) c = -c;
  }
  return Polymatroid::trusted(p.ground_size(), std::move(out));
}

inline Polymatroid translate(const Polymatroid& p, std::span<const Coord> c) {
  if (static_cast<int>(c.size()) != p.ground_size()) {
    throw Error(ErrorKind::kInvalidArgument, "translation vector has wrong length");
  }
  std::vector<Vec> out = p.bases();
  for (Vec& a : out) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c[i];
  }
  return Polymatroid::trusted(p.ground_size(), std::move(out));
}

// w(a) = (a_{w(1)}, ..., a_{w(n)}) with `w` a 0-based permutation.
inline Polymatroid permute(const Polymatroid& p, std::span<const int> w) {
  const int n = p.ground_size();
  std::vector<int> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (sorted != identity) {
    throw Error(ErrorKind::kInvalidArgument, "not a permutation of [n]");
  }
  std::vector<Vec> out;
  out.reserve(p.size());
  for (const Vec& a : p.bases()) {
    Vec b(n);
    for (int i = 0; i < n; ++i) b[i] = a[w[i]];
    out.push_back(std::move(b));
  }
  return Polymatroid::trusted(n, std::move(out));
}

// Calls visit(f, P_f) for every submodular table on [n] with f(0) = 0 and
// 0 <= f(I) <= max_rank. Distinct tables give distinct basis sets because
// every submodular table is recovered from its bases. Returns the count.
template <typename Visitor>
std::size_t for_each_small_polymatroid(int n, Coord max_rank, Visitor&& visit,
                                       int max_n = 4) {
  if (n < 1 || n > max_n || max_rank < 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "small polymatroid search needs 1 <= n <= " + std::to_string(max_n) +
                    " and max_rank >= 0");
  }
  const Mask full = full_mask(n);
  std::vector<Coord> f(std::size_t{1} << n, 0);
  std::size_t count = 0;
  std::function<void(Mask)> assign = [&](Mask m) {
    if (m > full) {
      RankTable table = RankTable::trusted(n, f);
      Polymatroid p = enumerate_bases(table);
      ++count;
      visit(table, p);
      return;
    }
    for (Coord v = 0; v <= max_rank; ++v) {
      f[m] = v;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (!contains(m, i)) continue;
        for (int j = i + 1; j < n && ok; ++j) {
          if (!contains(m, j)) continue;
          ok = f[m & ~bit(i)] + f[m & ~bit(j)] >= f[m] + f[m & ~bit(i) & ~bit(j)];
        }
      }
      if (ok) assign(m + 1);
    }
  };
  assign(1);
  return count;
}

inline std::vector<Polymatroid> enumerate_small_polymatroids(int n, Coord max_rank) {
  std::vector<Polymatroid> out;
  for_each_small_polymatroid(n, max_rank,
                             [&out](const RankTable&, const Polymatroid& p) { out.push_back(p); });
  return out;
}

}  // namespace polytutte

#endif  // POLYTUTTE_POLYMATROID_HPP
