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

#ifndef POLYTUTTE_RECURSION_HPP
#define POLYTUTTE_RECURSION_HPP

#include <cstddef>
#include <functional>
#include <future>
#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "polytutte/bipoly.hpp"
#include "polytutte/polymatroid.hpp"

namespace polytutte {

// Translation-normalized basis set: every coordinate shifted so its minimum
// over P is 0. Polymatroids that differ by a translation share a key.
struct MemoKey {
  int n = 0;
  std::vector<Coord> flat;  // bases in lexicographic order, concatenated

  static MemoKey of(const Polymatroid& p) {
    const int n = p.ground_size();
    Vec shift(n);
    for (int t = 0; t < n; ++t) shift[t] = p.min_coordinate(t);
    MemoKey key;
    key.n = n;
    key.flat.reserve(p.size() * n);
    for (const Vec& a : p.bases()) {
      for (int t = 0; t < n; ++t) key.flat.push_back(a[t] - shift[t]);
    }
    return key;
  }

  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    std::size_t h = boost::hash_range(k.flat.begin(), k.flat.end());
    boost::hash_combine(h, k.n);
    return h;
  }
};

// Bounded least-recently-used map with a mutex around every access. Values
// are exact, so eviction only costs recomputation.
template <typename Key, typename Value, typename Hash>
class LruCache {
 public:
  explicit LruCache(std::size_t capacity) : capacity_(capacity) {}

  std::optional<Value> find(const Key& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  // Inserts unless the key is already present; keeps the first value.
  void insert(const Key& key, const Value& value) {
    if (capacity_ == 0) return;
    std::lock_guard<std::mutex> lock(mutex_);
    if (index_.count(key)) return;
    order_.emplace_front(key, value);
    index_.emplace(key, order_.begin());
    if (index_.size() > capacity_) {
      index_.erase(order_.back().first);
      order_.pop_back();
    }
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return index_.size();
  }

 private:
  using Entry = std::pair<Key, Value>;
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<Entry> order_;
  std::unordered_map<Key, typename std::list<Entry>::iterator, Hash> index_;
};

enum class PivotRule {
  kWidest,  // t maximizing beta_t - alpha_t, smallest t on ties
  kFirst,
  kLast,
};

struct DcOptions {
  PivotRule rule = PivotRule::kWidest;
  // Pivot used at the top level only (0-based); later levels follow `rule`.
  std::optional<int> top_pivot;
  std::size_t memo_capacity = std::size_t{1} << 20;
  // Worker budget for the top-level slice fan-out.
  unsigned jobs = 1;
};

// Deletion-contraction evaluation of the Tutte, interior and exterior
// polynomials over slices of a chosen pivot coordinate.
class DeletionContraction {
 public:
  explicit DeletionContraction(DcOptions options = {})
      : options_(options),
        tutte_cache_(options.memo_capacity),
        interior_cache_(options.memo_capacity),
        exterior_cache_(options.memo_capacity) {}

  BiPoly tutte(const Polymatroid& p) { return evaluate(Kind::kTutte, p, options_.top_pivot); }
  BiPoly interior(const Polymatroid& p) {
    return evaluate(Kind::kInterior, p, options_.top_pivot);
  }
  BiPoly exterior(const Polymatroid& p) {
    return evaluate(Kind::kExterior, p, options_.top_pivot);
  }

  std::size_t cached_entries() const {
    return tutte_cache_.size() + interior_cache_.size() + exterior_cache_.size();
  }

 private:
  enum class Kind { kTutte, kInterior, kExterior };
  using Cache = LruCache<MemoKey, BiPoly, MemoKeyHash>;

  Cache& cache_for(Kind kind) {
    switch (kind) {
      case Kind::kTutte: return tutte_cache_;
      case Kind::kInterior: return interior_cache_;
      case Kind::kExterior: return exterior_cache_;
    }
    return tutte_cache_;
  }

  int choose_pivot(const Polymatroid& p) const {
    const int n = p.ground_size();
    switch (options_.rule) {
      case PivotRule::kFirst: return 0;
      case PivotRule::kLast: return n - 1;
      case PivotRule::kWidest: break;
    }
    int best = 0;
    Coord best_width = -1;
    for (int t = 0; t < n; ++t) {
      const Coord w = slice_range(p, t).width();
      if (w > best_width) {
        best = t;
        best_width = w;
      }
    }
    return best;
  }

  static BiPoly base_case(Kind kind) {
    return kind == Kind::kTutte ? BiPoly::x_plus_y_minus_one() : BiPoly::constant(1);
  }

  BiPoly evaluate(Kind kind, const Polymatroid& p, std::optional<int> forced_pivot,
                  bool top = true) {
    if (p.ground_size() == 1) return base_case(kind);
    const bool use_cache = !forced_pivot.has_value();
    std::optional<MemoKey> key;
    if (use_cache) {
      key = MemoKey::of(p);
      if (auto hit = cache_for(kind).find(*key)) return *hit;
    }
    const int t = forced_pivot ? *forced_pivot : choose_pivot(p);
    if (t < 0 || t >= p.ground_size()) {
      throw Error(ErrorKind::kInvalidArgument, "pivot " + std::to_string(t + 1));
    }
    const SliceRange range = slice_range(p, t);

    std::vector<BiPoly> parts(static_cast<std::size_t>(range.width() + 1));
    auto branch = [&](Coord j) {
      return evaluate(kind, slice(p, t, j), std::nullopt, false);
    };
    if (top && options_.jobs > 1 && parts.size() > 1) {
      // Fan out in batches of `jobs`; results land in slot order.
      for (std::size_t start = 0; start < parts.size(); start += options_.jobs) {
        std::vector<std::future<BiPoly>> batch;
        for (std::size_t k = start; k < std::min(parts.size(), start + options_.jobs); ++k) {
          batch.push_back(std::async(std::launch::async, branch,
                                     range.alpha + static_cast<Coord>(k)));
        }
        for (std::size_t k = 0; k < batch.size(); ++k) parts[start + k] = batch[k].get();
      }
    } else {
      for (std::size_t k = 0; k < parts.size(); ++k) {
        parts[k] = branch(range.alpha + static_cast<Coord>(k));
      }
    }

    BiPoly result = combine(kind, parts);
    if (use_cache) cache_for(kind).insert(*key, result);
    return result;
  }

  // parts[k] is the value on the projected slice j = alpha_t + k.
  static BiPoly combine(Kind kind, const std::vector<BiPoly>& parts) {
    const std::size_t last = parts.size() - 1;
    BiPoly result;
    switch (kind) {
      case Kind::kTutte:
        if (last == 0) return BiPoly::x_plus_y_minus_one() * parts[0];
        result = parts[0].shifted(1, 0) + parts[last].shifted(0, 1);
        for (std::size_t k = 1; k < last; ++k) result += parts[k];
        return result;
      case Kind::kInterior:
        for (std::size_t k = 1; k <= last; ++k) result += parts[k];
        return parts[0] + result.shifted(1, 0);
      case Kind::kExterior:
        for (std::size_t k = 0; k < last; ++k) result += parts[k];
        return parts[last] + result.shifted(0, 1);
    }
    return result;
  }

  DcOptions options_;
  Cache tutte_cache_;
  Cache interior_cache_;
  Cache exterior_cache_;
};

inline BiPoly tutte_dc(const Polymatroid& p, DcOptions options = {}) {
  return DeletionContraction(options).tutte(p);
}

inline BiPoly interior_dc(const Polymatroid& p, DcOptions options = {}) {
  return DeletionContraction(options).interior(p);
}

inline BiPoly exterior_dc(const Polymatroid& p, DcOptions options = {}) {
  return DeletionContraction(options).exterior(p);
}

// Matroid-style form of a polymatroid Tutte polynomial on n elements with rank
// parameter d: each term c x^i y^j becomes c x^i y^j (x + y - xy)^{n-i-j}, and
// the sum is multiplied by x^{d-n} y^{-d}. The result is a Laurent polynomial.
inline BiPoly matroid_form(const BiPoly& tutte, int n, int d) {
  const BiPoly s = BiPoly::x() + BiPoly::y() - BiPoly::monomial(1, 1, 1);
  std::vector<BiPoly> powers{BiPoly::constant(1)};
  BiPoly result;
  for (const auto& [e, c] : tutte.terms()) {
    if (e.x < 0 || e.y < 0 || e.total() > n) {
      throw Error(ErrorKind::kDegreeExceedsN,
                  "term x^" + std::to_string(e.x) + "*y^" + std::to_string(e.y) +
                      " exceeds degree " + std::to_string(n));
    }
    const int k = n - e.total();
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * s);
    result += powers[k].shifted(e.x, e.y) * c;
  }
  return result.shifted(d - n, -d);
}

template <typename TutteFn>
BiPoly matroid_form(const Polymatroid& p, std::optional<int> d, TutteFn&& tutte_fn) {
  const int rank = d ? *d : static_cast<int>(p.rank());
  return matroid_form(tutte_fn(p), p.ground_size(), rank);
}

// True when f has unit increments (0 or 1 per added element), which together
// with submodularity makes it a matroid rank function.
inline bool is_matroid_rank(const RankTable& f) {
  for (Mask m = 0; m <= f.full(); ++m) {
    for (int i = 0; i < f.ground_size(); ++i) {
      if (contains(m, i)) continue;
      const Coord step = f[m | bit(i)] - f[m];
      if (step != 0 && step != 1) return false;
    }
  }
  return true;
}

// Corank-nullity expansion sum_S (x-1)^{r(E)-r(S)} (y-1)^{|S|-r(S)}.
inline BiPoly classical_tutte(const RankTable& m) {
  if (!is_matroid_rank(m)) {
    throw Error(ErrorKind::kNotAMatroid, "rank increments are not all 0 or 1");
  }
  std::map<std::pair<int, int>, Integer> counts;
  const Coord total = m.total();
  for (Mask s = 0; s <= m.full(); ++s) {
    const int corank = static_cast<int>(total - m[s]);
    const int nullity = popcount(s) - static_cast<int>(m[s]);
    counts[{corank, nullity}] += 1;
  }
  const BiPoly xm1 = BiPoly::x() - BiPoly::constant(1);
  const BiPoly ym1 = BiPoly::y() - BiPoly::constant(1);
  BiPoly result;
  for (const auto& [key, count] : counts) {
    result += xm1.pow(key.first) * ym1.pow(key.second) * count;
  }
  return result;
}

}  // namespace polytutte

#endif  // POLYTUTTE_RECURSION_HPP
