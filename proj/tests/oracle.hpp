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


// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the plain data types.

#ifndef POLYTUTTE_TESTS_ORACLE_HPP
#define POLYTUTTE_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Table = std::vector<std::int64_t>;  // indexed by bitmask
using Terms = std::map<std::pair<int, int>, long long>;

inline std::int64_t subset_sum(const Vec& a, unsigned mask) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mask >> i & 1u) s += a[i];
  }
  return s;
}

// All pairs (I, J).
inline bool submodular(int n, const Table& f) {
  const unsigned full = (1u << n) - 1;
  if (f[0] != 0) return false;
  for (unsigned i = 0; i <= full; ++i) {
    for (unsigned j = 0; j <= full; ++j) {
      if (f[i] + f[j] < f[i | j] + f[i & j]) return false;
    }
  }
  return true;
}

// Every integer point of a generous box satisfying a(I) <= f(I), a([n]) = f([n]).
inline std::set<Vec> bases(int n, const Table& f) {
  const unsigned full = (1u << n) - 1;
  std::int64_t bound = 0;
  for (auto v : f) bound = std::max(bound, v < 0 ? -v : v);
  bound = 2 * bound + 1;
  std::set<Vec> out;
  Vec a(n, -bound);
  for (;;) {
    bool ok = subset_sum(a, full) == f[full];
    for (unsigned m = 1; m <= full && ok; ++m) ok = subset_sum(a, m) <= f[m];
    if (ok) out.insert(a);
    int k = 0;
    while (k < n && a[k] == bound) a[k++] = -bound;
    if (k == n) break;
    ++a[k];
  }
  return out;
}

inline Table rank(int n, const std::set<Vec>& p) {
  Table f(std::size_t{1} << n, 0);
  for (unsigned m = 1; m < f.size(); ++m) {
    bool first = true;
    for (const Vec& a : p) {
      const auto s = subset_sum(a, m);
      if (first || s > f[m]) f[m] = s;
      first = false;
    }
  }
  return f;
}

// The Exchange Axiom read literally.
inline bool exchange_axiom(const std::set<Vec>& p) {
  for (const Vec& a : p) {
    for (const Vec& b : p) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= b[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < a.size() && !found; ++j) {
          if (a[j] >= b[j]) continue;
          Vec a2 = a;
          Vec b2 = b;
          --a2[i];
          ++a2[j];
          ++b2[i];
          --b2[j];
          found = p.count(a2) && p.count(b2);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

struct Activity {
  unsigned internal = 0;
  unsigned external = 0;
};

inline Activity activity(const std::set<Vec>& p, const Vec& a) {
  Activity r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool in = true;
    bool ex = true;
    for (std::size_t j = 0; j < i; ++j) {
      Vec b = a;
      --b[i];
      ++b[j];
      if (p.count(b)) in = false;
      Vec c = a;
      ++c[i];
      --c[j];
      if (p.count(c)) ex = false;
    }
    if (in) r.internal |= 1u << i;
    if (ex) r.external |= 1u << i;
  }
  return r;
}

inline long long choose(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// sum x^oi y^oe (x+y-1)^ie with the trinomial expansion written out.
inline Terms tutte(const std::set<Vec>& p) {
  Terms t;
  for (const Vec& a : p) {
    const Activity act = activity(p, a);
    const int oi = __builtin_popcount(act.internal & ~act.external);
    const int oe = __builtin_popcount(act.external & ~act.internal);
    const int ie = __builtin_popcount(act.internal & act.external);
    for (int u = 0; u <= ie; ++u) {
      for (int v = 0; u + v <= ie; ++v) {
        const int w = ie - u - v;
        long long c = choose(ie, u) * choose(ie - u, v);
        if (w % 2) c = -c;
        t[{oi + u, oe + v}] += c;
      }
    }
  }
  for (auto it = t.begin(); it != t.end();) it = it->second == 0 ? t.erase(it) : std::next(it);
  return t;
}

inline Terms interior(const std::set<Vec>& p) {
  Terms t;
  for (const Vec& a : p) {
    const int n = static_cast<int>(a.size());
    t[{n - __builtin_popcount(activity(p, a).internal), 0}] += 1;
  }
  return t;
}

inline Terms exterior(const std::set<Vec>& p) {
  Terms t;
  for (const Vec& a : p) {
    const int n = static_cast<int>(a.size());
    t[{0, n - __builtin_popcount(activity(p, a).external)}] += 1;
  }
  return t;
}

}  // namespace oracle

#endif  // POLYTUTTE_TESTS_ORACLE_HPP
