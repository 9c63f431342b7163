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

// Seeded generators for randomized corpora. A seed fully determines every
// generated object.

#ifndef POLYTUTTE_RANDOM_HPP
#define POLYTUTTE_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "polytutte/hypergraph.hpp"
#include "polytutte/polymatroid.hpp"

namespace polytutte {

using Rng = std::mt19937_64;

inline Coord uniform(Rng& rng, Coord lo, Coord hi) {
  return std::uniform_int_distribution<Coord>(lo, hi)(rng);
}

struct RandomTableParams {
  int items = 4;          // size of the coverage universe
  Coord max_weight = 2;   // item weights drawn from [1, max_weight]
  Coord max_shift = 1;    // modular shift coordinates drawn from [-s, s]
  bool truncate = true;   // cap at a random level below the full value
};

// Weighted coverage function, optionally truncated at a random level, plus a
// random modular term. Coverage and its truncations are submodular, and adding
// a modular term translates the polymatroid, so the result is always valid.
inline RankTable random_rank_table(Rng& rng, int n, const RandomTableParams& params = {}) {
  std::vector<Coord> weight(params.items);
  for (Coord& w : weight) w = uniform(rng, 1, params.max_weight);
  std::vector<std::uint32_t> covers(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int u = 0; u < params.items; ++u) {
      if (uniform(rng, 0, 2) == 0) covers[i] |= 1u << u;
    }
  }
  std::vector<Coord> f(std::size_t{1} << n, 0);
  for (Mask m = 1; m < f.size(); ++m) {
    std::uint32_t covered = 0;
    for (int i = 0; i < n; ++i) {
      if (contains(m, i)) covered |= covers[i];
    }
    for (int u = 0; u < params.items; ++u) {
      if ((covered >> u) & 1u) f[m] += weight[u];
    }
  }
  if (params.truncate && f.back() > 0) {
    const Coord cap = uniform(rng, 1, f.back());
    for (Coord& v : f) v = std::min(v, cap);
  }
  if (params.max_shift > 0) {
    Vec shift(n);
    for (Coord& s : shift) s = uniform(rng, -params.max_shift, params.max_shift);
    for (Mask m = 1; m < f.size(); ++m) {
      for (int i = 0; i < n; ++i) {
        if (contains(m, i)) f[m] += shift[i];
      }
    }
  }
  return RankTable(n, std::move(f));
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

inline Vec random_translation(Rng& rng, int n, Coord bound = 3) {
  Vec c(n);
  for (Coord& v : c) v = uniform(rng, -bound, bound);
  return c;
}

// Random subset of [n] avoiding `exclude`; may be empty.
inline Mask random_subset(Rng& rng, int n, Mask exclude = 0) {
  Mask m = 0;
  for (int i = 0; i < n; ++i) {
    if (!contains(exclude, i) && uniform(rng, 0, 1)) m |= bit(i);
  }
  return m;
}

// {a in P : lo <= a <= hi} for a random box. Box restrictions of a polymatroid
// are polymatroids with the same total rank; the caller re-validates anyway.
inline std::optional<Polymatroid> random_box_subset(Rng& rng, const Polymatroid& p) {
  const int n = p.ground_size();
  Vec lo(n);
  Vec hi(n);
  for (int t = 0; t < n; ++t) {
    const Coord a = p.min_coordinate(t);
    const Coord b = p.max_coordinate(t);
    lo[t] = uniform(rng, a, b);
    hi[t] = uniform(rng, lo[t], b);
    if (uniform(rng, 0, 2) == 0) {
      lo[t] = a;
      hi[t] = b;
    }
  }
  std::vector<Vec> kept;
  for (const Vec& a : p.bases()) {
    bool inside = true;
    for (int t = 0; t < n && inside; ++t) inside = lo[t] <= a[t] && a[t] <= hi[t];
    if (inside) kept.push_back(a);
  }
  if (kept.empty()) return std::nullopt;
  try {
    return validate_basis_set(n, std::move(kept));
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Random hypergraph with 1..max_vertices vertices and 1..max_edges nonempty
// hyperedges (repeats allowed).
inline Hypergraph random_hypergraph(Rng& rng, int max_vertices, int max_edges) {
  const int nv = static_cast<int>(uniform(rng, 1, max_vertices));
  const int ne = static_cast<int>(uniform(rng, 1, max_edges));
  std::vector<std::vector<int>> edges(ne);
  for (auto& e : edges) {
    while (e.empty()) {
      for (int v = 0; v < nv; ++v) {
        if (uniform(rng, 0, 1)) e.push_back(v);
      }
    }
  }
  return Hypergraph::with_vertex_count(nv, std::move(edges));
}

inline Hypergraph random_connected_hypergraph(Rng& rng, int max_vertices, int max_edges) {
  for (;;) {
    Hypergraph h = random_hypergraph(rng, max_vertices, max_edges);
    if (bipartite_connected(h)) return h;
  }
}

// Deletes random incidences of Bip H while keeping every hyperedge nonempty;
// the vertex side is unchanged.
inline Hypergraph random_bipartite_subgraph(Rng& rng, const Hypergraph& h) {
  std::vector<std::vector<int>> edges = h.hyperedges();
  for (auto& e : edges) {
    std::vector<int> kept;
    for (int v : e) {
      if (uniform(rng, 0, 2) != 0) kept.push_back(v);
    }
    if (kept.empty()) kept.push_back(e[static_cast<std::size_t>(uniform(rng, 0, e.size() - 1))]);
    e = std::move(kept);
  }
  return Hypergraph(h.vertices(), std::move(edges));
}

}  // namespace polytutte

#endif  // POLYTUTTE_RANDOM_HPP
