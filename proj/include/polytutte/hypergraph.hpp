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

#ifndef POLYTUTTE_HYPERGRAPH_HPP
#define POLYTUTTE_HYPERGRAPH_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "polytutte/bipoly.hpp"
#include "polytutte/polymatroid.hpp"

namespace polytutte {

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[a] = b;
    --components_;
  }

  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t components_;
};

}  // namespace detail

// Hypergraph (V, E): named vertices and an ordered multiset of nonempty
// hyperedges. Hyperedge order fixes the ground-set indexing of its polymatroid.
class Hypergraph {
 public:
  Hypergraph(std::vector<std::string> vertices, std::vector<std::vector<int>> hyperedges)
      : vertices_(std::move(vertices)), hyperedges_(std::move(hyperedges)) {
    if (hyperedges_.empty() || static_cast<int>(hyperedges_.size()) > kMaxGroundSet) {
      throw Error(ErrorKind::kInvalidArgument,
                  "hypergraph needs between 1 and " + std::to_string(kMaxGroundSet) +
                      " hyperedges");
    }
    for (std::size_t e = 0; e < hyperedges_.size(); ++e) {
      auto& edge = hyperedges_[e];
      std::sort(edge.begin(), edge.end());
      edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
      if (edge.empty()) {
        throw Error(ErrorKind::kInvalidArgument,
                    "hyperedge " + std::to_string(e + 1) + " is empty");
      }
      if (edge.front() < 0 || edge.back() >= static_cast<int>(vertices_.size())) {
        throw Error(ErrorKind::kInvalidArgument,
                    "hyperedge " + std::to_string(e + 1) + " names an unknown vertex");
      }
    }
  }

  // Unnamed vertices "v1".."vk".
  static Hypergraph with_vertex_count(int vertex_count,
                                      std::vector<std::vector<int>> hyperedges) {
    std::vector<std::string> names;
    for (int v = 0; v < vertex_count; ++v) names.push_back("v" + std::to_string(v + 1));
    return Hypergraph(std::move(names), std::move(hyperedges));
  }

  static Hypergraph from_names(std::vector<std::string> vertices,
                               const std::vector<std::vector<std::string>>& hyperedges) {
    std::map<std::string, int> index;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (!index.emplace(vertices[v], static_cast<int>(v)).second) {
        throw Error(ErrorKind::kInvalidArgument, "duplicate vertex '" + vertices[v] + "'");
      }
    }
    std::vector<std::vector<int>> edges;
    for (const auto& named : hyperedges) {
      std::vector<int> edge;
      for (const auto& name : named) {
        auto it = index.find(name);
        if (it == index.end()) {
          throw Error(ErrorKind::kInvalidArgument, "unknown vertex '" + name + "'");
        }
        edge.push_back(it->second);
      }
      edges.push_back(std::move(edge));
    }
    return Hypergraph(std::move(vertices), std::move(edges));
  }

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(hyperedges_.size()); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<std::vector<int>>& hyperedges() const noexcept { return hyperedges_; }

  // Number of edges of the bipartite incidence graph.
  int incidence_count() const noexcept {
    int total = 0;
    for (const auto& e : hyperedges_) total += static_cast<int>(e.size());
    return total;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> hyperedges_;
};

// Bipartite incidence graph: E-side nodes 0..|E|-1, V-side nodes 0..|V|-1,
// and one (e, v) edge per incidence v in e.
struct BipartiteIncidence {
  int edge_side = 0;
  int vertex_side = 0;
  std::vector<std::pair<int, int>> edges;
};

inline BipartiteIncidence bipartite(const Hypergraph& h) {
  BipartiteIncidence b;
  b.edge_side = h.edge_count();
  b.vertex_side = h.vertex_count();
  for (int e = 0; e < h.edge_count(); ++e) {
    for (int v : h.hyperedges()[e]) b.edges.emplace_back(e, v);
  }
  return b;
}

// mu(E') = |union E'| - (components of Bip H restricted to E'); mu(0) = 0.
inline Coord mu(const Hypergraph& h, Mask subset) {
  if (subset == 0) return 0;
  const int nv = h.vertex_count();
  detail::DisjointSets sets(static_cast<std::size_t>(nv + h.edge_count()));
  std::vector<char> touched(nv, 0);
  int nodes = 0;
  for (int e = 0; e < h.edge_count(); ++e) {
    if (!contains(subset, e)) continue;
    ++nodes;
    for (int v : h.hyperedges()[e]) {
      if (!touched[v]) {
        touched[v] = 1;
        ++nodes;
      }
      sets.unite(static_cast<std::size_t>(nv + e), static_cast<std::size_t>(v));
    }
  }
  const int untouched_nodes = nv + h.edge_count() - nodes;
  const int covered = static_cast<int>(std::count(touched.begin(), touched.end(), 1));
  const int components = static_cast<int>(sets.components()) - untouched_nodes;
  return covered - components;
}

inline RankTable hypergraph_rank(const Hypergraph& h) {
  const int n = h.edge_count();
  std::vector<Coord> f(std::size_t{1} << n);
  for (Mask m = 0; m < f.size(); ++m) f[m] = mu(h, m);
  return RankTable(n, std::move(f));
}

struct HypertreePolymatroid {
  RankTable rank;
  Polymatroid bases;
};

inline HypertreePolymatroid hypertree_polymatroid(const Hypergraph& h,
                                                  std::size_t max_bases = kDefaultMaxBases) {
  RankTable f = hypergraph_rank(h);
  Polymatroid p = enumerate_bases(f, max_bases);
  return {std::move(f), std::move(p)};
}

namespace detail {

// Connectivity of Bip H after deleting the E-side nodes in `removed`.
inline bool connected_without(const Hypergraph& h, Mask removed) {
  const int nv = h.vertex_count();
  detail::DisjointSets sets(static_cast<std::size_t>(nv + h.edge_count()));
  int removed_count = 0;
  for (int e = 0; e < h.edge_count(); ++e) {
    if (contains(removed, e)) {
      ++removed_count;
      continue;
    }
    for (int v : h.hyperedges()[e]) {
      sets.unite(static_cast<std::size_t>(nv + e), static_cast<std::size_t>(v));
    }
  }
  return static_cast<int>(sets.components()) - removed_count == 1;
}

}  // namespace detail

inline bool bipartite_connected(const Hypergraph& h) {
  return detail::connected_without(h, 0);
}

// Largest k such that deleting any k hyperedge nodes leaves Bip H connected,
// or -1 when Bip H itself is disconnected.
inline int connectivity_profile(const Hypergraph& h) {
  if (!detail::connected_without(h, 0)) return -1;
  const int n = h.edge_count();
  int k_max = 0;
  for (int k = 1; k <= n; ++k) {
    bool all_connected = true;
    for (Mask m = 0; m <= full_mask(n) && all_connected; ++m) {
      if (popcount(m) == k) all_connected = detail::connected_without(h, m);
    }
    if (!all_connected) break;
    k_max = k;
  }
  return k_max;
}

// Sum over unordered pairs of E-nodes of C(shared neighbours, 2).
inline Integer count_four_cycles(const BipartiteIncidence& b) {
  std::vector<std::vector<char>> adjacent(b.edge_side, std::vector<char>(b.vertex_side, 0));
  for (const auto& [e, v] : b.edges) adjacent[e][v] = 1;
  Integer total = 0;
  for (int e = 0; e < b.edge_side; ++e) {
    for (int f = e + 1; f < b.edge_side; ++f) {
      long long shared = 0;
      for (int v = 0; v < b.vertex_side; ++v) shared += adjacent[e][v] && adjacent[f][v];
      total += shared * (shared - 1) / 2;
    }
  }
  return total;
}

}  // namespace polytutte

#endif  // POLYTUTTE_HYPERGRAPH_HPP
