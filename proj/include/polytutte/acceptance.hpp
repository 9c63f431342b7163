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

// Reproducibility harness. Each criterion runs a family of exact checks over a
// seeded corpus and reports one verdict; a seed fully determines the corpus.

#ifndef POLYTUTTE_ACCEPTANCE_HPP
#define POLYTUTTE_ACCEPTANCE_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polytutte/activity.hpp"
#include "polytutte/bipoly.hpp"
#include "polytutte/config.hpp"
#include "polytutte/formulas.hpp"
#include "polytutte/hypergraph.hpp"
#include "polytutte/polymatroid.hpp"
#include "polytutte/random.hpp"
#include "polytutte/recursion.hpp"

namespace polytutte::acceptance {

// Criterion 1 also requires the whole method-equivalence sweep to finish in
// this many seconds.
inline constexpr double kRuntimeBudgetSeconds = 120.0;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  int exhaustive_max_n = 3;
  Coord exhaustive_max_rank = 3;
  int random_polymatroids = 200;
  int random_max_n = 5;
  int random_pairs = 100;        // per monotonicity relation
  int random_hypergraphs = 100;  // connected ones, criteria 7 and 9
  int hypergraph_max_vertices = 5;
  int hypergraph_max_edges = 5;
  int invariance_samples = 5;  // translations and permutations per instance
  int search_max_n = 3;
  Coord search_max_rank = 4;
  unsigned jobs = 1;
};

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string detail;
  double seconds = 0;
};

struct CorpusEntry {
  std::string label;
  RankTable rank;
  Polymatroid bases;
};

using Corpus = std::vector<CorpusEntry>;

namespace detail {

// Counts checks and keeps the first few failure descriptions.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) {
      if (!first_.empty()) first_ += "; ";
      first_ += describe();
    }
  }

  void note(const std::string& text) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += text;
  }

  std::size_t checks() const noexcept { return checks_; }
  std::size_t failures() const noexcept { return failures_; }

  Result finish(int id, std::string name, double seconds, bool extra_ok = true) const {
    Result r;
    r.id = id;
    r.name = std::move(name);
    r.checks = checks_;
    r.failures = failures_;
    r.passed = failures_ == 0 && checks_ > 0 && extra_ok;
    r.detail = failures_ == 0 ? notes_ : first_ + (notes_.empty() ? "" : "; " + notes_);
    r.seconds = seconds;
    return r;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::string notes_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Independent stream per criterion, derived from the run seed.
inline Rng stream(std::uint64_t seed, int salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return Rng(seq);
}

inline std::string differ(const std::string& what, const BiPoly& a, const BiPoly& b) {
  return what + ": " + to_string(a) + " vs " + to_string(b);
}

inline bool coefficientwise_le(const BiPoly& p, const BiPoly& q) {
  return compare_coefficientwise(p, q).holds;
}

inline bool closed_under_union_intersection(const TightFamily& family) {
  for (Mask a : family.sets) {
    for (Mask b : family.sets) {
      if (!family.contains(a | b) || !family.contains(a & b)) return false;
    }
  }
  return true;
}

// Some exchange a - e_k + e_j (j in I, k outside I) stays in P.
inline bool has_exchange_step(const Polymatroid& p, const Vec& a, Mask subset) {
  const int n = p.ground_size();
  Vec b = a;
  for (int j = 0; j < n; ++j) {
    if (!contains(subset, j)) continue;
    for (int k = 0; k < n; ++k) {
      if (contains(subset, k)) continue;
      ++b[j];
      --b[k];
      const bool found = p.contains(b);
      --b[j];
      ++b[k];
      if (found) return true;
    }
  }
  return false;
}

inline RankTable uniform_matroid_rank(int n, int d) {
  std::vector<Coord> f(std::size_t{1} << n);
  for (Mask m = 0; m < f.size(); ++m) f[m] = std::min(popcount(m), d);
  return RankTable(n, std::move(f));
}

// r(S) = |V| - (components of (V, S)) for an edge list on vertices 0..v-1.
inline RankTable graphic_rank(int v, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  std::vector<Coord> f(std::size_t{1} << n);
  for (Mask m = 0; m < f.size(); ++m) {
    polytutte::detail::DisjointSets sets(static_cast<std::size_t>(v));
    for (int e = 0; e < n; ++e) {
      if (contains(m, e)) {
        sets.unite(static_cast<std::size_t>(edges[e].first),
                   static_cast<std::size_t>(edges[e].second));
      }
    }
    f[m] = v - static_cast<Coord>(sets.components());
  }
  return RankTable(n, std::move(f));
}

struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Connected multigraphs (loops and parallel edges allowed) with 1..max_edges
// edges, one per multiset of vertex pairs on 1..edges+1 labelled vertices.
inline std::vector<Multigraph> connected_multigraphs(int max_edges) {
  std::vector<Multigraph> out;
  for (int m = 1; m <= max_edges; ++m) {
    for (int v = 1; v <= m + 1; ++v) {
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < v; ++a) {
        for (int b = a; b < v; ++b) pairs.emplace_back(a, b);
      }
      std::vector<std::size_t> pick(m, 0);
      std::function<void(int, std::size_t)> rec = [&](int slot, std::size_t from) {
        if (slot == m) {
          Multigraph g{v, {}};
          polytutte::detail::DisjointSets sets(static_cast<std::size_t>(v));
          for (std::size_t k : pick) {
            g.edges.push_back(pairs[k]);
            sets.unite(static_cast<std::size_t>(pairs[k].first),
                       static_cast<std::size_t>(pairs[k].second));
          }
          if (sets.components() == 1) out.push_back(std::move(g));
          return;
        }
        for (std::size_t k = from; k < pairs.size(); ++k) {
          pick[slot] = k;
          rec(slot + 1, k);
        }
      };
      rec(0, 0);
    }
  }
  return out;
}

inline RandomTableParams random_params(Rng& rng) {
  RandomTableParams params;
  params.items = static_cast<int>(uniform(rng, 1, 6));
  params.max_weight = uniform(rng, 1, 3);
  params.max_shift = uniform(rng, 0, 2);
  params.truncate = uniform(rng, 0, 1) == 1;
  return params;
}

}  // namespace detail

// Exhaustive small family followed by seeded random polymatroids.
inline Corpus build_corpus(const Options& options) {
  Corpus corpus;
  for (int n = 1; n <= options.exhaustive_max_n; ++n) {
    std::size_t k = 0;
    for_each_small_polymatroid(n, options.exhaustive_max_rank,
                               [&](const RankTable& f, const Polymatroid& p) {
                                 corpus.push_back({"exhaustive n=" + std::to_string(n) +
                                                       " #" + std::to_string(++k),
                                                   f, p});
                               });
  }
  Rng rng = detail::stream(options.seed, 0);
  for (int k = 0; k < options.random_polymatroids; ++k) {
    const int n = static_cast<int>(uniform(rng, 1, options.random_max_n));
    RankTable f = random_rank_table(rng, n, detail::random_params(rng));
    Polymatroid p = enumerate_bases(f);
    corpus.push_back({"random #" + std::to_string(k + 1), std::move(f), std::move(p)});
  }
  return corpus;
}

inline std::size_t exhaustive_count(const Corpus& corpus) {
  std::size_t k = 0;
  while (k < corpus.size() && corpus[k].label.rfind("exhaustive", 0) == 0) ++k;
  return k;
}

// Criterion 1: direct enumeration and slice deletion-contraction agree.
inline Result method_equivalence(const Corpus& corpus, const Options& options) {
  detail::Stopwatch clock;
  detail::Tally tally;
  DcOptions dc;
  dc.jobs = options.jobs;
  DeletionContraction widest(dc);
  const std::size_t exhaustive = exhaustive_count(corpus);
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto& entry = corpus[k];
    const Polymatroid& p = entry.bases;
    const BiPoly t = tutte_direct(p);
    const BiPoly i = interior_direct(p);
    const BiPoly x = exterior_direct(p);
    const BiPoly t_dc = widest.tutte(p);
    tally.check(t == t_dc, [&] { return detail::differ(entry.label + " tutte", t, t_dc); });
    const BiPoly i_dc = widest.interior(p);
    tally.check(i == i_dc, [&] { return detail::differ(entry.label + " interior", i, i_dc); });
    const BiPoly x_dc = widest.exterior(p);
    tally.check(x == x_dc, [&] { return detail::differ(entry.label + " exterior", x, x_dc); });
    if (k < exhaustive) {
      // Every forced top-level pivot, then the first-coordinate rule below it.
      for (int t0 = 0; t0 < p.ground_size(); ++t0) {
        DcOptions forced;
        forced.rule = PivotRule::kFirst;
        forced.top_pivot = t0;
        const BiPoly other = tutte_dc(p, forced);
        tally.check(t == other, [&] {
          return detail::differ(entry.label + " pivot " + std::to_string(t0 + 1), t, other);
        });
      }
    }
  }
  const double seconds = clock.seconds();
  tally.note(std::to_string(corpus.size()) + " polymatroids");
  return tally.finish(1, "method equivalence", seconds, seconds < kRuntimeBudgetSeconds);
}

// Criterion 2: every closed-form coefficient formula against extraction.
inline Result coefficient_formulas(const Corpus& corpus) {
  detail::Stopwatch clock;
  detail::Tally tally;
  for (const auto& entry : corpus) {
    const CoefficientReport report = coefficient_report(entry.rank, tutte_direct(entry.bases));
    for (const auto& row : report) {
      tally.check(row.match, [&] {
        return entry.label + " " + row.formula + ": predicted " + row.predicted.str() +
               ", extracted " + row.extracted.str();
      });
    }
  }
  return tally.finish(2, "coefficient formulas", clock.seconds());
}

// Criterion 3: translation, permutation, duality, divisibility, T(1,1) = |P|
// and the reversal identities for I and X.
inline Result invariances(const Corpus& corpus, const Options& options) {
  detail::Stopwatch clock;
  detail::Tally tally;
  Rng rng = detail::stream(options.seed, 3);
  for (const auto& entry : corpus) {
    const Polymatroid& p = entry.bases;
    const int n = p.ground_size();
    const BiPoly t = tutte_direct(p);
    for (int s = 0; s < options.invariance_samples; ++s) {
      const Vec c = random_translation(rng, n);
      const BiPoly moved = tutte_direct(translate(p, c));
      tally.check(t == moved, [&] {
        return detail::differ(entry.label + " translate " + vec_text(c), t, moved);
      });
      const std::vector<int> w = random_permutation(rng, n);
      const BiPoly permuted = tutte_direct(permute(p, w));
      tally.check(t == permuted, [&] {
        return detail::differ(entry.label + " permute", t, permuted);
      });
    }
    const BiPoly dual_t = swap_variables(tutte_direct(dual(p)));
    tally.check(t == dual_t, [&] { return detail::differ(entry.label + " duality", t, dual_t); });
    tally.check(divisible_by_x_plus_y_minus_1(t),
                [&] { return entry.label + " not divisible by x+y-1: " + to_string(t); });
    tally.check(t.value_at_one() == Integer(p.size()), [&] {
      return entry.label + " T(1,1)=" + t.value_at_one().str() + " but |P|=" +
             std::to_string(p.size());
    });
    const BiPoly i = interior_direct(p);
    const BiPoly x = exterior_direct(p);
    const BiPoly i_rev = reversed(at_one(t, Axis::kY), Axis::kX, n);
    const BiPoly x_rev = reversed(at_one(t, Axis::kX), Axis::kY, n);
    tally.check(i == i_rev, [&] { return detail::differ(entry.label + " interior", i, i_rev); });
    tally.check(x == x_rev, [&] { return detail::differ(entry.label + " exterior", x, x_rev); });
    const BiPoly i_dual = interior_direct(dual(p));
    tally.check(x == swap_variables(i_dual),
                [&] { return detail::differ(entry.label + " I(-P) vs X(P)", i_dual, x); });
  }
  return tally.finish(3, "invariances", clock.seconds());
}

// Criterion 4: matroid form of uniform and graphic matroids equals the
// corank-nullity Tutte polynomial.
inline Result matroid_bridge() {
  detail::Stopwatch clock;
  detail::Tally tally;
  auto check = [&tally](const std::string& label, const RankTable& r) {
    const Polymatroid p = enumerate_bases(r);
    const BiPoly lhs = matroid_form(tutte_dc(p), r.ground_size(), static_cast<int>(r.total()));
    const BiPoly rhs = classical_tutte(r);
    tally.check(lhs == rhs, [&] { return detail::differ(label, lhs, rhs); });
  };
  std::size_t uniform_count = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= n; ++d) {
      check("U(" + std::to_string(d) + "," + std::to_string(n) + ")",
            detail::uniform_matroid_rank(n, d));
      ++uniform_count;
    }
  }
  const auto graphs = detail::connected_multigraphs(4);
  for (const auto& g : graphs) {
    std::string label = "graph v=" + std::to_string(g.vertices) + " edges";
    for (const auto& [a, b] : g.edges) {
      label += " " + std::to_string(a + 1) + "-" + std::to_string(b + 1);
    }
    check(label, detail::graphic_rank(g.vertices, g.edges));
  }
  tally.note(std::to_string(uniform_count) + " uniform, " + std::to_string(graphs.size()) +
             " graphic");
  return tally.finish(4, "matroid bridge", clock.seconds());
}

// Criterion 5: I and X are coefficientwise monotone under subsets, minors and
// bipartite subgraphs.
inline Result monotonicity(const Corpus& corpus, const Options& options) {
  detail::Stopwatch clock;
  detail::Tally tally;
  Rng rng = detail::stream(options.seed, 5);
  const std::size_t first_random = exhaustive_count(corpus);
  auto pick = [&]() -> const CorpusEntry& {
    const auto k = static_cast<std::size_t>(
        uniform(rng, static_cast<Coord>(first_random), static_cast<Coord>(corpus.size() - 1)));
    return corpus[k];
  };
  auto compare = [&](const std::string& label, const Polymatroid& small,
                     const Polymatroid& big) {
    const BiPoly i_small = interior_direct(small);
    const BiPoly i_big = interior_direct(big);
    tally.check(detail::coefficientwise_le(i_small, i_big),
                [&] { return detail::differ(label + " I", i_small, i_big); });
    const BiPoly x_small = exterior_direct(small);
    const BiPoly x_big = exterior_direct(big);
    tally.check(detail::coefficientwise_le(x_small, x_big),
                [&] { return detail::differ(label + " X", x_small, x_big); });
  };

  int subsets = 0;
  for (int attempt = 0; subsets < options.random_pairs && attempt < 100 * options.random_pairs;
       ++attempt) {
    const CorpusEntry& entry = pick();
    const auto sub = random_box_subset(rng, entry.bases);
    if (!sub || sub->size() == entry.bases.size()) continue;
    tally.check(sub->is_subset_of(entry.bases), [&] { return entry.label + " box not subset"; });
    compare(entry.label + " subset", *sub, entry.bases);
    ++subsets;
  }

  int minors = 0;
  for (int attempt = 0; minors < options.random_pairs && attempt < 100 * options.random_pairs;
       ++attempt) {
    const CorpusEntry& entry = pick();
    const int n = entry.bases.ground_size();
    if (n < 2) continue;
    const Mask a = random_subset(rng, n);
    const Mask b = random_subset(rng, n, a);
    if ((a | b) == full_mask(n) || (a | b) == 0) continue;
    compare(entry.label + " minor A=" + subset_text(a) + " B=" + subset_text(b),
            minor(entry.bases, a, b), entry.bases);
    ++minors;
  }

  int subgraphs = 0;
  for (; subgraphs < options.random_pairs; ++subgraphs) {
    const Hypergraph h =
        random_hypergraph(rng, options.hypergraph_max_vertices, options.hypergraph_max_edges);
    Hypergraph sub = random_bipartite_subgraph(rng, h);
    if (sub.edge_count() > 1 && uniform(rng, 0, 1)) {
      // Also drop some hyperedge nodes.
      std::vector<std::vector<int>> kept;
      for (const auto& e : sub.hyperedges()) {
        if (uniform(rng, 0, 2) != 0) kept.push_back(e);
      }
      if (kept.empty()) kept.push_back(sub.hyperedges().front());
      sub = Hypergraph(sub.vertices(), std::move(kept));
    }
    compare("hypergraph #" + std::to_string(subgraphs + 1) + " subgraph",
            hypertree_polymatroid(sub).bases, hypertree_polymatroid(h).bases);
  }
  tally.note(std::to_string(subsets) + " subset pairs, " + std::to_string(minors) +
             " minors, " + std::to_string(subgraphs) + " subgraph pairs");
  const bool enough = subsets >= options.random_pairs && minors >= options.random_pairs;
  return tally.finish(5, "monotonicity of I and X", clock.seconds(), enough);
}

// Polynomials quoted for the non-monotonicity example: hypergraph H (11
// bases), H' with P_{H'} inside P_H (2 bases), and H'' = H \ {1}.
inline const char* const kTutteH = "x^3 + 3*x^2*y + 3*x*y^2 + y^3 + 2*x^2 + 3*x*y + y^2 - x - 2";
inline const char* const kTutteHPrime =
    "x^3 + 3*x^2*y + 3*x*y^2 + y^3 - 2*x^2 - 4*x*y - 2*y^2 + x + y";
inline const char* const kTutteHDoublePrime = "x^2 + 2*x*y + y^2 - x - y";

// Criterion 6: the Tutte polynomial itself is not monotone.
inline Result non_monotonicity(const Corpus& corpus, const Options& options) {
  detail::Stopwatch clock;
  detail::Tally tally;
  const BiPoly th = parse_bipoly(kTutteH);
  const BiPoly thp = parse_bipoly(kTutteHPrime);
  const BiPoly thpp = parse_bipoly(kTutteHDoublePrime);

  const auto matches =
      counterexample_search({th, thp, thpp}, options.search_max_n, options.search_max_rank);
  std::vector<const SearchMatch*> by_target[3];
  for (const auto& m : matches) by_target[m.target].push_back(&m);
  tally.check(!by_target[2].empty(), [] { return std::string("no match for T_H''"); });

  // Four strict inequalities, evaluated on the located realizations.
  for (const SearchMatch* h : by_target[0]) {
    const BiPoly t = tutte_direct(h->polymatroid);
    tally.check(h->polymatroid.size() == 11,
                [&] { return "T_H match has " + std::to_string(h->polymatroid.size()) + " bases"; });
    for (const SearchMatch* hp : by_target[1]) {
      const BiPoly tp = tutte_direct(hp->polymatroid);
      tally.check(hp->polymatroid.size() == 2, [&] {
        return "T_H' match has " + std::to_string(hp->polymatroid.size()) + " bases";
      });
      tally.check(tp.coeff(1, 0) > t.coeff(1, 0), [] { return std::string("x: H' <= H"); });
      tally.check(tp.coeff(0, 1) > t.coeff(0, 1), [] { return std::string("y: H' <= H"); });
      tally.check(tp.coeff(0, 0) > t.coeff(0, 0), [] { return std::string("1: H' <= H"); });
    }
    for (const SearchMatch* hpp : by_target[2]) {
      const BiPoly tpp = tutte_direct(hpp->polymatroid);
      tally.check(tpp.coeff(0, 0) > t.coeff(0, 0), [] { return std::string("1: H'' <= H"); });
    }
  }
  std::size_t nested = 0;
  for (const SearchMatch* h : by_target[0]) {
    for (const SearchMatch* hp : by_target[1]) nested += hp->polymatroid.is_subset_of(h->polymatroid);
  }

  // Independent subset pair with a strictly larger Tutte coefficient.
  Rng rng = detail::stream(options.seed, 6);
  std::string witness;
  for (std::size_t attempt = 0; witness.empty() && attempt < 20 * corpus.size(); ++attempt) {
    const auto& entry = corpus[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<Coord>(corpus.size() - 1)))];
    const auto sub = random_box_subset(rng, entry.bases);
    if (!sub || sub->size() == entry.bases.size()) continue;
    const auto cmp = compare_coefficientwise(tutte_direct(*sub), tutte_direct(entry.bases));
    if (!cmp.holds) {
      const std::string term = polytutte::detail::monomial_text(*cmp.witness);
      witness = entry.label + " subset of " + std::to_string(sub->size()) + " bases at " +
                (term.empty() ? "1" : term) + ": " + cmp.lhs.str() + " > " + cmp.rhs.str();
    }
  }
  tally.check(!witness.empty(), [] { return std::string("no increasing subset pair found"); });

  // Matroid-form identities for the quoted polynomials (n = 3, 3, 2; d = 4).
  const BiPoly mh = matroid_form(th, 3, 4);
  const BiPoly mhp = matroid_form(thp, 3, 4);
  const BiPoly mhpp = matroid_form(thpp, 2, 4);
  const BiPoly quoted_difference =
      parse_bipoly("2*x^4*y^-1 - 8*x^4*y^-2 - 7*x^3*y^-1 + 11*x^3*y^-2 + 6*x^4*y^-3 + 5*x^2*y^-1");
  const BiPoly quoted_gap = parse_bipoly("4*x^2 + 7*x*y + 3*y^2 - 2*x - y - 2");
  tally.check(th - thp == quoted_gap,
              [&] { return detail::differ("T_H - T_H'", th - thp, quoted_gap); });
  tally.check(mh - mhp == quoted_difference,
              [&] { return detail::differ("matroid form difference", mh - mhp, quoted_difference); });
  tally.check(mhpp == parse_bipoly("x^4*y^-3 + x^3*y^-2"),
              [&] { return "matroid form of T_H'': " + to_string(mhpp); });
  tally.check(mh.coeff(4, -2) == -7 && mhpp.coeff(4, -2) == 0,
              [] { return std::string("x^4 y^-2 coefficients"); });
  tally.check(mhp.coeff(4, -2) > mh.coeff(4, -2) && mhpp.coeff(3, -1) > mh.coeff(3, -1),
              [] { return std::string("matroid-form strict inequalities"); });

  tally.note("matches H=" + std::to_string(by_target[0].size()) +
             " H'=" + std::to_string(by_target[1].size()) +
             " H''=" + std::to_string(by_target[2].size()) + ", nested H'<H pairs " +
             std::to_string(nested) + ", witness " + witness);
  return tally.finish(6, "non-monotonicity of T", clock.seconds());
}

// Criterion 7: k-connectivity of Bip H against exterior coefficients at the
// binomial ceiling, plus the uniform families and the rank-side lemma.
inline Result connectivity(const Corpus& corpus, const Options& options) {
  detail::Stopwatch clock;
  detail::Tally tally;
  Rng rng = detail::stream(options.seed, 7);
  int connected = 0;
  int disconnected = 0;
  while (connected < options.random_hypergraphs) {
    const Hypergraph h =
        random_hypergraph(rng, options.hypergraph_max_vertices, options.hypergraph_max_edges);
    const Polymatroid p = hypertree_polymatroid(h).bases;
    const BiPoly x = exterior_direct(p);
    const int v = h.vertex_count();
    const int n = h.edge_count();
    const std::string label = "hypergraph |V|=" + std::to_string(v) + " |E|=" + std::to_string(n);
    for (int i = 0; i <= n; ++i) {
      const Integer ceiling = gen_binomial(v + i - 2, i);
      tally.check(x.coeff(0, i) <= ceiling, [&] {
        return label + " y^" + std::to_string(i) + " exceeds " + ceiling.str();
      });
    }
    if (!bipartite_connected(h)) {
      ++disconnected;
      continue;
    }
    ++connected;
    int k_coeff = -1;
    for (int k = 0; k <= n; ++k) {
      if (x.coeff(0, k) != gen_binomial(v + k - 2, k)) break;
      k_coeff = k;
    }
    const int k_graph = connectivity_profile(h);
    tally.check(k_graph == k_coeff, [&] {
      return label + " connectivity " + std::to_string(k_graph) + " vs coefficients " +
             std::to_string(k_coeff);
    });
  }
  for (int n = 1; n <= 5; ++n) {
    for (Coord r = 0; r <= 4; ++r) {
      std::vector<Coord> f(std::size_t{1} << n, r);
      f[0] = 0;
      const Polymatroid p = enumerate_bases(RankTable(n, std::move(f)));
      const BiPoly x = exterior_direct(p);
      for (int i = 0; i <= n - 1; ++i) {
        tally.check(x.coeff(0, i) == gen_binomial(r + i - 1, i), [&] {
          return "uniform n=" + std::to_string(n) + " r=" + std::to_string(r) + " y^" +
                 std::to_string(i);
        });
      }
    }
  }
  std::size_t lemma_cases = 0;
  for (const auto& entry : corpus) {
    if (!entry.bases.all_nonnegative()) continue;
    const BiPoly x = exterior_direct(entry.bases);
    for (int k = 0; k <= entry.bases.ground_size(); ++k) {
      const auto r = exterior_binomial_check(entry.rank, entry.bases, x, k);
      ++lemma_cases;
      tally.check(r.match, [&] { return entry.label + " rank lemma k=" + std::to_string(k); });
    }
  }
  tally.note(std::to_string(connected) + " connected and " + std::to_string(disconnected) +
             " disconnected hypergraphs, " + std::to_string(lemma_cases) + " rank-lemma cases");
  return tally.finish(7, "connectivity", clock.seconds());
}

// Criterion 8: structural oracles for slices, minors, duality, tight sets,
// activities and exchange steps.
inline Result structure_oracles(const Corpus& corpus, const Options& options) {
  detail::Stopwatch clock;
  detail::Tally tally;
  Rng rng = detail::stream(options.seed, 8);
  const std::size_t exhaustive = exhaustive_count(corpus);
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& entry = corpus[idx];
    const RankTable& f = entry.rank;
    const Polymatroid& p = entry.bases;
    const int n = p.ground_size();
    const Mask full = full_mask(n);
    const std::string& label = entry.label;

    tally.check(rank_from_bases(p) == f, [&] { return label + " rank recovery"; });
    tally.check(exchange_closure(f) == p, [&] { return label + " exchange closure"; });
    tally.check(p.contains(greedy_basis(f)), [&] { return label + " greedy basis"; });

    if (n >= 2) {
      for (int t = 0; t < n; ++t) {
        const SliceRange range = slice_range(f, t);
        const SliceRange seen = slice_range(p, t);
        tally.check(range.alpha == seen.alpha && range.beta == seen.beta,
                    [&] { return label + " slice range t=" + std::to_string(t + 1); });
        for (Coord j = range.alpha; j <= range.beta; ++j) {
          const Polymatroid s = slice(p, t, j);
          const RankTable g = slice_rank(f, t, j);
          tally.check(rank_from_bases(s) == g && enumerate_bases(g) == s, [&] {
            return label + " slice t=" + std::to_string(t + 1) + " j=" + std::to_string(j);
          });
        }
      }
    }

    // Disjoint (A, B) pairs: every pair on the exhaustive family, a sample
    // otherwise.
    std::vector<std::pair<Mask, Mask>> pairs;
    if (idx < exhaustive) {
      for (Mask a = 0; a <= full; ++a) {
        for (Mask b = 0; b <= full; ++b) {
          if (!(a & b) && (a | b) != full) pairs.emplace_back(a, b);
        }
      }
    } else if (n >= 2) {
      for (int s = 0; s < 4; ++s) {
        const Mask a = random_subset(rng, n);
        const Mask b = random_subset(rng, n, a);
        if ((a | b) != full) pairs.emplace_back(a, b);
      }
    }
    for (const auto& [a, b] : pairs) {
      const RankTable deleted = a ? delete_rank(f, a) : f;
      const RankTable del_con = b ? contract_rank(deleted, gather(b, full & ~a)) : deleted;
      const RankTable contracted = b ? contract_rank(f, b) : f;
      const RankTable con_del = a ? delete_rank(contracted, gather(a, full & ~b)) : contracted;
      tally.check(del_con == con_del && del_con == minor_rank(f, a, b), [&] {
        return label + " minor order A=" + subset_text(a) + " B=" + subset_text(b);
      });
      if (a && b) {
        // Stepwise deletion and contraction compose to the union.
        const RankTable step_del = delete_rank(delete_rank(f, a), gather(b, full & ~a));
        tally.check(step_del == delete_rank(f, a | b), [&] { return label + " deletion union"; });
        const RankTable step_con = contract_rank(contract_rank(f, a), gather(b, full & ~a));
        tally.check(step_con == contract_rank(f, a | b),
                    [&] { return label + " contraction union"; });
      }
      if (a) {
        const Polymatroid lhs = dual(deletion(p, a));
        const Polymatroid rhs = contraction(dual(p), a);
        tally.check(lhs == rhs, [&] { return label + " -(P\\A) vs (-P)/A A=" + subset_text(a); });
        const Polymatroid lhs2 = dual(contraction(p, a));
        const Polymatroid rhs2 = deletion(dual(p), a);
        tally.check(lhs2 == rhs2, [&] { return label + " -(P/A) vs (-P)\\A A=" + subset_text(a); });
      }
    }

    const bool all_bases = idx < exhaustive || p.size() <= 64;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!all_bases && uniform(rng, 0, 7) != 0) continue;
      const Vec& a = p.bases()[k];
      const TightFamily family = tight_sets(p, f, a);
      tally.check(family.contains(0) && family.contains(full),
                  [&] { return label + " tight ends " + vec_text(a); });
      tally.check(detail::closed_under_union_intersection(family),
                  [&] { return label + " tight lattice " + vec_text(a); });
      const ActivityProfile by_definition = activities(p, a);
      const ActivityProfile by_tight = activities_via_tight_sets(p, f, a);
      tally.check(by_definition == by_tight, [&] { return label + " activity " + vec_text(a); });
      for (Mask s = 0; s <= full; ++s) {
        if (family.contains(s)) continue;
        tally.check(detail::has_exchange_step(p, a, s), [&] {
          return label + " exchange step " + vec_text(a) + " I=" + subset_text(s);
        });
      }
    }
  }
  return tally.finish(8, "structure oracles", clock.seconds());
}

// Criterion 9: x^2 coefficient of the interior polynomial from 4-cycles.
inline Result four_cycles(const Options& options) {
  detail::Stopwatch clock;
  detail::Tally tally;
  Rng rng = detail::stream(options.seed, 9);
  for (int k = 0; k < options.random_hypergraphs; ++k) {
    const Hypergraph h = random_connected_hypergraph(rng, options.hypergraph_max_vertices,
                                                     options.hypergraph_max_edges);
    const BiPoly i = interior_direct(hypertree_polymatroid(h).bases);
    const Integer predicted =
        gen_binomial(h.incidence_count() - h.vertex_count() - h.edge_count() + 2, 2) -
        count_four_cycles(bipartite(h));
    tally.check(i.coeff(2, 0) == predicted, [&] {
      return "hypergraph #" + std::to_string(k + 1) + ": x^2 " + i.coeff(2, 0).str() +
             " vs " + predicted.str();
    });
  }
  return tally.finish(9, "four-cycle coefficient", clock.seconds());
}

inline std::vector<Result> run_all(const Options& options = {}) {
  const Corpus corpus = build_corpus(options);
  std::vector<Result> results;
  results.push_back(method_equivalence(corpus, options));
  results.push_back(coefficient_formulas(corpus));
  results.push_back(invariances(corpus, options));
  results.push_back(matroid_bridge());
  results.push_back(monotonicity(corpus, options));
  results.push_back(non_monotonicity(corpus, options));
  results.push_back(connectivity(corpus, options));
  results.push_back(structure_oracles(corpus, options));
  results.push_back(four_cycles(options));
  return results;
}

inline std::string format_result(const Result& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): "
     << r.checks << " checks, " << r.failures << " failures";
  if (!r.detail.empty()) os << "; " << r.detail;
  return os.str();
}

}  // namespace polytutte::acceptance

#endif  // POLYTUTTE_ACCEPTANCE_HPP
