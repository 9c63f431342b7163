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

#ifndef POLYTUTTE_FORMULAS_HPP
#define POLYTUTTE_FORMULAS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polytutte/activity.hpp"
#include "polytutte/bipoly.hpp"
#include "polytutte/polymatroid.hpp"

namespace polytutte {

// Falling-factorial binomial m(m-1)...(m-k+1)/k!, defined for every integer m.
// C(m, 0) = 1 and C(m, k) = 0 for k < 0.
inline Integer gen_binomial(const Integer& m, int k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < k; ++i) {
    num *= m - i;
    den *= i + 1;
  }
  return num / den;
}

inline Integer gen_binomial(long long m, int k) { return gen_binomial(Integer(m), k); }

// Coefficient of x^k y^{n-k}: C(n, k).
inline Integer coeff_top(int n, int k) { return gen_binomial(n, k); }

namespace detail {

inline Integer sum_over_size(const RankTable& f, int size) {
  Integer s = 0;
  for (Mask m = 0; m <= f.full(); ++m) {
    if (popcount(m) == size) s += f[m];
  }
  return s;
}

inline Integer singleton_sum(const RankTable& f) {
  Integer s = 0;
  for (int i = 0; i < f.ground_size(); ++i) s += f[bit(i)];
  return s;
}

inline Integer co_singleton_sum(const RankTable& f) {
  Integer s = 0;
  for (int i = 0; i < f.ground_size(); ++i) s += f[f.full() & ~bit(i)];
  return s;
}

inline void require_at_least_two(const RankTable& f) {
  if (f.ground_size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "formula needs a ground set of size >= 2");
  }
}

}  // namespace detail

// Coefficient of x^{n-k} y^{k-1}, for k in 1..n:
//   sum_{|S|=k-1} f(S) + sum_{|S|=k} f(S) - C(n,k-1) f([n]) - k C(n,k).
inline Integer coeff_deg_n_minus_1(const RankTable& f, int k) {
  const int n = f.ground_size();
  if (k < 1 || k > n) {
    throw Error(ErrorKind::kInvalidArgument, "k=" + std::to_string(k) + " outside [1, n]");
  }
  return detail::sum_over_size(f, k - 1) + detail::sum_over_size(f, k) -
         gen_binomial(n, k - 1) * f.total() - k * gen_binomial(n, k);
}

// Coefficients of x^{n-1} and y^{n-1} in T(x, y) at the two corners k = 1 and
// k = n, written directly in terms of singletons and co-singletons.
inline std::pair<Integer, Integer> coeff_corners_n_minus_1(const RankTable& f) {
  const int n = f.ground_size();
  return {detail::singleton_sum(f) - f.total() - n,
          detail::co_singleton_sum(f) - (n - 1) * Integer(f.total()) - n};
}

// x^{n-1}[T(x,1)] and y^{n-1}[T(1,y)].
inline std::pair<Integer, Integer> coeff_deg_n_minus_1_specialized(const RankTable& f) {
  const int n = f.ground_size();
  return {detail::singleton_sum(f) - f.total(),
          detail::co_singleton_sum(f) - (n - 1) * Integer(f.total())};
}

namespace detail {

// Shared shape of the degree n-2 formulas; `shift` is 1 - n for the bivariate
// coefficients and 1 for the one-variable specializations.
inline std::pair<Integer, Integer> degree_n_minus_2(const RankTable& f, int shift,
                                                    int pair_shift) {
  require_at_least_two(f);
  const int n = f.ground_size();
  const Mask full = f.full();
  const Coord total = f.total();
  Integer x_side = gen_binomial(singleton_sum(f) - total + shift, 2);
  Integer y_side =
      gen_binomial(co_singleton_sum(f) - (n - 1) * Integer(total) + shift, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Mask ij = bit(i) | bit(j);
      x_side -= gen_binomial(f[bit(i)] + f[bit(j)] - f[ij] + pair_shift, 2);
      y_side -= gen_binomial(
          f[full & ~bit(i)] + f[full & ~bit(j)] - f[full & ~ij] - total + pair_shift, 2);
    }
  }
  return {x_side, y_side};
}

}  // namespace detail

// Coefficients of x^{n-2} and y^{n-2} in T(x, y).
inline std::pair<Integer, Integer> coeff_deg_n_minus_2(const RankTable& f) {
  return detail::degree_n_minus_2(f, 1 - f.ground_size(), 0);
}

// x^{n-2}[T(x,1)] and y^{n-2}[T(1,y)].
inline std::pair<Integer, Integer> coeff_deg_n_minus_2_onevar(const RankTable& f) {
  return detail::degree_n_minus_2(f, 1, 1);
}

// The same one-variable coefficients re-derived from bivariate ones:
// x^{n-2}[T(x,1)] = [x^{n-2}] + [x^{n-2} y] + [x^{n-2} y^2], and symmetrically.
inline std::pair<Integer, Integer> onevar_n_minus_2_from_bivariate(const BiPoly& tutte,
                                                                   int n) {
  Integer x_side = 0;
  Integer y_side = 0;
  for (int j = 0; j <= 2; ++j) {
    x_side += tutte.coeff(n - 2, j);
    y_side += tutte.coeff(j, n - 2);
  }
  return {x_side, y_side};
}

struct CoefficientRow {
  std::string formula;
  Integer predicted;
  Integer extracted;
  bool match = false;
};

using CoefficientReport = std::vector<CoefficientRow>;

inline bool all_match(const CoefficientReport& report) {
  for (const auto& row : report) {
    if (!row.match) return false;
  }
  return true;
}

// Every closed-form coefficient prediction for f, checked against `tutte`.
inline CoefficientReport coefficient_report(const RankTable& f, const BiPoly& tutte) {
  const int n = f.ground_size();
  CoefficientReport report;
  auto row = [&report](std::string id, Integer predicted, Integer extracted) {
    const bool match = predicted == extracted;
    report.push_back({std::move(id), std::move(predicted), std::move(extracted), match});
  };
  for (int k = 0; k <= n; ++k) {
    row("top_degree[k=" + std::to_string(k) + "]", coeff_top(n, k), tutte.coeff(k, n - k));
  }
  for (int k = 1; k <= n; ++k) {
    row("degree_n_minus_1[k=" + std::to_string(k) + "]", coeff_deg_n_minus_1(f, k),
        tutte.coeff(n - k, k - 1));
  }
  const auto [x_corner, y_corner] = coeff_corners_n_minus_1(f);
  row("corner_n_minus_1_x", x_corner, tutte.coeff(n - 1, 0));
  row("corner_n_minus_1_y", y_corner, tutte.coeff(0, n - 1));

  const BiPoly tx = at_one(tutte, Axis::kY);
  const BiPoly ty = at_one(tutte, Axis::kX);
  const auto [x_onevar, y_onevar] = coeff_deg_n_minus_1_specialized(f);
  row("onevar_n_minus_1_x", x_onevar, tx.coeff(n - 1, 0));
  row("onevar_n_minus_1_y", y_onevar, ty.coeff(0, n - 1));

  if (n >= 2) {
    const auto [x2, y2] = coeff_deg_n_minus_2(f);
    row("degree_n_minus_2_x", x2, tutte.coeff(n - 2, 0));
    row("degree_n_minus_2_y", y2, tutte.coeff(0, n - 2));
    const auto [x1v, y1v] = coeff_deg_n_minus_2_onevar(f);
    row("onevar_n_minus_2_x", x1v, tx.coeff(n - 2, 0));
    row("onevar_n_minus_2_y", y1v, ty.coeff(0, n - 2));
    const auto [x3, y3] = onevar_n_minus_2_from_bivariate(tutte, n);
    row("onevar_n_minus_2_x_three_terms", x1v, x3);
    row("onevar_n_minus_2_y_three_terms", y1v, y3);
  }
  return report;
}

struct ExteriorBinomialCheck {
  bool rank_side = false;         // f([n] \ J) = f([n]) for every |J| = k
  bool coefficient_side = false;  // y^i[X] = C(f([n]) + i - 1, i) for i <= k
  bool match = false;
};

// Evaluates both sides of the rank/exterior-coefficient equivalence
// independently. Requires a polymatroid with nonnegative bases.
inline ExteriorBinomialCheck exterior_binomial_check(const RankTable& f,
                                                     const Polymatroid& p,
                                                     const BiPoly& exterior, int k) {
  const int n = f.ground_size();
  if (k < 0 || k > n) {
    throw Error(ErrorKind::kInvalidArgument, "k=" + std::to_string(k) + " outside [0, n]");
  }
  if (!p.all_nonnegative()) {
    throw Error(ErrorKind::kNegativeCoordinates, "polymatroid has a negative coordinate");
  }
  ExteriorBinomialCheck r;
  r.rank_side = true;
  for (Mask j = 0; j <= f.full() && r.rank_side; ++j) {
    if (popcount(j) == k) r.rank_side = f[f.full() & ~j] == f.total();
  }
  r.coefficient_side = true;
  for (int i = 0; i <= k && r.coefficient_side; ++i) {
    r.coefficient_side = exterior.coeff(0, i) == gen_binomial(f.total() + i - 1, i);
  }
  r.match = r.rank_side == r.coefficient_side;
  return r;
}

inline ExteriorBinomialCheck exterior_binomial_check(const RankTable& f, int k) {
  const Polymatroid p = enumerate_bases(f);
  return exterior_binomial_check(f, p, exterior_direct(p), k);
}

struct CoefficientwiseComparison {
  bool holds = true;                // p <= q in every coefficient
  std::optional<Exponent> witness;  // first violating term, canonical order
  Integer lhs;
  Integer rhs;
};

inline CoefficientwiseComparison compare_coefficientwise(const BiPoly& p, const BiPoly& q) {
  BiPoly::TermMap support = p.terms();
  for (const auto& [e, c] : q.terms()) support.try_emplace(e, c);
  CoefficientwiseComparison r;
  for (const auto& [e, unused] : support) {
    Integer a = p.coeff(e.x, e.y);
    Integer b = q.coeff(e.x, e.y);
    if (a > b) {
      r.holds = false;
      r.witness = e;
      r.lhs = std::move(a);
      r.rhs = std::move(b);
      break;
    }
  }
  return r;
}

struct SearchMatch {
  std::size_t target = 0;
  RankTable rank;
  Polymatroid polymatroid;
};

// Scans every small polymatroid on 1..n elements with ranks in [0, max_rank]
// and returns those whose Tutte polynomial equals one of the targets.
inline std::vector<SearchMatch> counterexample_search(const std::vector<BiPoly>& targets,
                                                      int n, Coord max_rank) {
  std::vector<SearchMatch> matches;
  for (int size = 1; size <= n; ++size) {
    std::vector<std::size_t> relevant;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (targets[t].total_degree() == size) relevant.push_back(t);
    }
    if (relevant.empty()) continue;
    for_each_small_polymatroid(size, max_rank, [&](const RankTable& f, const Polymatroid& p) {
      const BiPoly tutte = tutte_direct(p);
      for (std::size_t t : relevant) {
        if (tutte == targets[t]) matches.push_back({t, f, p});
      }
    });
  }
  return matches;
}

}  // namespace polytutte

#endif  // POLYTUTTE_FORMULAS_HPP
