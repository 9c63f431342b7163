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


#include <gtest/gtest.h>

#include "polytutte/activity.hpp"
#include "polytutte/random.hpp"
#include "polytutte/recursion.hpp"

namespace polytutte {
namespace {

const Polymatroid& u13() {
  static const Polymatroid p = validate_basis_set(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  return p;
}

const Polymatroid& triangle() {
  static const Polymatroid p = validate_basis_set(2, {{2, 0}, {1, 1}, {0, 2}});
  return p;
}

RankTable uniform_rank(int n, Coord r) {
  std::vector<Coord> f(std::size_t{1} << n, 0);
  for (Mask m = 1; m < f.size(); ++m) f[m] = std::min<Coord>(popcount(m), r);
  return RankTable(n, std::move(f));
}

TEST(TutteDc, HandExamples) {
  DcOptions on_second;
  on_second.top_pivot = 1;
  EXPECT_EQ(tutte_dc(triangle(), on_second), parse_bipoly("x^2 + 2*x*y + y^2 - 1"));
  DcOptions on_third;
  on_third.top_pivot = 2;
  EXPECT_EQ(tutte_dc(u13(), on_third),
            parse_bipoly("x^3 + 3*x^2*y + 3*x*y^2 + y^3 - x^2 - 3*x*y - 2*y^2 + y"));
  const BiPoly s = BiPoly::x_plus_y_minus_one();
  EXPECT_EQ(tutte_dc(validate_basis_set(2, {{3, -1}})), s * s);
}

TEST(InteriorExteriorDc, Examples) {
  EXPECT_EQ(interior_dc(u13()), parse_bipoly("1 + 2*x"));
  EXPECT_EQ(exterior_dc(triangle()), parse_bipoly("1 + 2*y"));
  const Polymatroid single = validate_basis_set(1, {{5}});
  EXPECT_EQ(interior_dc(single), BiPoly::constant(1));
  EXPECT_EQ(exterior_dc(single), BiPoly::constant(1));
}

TEST(Dc, EveryPivotRuleAgreesWithDirect) {
  Rng rng(2026);
  for (int k = 0; k < 120; ++k) {
    const int n = static_cast<int>(uniform(rng, 1, 5));
    const Polymatroid p = enumerate_bases(random_rank_table(rng, n));
    const BiPoly t = tutte_direct(p);
    const BiPoly i = interior_direct(p);
    const BiPoly x = exterior_direct(p);
    for (PivotRule rule : {PivotRule::kWidest, PivotRule::kFirst, PivotRule::kLast}) {
      DcOptions options;
      options.rule = rule;
      EXPECT_EQ(tutte_dc(p, options), t);
      EXPECT_EQ(interior_dc(p, options), i);
      EXPECT_EQ(exterior_dc(p, options), x);
    }
    for (int pivot = 0; pivot < n; ++pivot) {
      DcOptions options;
      options.top_pivot = pivot;
      EXPECT_EQ(tutte_dc(p, options), t);
    }
  }
}

TEST(Dc, TinyCacheAndWorkersDoNotChangeResults) {
  Rng rng(77);
  for (int k = 0; k < 30; ++k) {
    const Polymatroid p = enumerate_bases(random_rank_table(rng, 5));
    DcOptions options;
    options.memo_capacity = 1;
    options.jobs = 4;
    EXPECT_EQ(tutte_dc(p, options), tutte_direct(p));
  }
}

TEST(Dc, MemoSharesTranslates) {
  DeletionContraction dc;
  const BiPoly a = dc.tutte(u13());
  const std::size_t entries = dc.cached_entries();
  EXPECT_EQ(dc.tutte(translate(u13(), Vec{2, -1, 5})), a);
  EXPECT_EQ(dc.cached_entries(), entries);
}

TEST(Dc, RejectsBadPivot) {
  DcOptions options;
  options.top_pivot = 3;
  EXPECT_THROW(tutte_dc(u13(), options), Error);
}

TEST(LruCache, EvictsLeastRecentlyUsed) {
  LruCache<int, int, std::hash<int>> cache(2);
  cache.insert(1, 10);
  cache.insert(2, 20);
  EXPECT_EQ(cache.find(1), std::optional<int>(10));
  cache.insert(3, 30);
  EXPECT_FALSE(cache.find(2).has_value());
  EXPECT_EQ(cache.find(1), std::optional<int>(10));
  EXPECT_EQ(cache.find(3), std::optional<int>(30));
  EXPECT_EQ(cache.size(), 2u);
}

TEST(MatroidForm, Examples) {
  const Polymatroid u12 = validate_basis_set(2, {{1, 0}, {0, 1}});
  EXPECT_EQ(matroid_form(u12, 1, tutte_direct), parse_bipoly("x + y"));
  const Polymatroid coloop = validate_basis_set(1, {{1}});
  EXPECT_EQ(matroid_form(coloop, std::nullopt, tutte_direct), BiPoly::x());
  const Polymatroid loop = validate_basis_set(1, {{0}});
  EXPECT_EQ(matroid_form(loop, std::nullopt, tutte_direct), BiPoly::y());
  EXPECT_THROW(matroid_form(parse_bipoly("x^3"), 2, 1), Error);
}

TEST(MatroidForm, AgreesWithClassicalOnSmallMatroids) {
  int matroids = 0;
  for (int n = 1; n <= 4; ++n) {
    for_each_small_polymatroid(n, 1, [&](const RankTable& f, const Polymatroid& p) {
      if (!is_matroid_rank(f)) return;
      ++matroids;
      EXPECT_EQ(matroid_form(tutte_direct(p), n, static_cast<int>(f.total())),
                classical_tutte(f));
    });
  }
  EXPECT_GT(matroids, 20);
}

TEST(ClassicalTutte, Examples) {
  EXPECT_EQ(classical_tutte(uniform_rank(2, 1)), parse_bipoly("x + y"));
  // Three parallel elements, and the triangle.
  EXPECT_EQ(classical_tutte(uniform_rank(3, 1)), parse_bipoly("x + y + y^2"));
  EXPECT_EQ(classical_tutte(uniform_rank(3, 2)), parse_bipoly("x^2 + x + y"));
  EXPECT_EQ(classical_tutte(uniform_rank(4, 4)), BiPoly::x().pow(4));
  EXPECT_THROW(classical_tutte(RankTable(1, {0, 2})), Error);
}

}  // namespace
}  // namespace polytutte
