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

#include "polytutte/formulas.hpp"
#include "polytutte/hypergraph.hpp"

namespace polytutte {
namespace {

RankTable uniform_rank(int n, Coord r, Coord scale = 1) {
  std::vector<Coord> f(std::size_t{1} << n, 0);
  for (Mask m = 1; m < f.size(); ++m) f[m] = scale * std::min<Coord>(popcount(m), r);
  return RankTable(n, std::move(f));
}

const RankTable& u13() {
  static const RankTable f = uniform_rank(3, 1);
  return f;
}

// Rank of the unique-basis polymatroid {(1,1)}.
const RankTable& point() {
  static const RankTable f(2, {0, 1, 1, 2});
  return f;
}

TEST(GenBinomial, Examples) {
  EXPECT_EQ(gen_binomial(-1, 2), Integer(1));
  EXPECT_EQ(gen_binomial(0, 2), Integer(0));
  EXPECT_EQ(gen_binomial(4, 2), Integer(6));
  EXPECT_EQ(gen_binomial(-3, 3), Integer(-10));
  EXPECT_EQ(gen_binomial(7, 0), Integer(1));
  EXPECT_EQ(gen_binomial(3, -1), Integer(0));
}

TEST(CoeffTop, Examples) {
  EXPECT_EQ(coeff_top(3, 1), Integer(3));
  EXPECT_EQ(coeff_top(2, 0), Integer(1));
  EXPECT_EQ(coeff_top(2, 2), Integer(1));
}

TEST(CoeffDegNMinus1, UniformExamples) {
  EXPECT_EQ(coeff_deg_n_minus_1(u13(), 1), Integer(-1));
  EXPECT_EQ(coeff_deg_n_minus_1(u13(), 2), Integer(-3));
  EXPECT_EQ(coeff_deg_n_minus_1(u13(), 3), Integer(-2));
  EXPECT_EQ(coeff_corners_n_minus_1(u13()).second, Integer(-2));
}

TEST(CoeffDegNMinus1, Specialized) {
  EXPECT_EQ(coeff_deg_n_minus_1_specialized(u13()), std::make_pair(Integer(2), Integer(1)));
  EXPECT_EQ(coeff_deg_n_minus_1_specialized(point()).first, Integer(0));
}

TEST(CoeffDegNMinus2, Examples) {
  EXPECT_EQ(coeff_deg_n_minus_2(u13()).first, Integer(0));
  EXPECT_EQ(coeff_deg_n_minus_2(point()), std::make_pair(Integer(1), Integer(1)));
  EXPECT_EQ(coeff_deg_n_minus_2_onevar(u13()), std::make_pair(Integer(0), Integer(1)));
  EXPECT_EQ(coeff_deg_n_minus_2_onevar(point()).first, Integer(0));
}

TEST(CoefficientReport, AllRowsMatchOnExamples) {
  const BiPoly t13 = tutte_direct(enumerate_bases(u13()));
  EXPECT_TRUE(all_match(coefficient_report(u13(), t13)));
  const BiPoly s = BiPoly::x_plus_y_minus_one();
  EXPECT_TRUE(all_match(coefficient_report(point(), s * s)));
}

TEST(CoefficientReport, DetectsWrongPolynomial) {
  const BiPoly t13 = tutte_direct(enumerate_bases(u13()));
  EXPECT_FALSE(all_match(coefficient_report(u13(), t13 + BiPoly::x())));
}

TEST(ExteriorBinomial, Examples) {
  for (int k = 0; k <= 2; ++k) {
    const auto r = exterior_binomial_check(u13(), k);
    EXPECT_TRUE(r.rank_side);
    EXPECT_TRUE(r.coefficient_side);
    EXPECT_TRUE(r.match);
  }
  const auto full = exterior_binomial_check(u13(), 3);
  EXPECT_FALSE(full.rank_side);
  EXPECT_TRUE(full.match);
  const auto wide = exterior_binomial_check(uniform_rank(2, 1, 2), 1);
  EXPECT_TRUE(wide.rank_side && wide.coefficient_side);
}

TEST(ExteriorBinomial, PendantVertexBreaksBothSides) {
  const Hypergraph h = Hypergraph::with_vertex_count(3, {{0, 1}, {0, 1, 2}});
  const RankTable f = hypergraph_rank(h);
  EXPECT_EQ(f[1], 1);
  EXPECT_EQ(f[2], 2);
  const auto r = exterior_binomial_check(f, 1);
  EXPECT_FALSE(r.rank_side);
  EXPECT_FALSE(r.coefficient_side);
  EXPECT_TRUE(r.match);
}

TEST(ExteriorBinomial, RejectsNegativeCoordinates) {
  EXPECT_THROW(exterior_binomial_check(RankTable(1, {0, -1}), 1), Error);
  EXPECT_THROW(exterior_binomial_check(u13(), 4), Error);
}

TEST(CompareCoefficientwise, Examples) {
  EXPECT_TRUE(compare_coefficientwise(parse_bipoly("1 + x"), parse_bipoly("1 + 2*x")).holds);
  const auto r = compare_coefficientwise(parse_bipoly("1 + 2*x"), parse_bipoly("1 + x"));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->x, 1);
  EXPECT_EQ(r.witness->y, 0);
  EXPECT_EQ(r.lhs, Integer(2));
  EXPECT_EQ(r.rhs, Integer(1));
  EXPECT_FALSE(compare_coefficientwise(BiPoly::y(), BiPoly{}).holds);
}

TEST(CounterexampleSearch, FindsKnownPolymatroids) {
  const BiPoly target = parse_bipoly("x^2 + 2*x*y + y^2 - x - y");
  const auto matches = counterexample_search({target}, 2, 2);
  const Polymatroid u12 = validate_basis_set(2, {{1, 0}, {0, 1}});
  bool found = false;
  for (const auto& m : matches) found = found || m.polymatroid == u12;
  EXPECT_TRUE(found);

  const auto singles = counterexample_search({BiPoly::x_plus_y_minus_one()}, 1, 3);
  EXPECT_EQ(singles.size(), 4u);
}

TEST(CounterexampleSearch, MatchesHaveTheImpliedBasisCount) {
  const BiPoly target =
      parse_bipoly("x^3 + 3*x^2*y + 3*x*y^2 + y^3 + 2*x^2 + 3*x*y + y^2 - x - 2");
  ASSERT_EQ(target.value_at_one(), Integer(11));
  for (const auto& m : counterexample_search({target}, 3, 4)) {
    EXPECT_EQ(m.polymatroid.size(), 11u);
  }
}

}  // namespace
}  // namespace polytutte
