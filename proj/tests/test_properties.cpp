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


// Randomized comparisons against the independent reference code in
// oracle.hpp, plus structural invariants of the three polynomials.

#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "polytutte/activity.hpp"
#include "polytutte/random.hpp"
#include "polytutte/recursion.hpp"

namespace polytutte {
namespace {

oracle::Terms terms_of(const BiPoly& p) {
  oracle::Terms t;
  for (const auto& [e, c] : p.terms()) t[{e.x, e.y}] = c.convert_to<long long>();
  return t;
}

std::set<oracle::Vec> basis_set(const Polymatroid& p) {
  return {p.bases().begin(), p.bases().end()};
}

class Seeded : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  Polymatroid draw(int max_n = 4) {
    const int n = static_cast<int>(uniform(rng_, 1, max_n));
    return enumerate_bases(random_rank_table(rng_, n));
  }
  Rng rng_{GetParam()};
};

TEST_P(Seeded, PolynomialsMatchOracle) {
  for (int k = 0; k < 40; ++k) {
    const Polymatroid p = draw();
    const auto v = basis_set(p);
    EXPECT_EQ(terms_of(tutte_direct(p)), oracle::tutte(v));
    EXPECT_EQ(terms_of(interior_direct(p)), oracle::interior(v));
    EXPECT_EQ(terms_of(exterior_direct(p)), oracle::exterior(v));
    EXPECT_EQ(terms_of(tutte_dc(p)), oracle::tutte(v));
  }
}

TEST_P(Seeded, ActivitiesMatchOracle) {
  for (int k = 0; k < 40; ++k) {
    const Polymatroid p = draw();
    const auto v = basis_set(p);
    for (const Vec& a : p.bases()) {
      const ActivityProfile r = activities(p, a);
      const oracle::Activity o = oracle::activity(v, a);
      EXPECT_EQ(r.internal, o.internal);
      EXPECT_EQ(r.external, o.external);
    }
  }
}

TEST_P(Seeded, TranslationPermutationAndDuality) {
  for (int k = 0; k < 30; ++k) {
    const Polymatroid p = draw();
    const int n = p.ground_size();
    const BiPoly t = tutte_direct(p);
    EXPECT_EQ(tutte_direct(translate(p, random_translation(rng_, n))), t);
    EXPECT_EQ(tutte_direct(permute(p, random_permutation(rng_, n))), t);
    EXPECT_EQ(tutte_direct(dual(p)), swap_variables(t));
    EXPECT_EQ(interior_direct(dual(p)), swap_variables(exterior_direct(p)));
  }
}

TEST_P(Seeded, DivisibilityCountAndReversal) {
  for (int k = 0; k < 30; ++k) {
    const Polymatroid p = draw();
    const int n = p.ground_size();
    const BiPoly t = tutte_direct(p);
    EXPECT_TRUE(divisible_by_x_plus_y_minus_1(t));
    EXPECT_EQ(t.value_at_one(), Integer(p.size()));
    EXPECT_LE(t.total_degree(), n);
    EXPECT_EQ(interior_direct(p), reversed(at_one(t, Axis::kY), Axis::kX, n));
    EXPECT_EQ(exterior_direct(p), reversed(at_one(t, Axis::kX), Axis::kY, n));
  }
}

TEST_P(Seeded, RankTableRoundTrip) {
  for (int k = 0; k < 30; ++k) {
    const int n = static_cast<int>(uniform(rng_, 1, 4));
    const RankTable f = random_rank_table(rng_, n);
    EXPECT_EQ(rank_from_bases(enumerate_bases(f)), f);
    EXPECT_EQ(oracle::rank(n, oracle::bases(n, f.values())), f.values());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Seeded, ::testing::Values(1u, 2u, 3u, 0x5eedu, 2026u));

}  // namespace
}  // namespace polytutte
