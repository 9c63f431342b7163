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
#include "polytutte/bipoly.hpp"

namespace polytutte {
namespace {

const Polymatroid& u12() {
  static const Polymatroid p = validate_basis_set(2, {{1, 0}, {0, 1}});
  return p;
}

const Polymatroid& u13() {
  static const Polymatroid p = validate_basis_set(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  return p;
}

const Polymatroid& triangle() {
  static const Polymatroid p = validate_basis_set(2, {{2, 0}, {1, 1}, {0, 2}});
  return p;
}

TEST(TightSets, Examples) {
  const RankTable f = rank_from_bases(u12());
  EXPECT_EQ(tight_sets(u12(), f, Vec{1, 0}).sets, (std::vector<Mask>{0, 1, 3}));
  EXPECT_EQ(tight_sets(u12(), f, Vec{0, 1}).sets, (std::vector<Mask>{0, 2, 3}));
}

TEST(TightSets, AlwaysContainEmptyAndFull) {
  for (const Polymatroid* p : {&u12(), &u13(), &triangle()}) {
    const RankTable f = rank_from_bases(*p);
    for (const Vec& a : p->bases()) {
      const TightFamily family = tight_sets(*p, f, a);
      EXPECT_TRUE(family.contains(0));
      EXPECT_TRUE(family.contains(f.full()));
    }
  }
}

TEST(TightSets, RejectsNonBasis) {
  const RankTable f = rank_from_bases(u12());
  EXPECT_THROW(tight_sets(u12(), f, Vec{1, 1}), Error);
}

TEST(Activities, Examples) {
  const ActivityProfile first = activities(u12(), Vec{1, 0});
  EXPECT_EQ(first.internal, Mask{3});
  EXPECT_EQ(first.external, Mask{1});
  EXPECT_EQ(first.oi, 1);
  EXPECT_EQ(first.oe, 0);
  EXPECT_EQ(first.ie, 1);

  const ActivityProfile second = activities(u12(), Vec{0, 1});
  EXPECT_EQ(second.internal, Mask{1});
  EXPECT_EQ(second.external, Mask{3});
  EXPECT_EQ(second.oi, 0);
  EXPECT_EQ(second.oe, 1);
  EXPECT_EQ(second.ie, 1);

  const Polymatroid single = validate_basis_set(1, {{4}});
  const ActivityProfile only = activities(single, Vec{4});
  EXPECT_EQ(only.internal, Mask{1});
  EXPECT_EQ(only.external, Mask{1});
  EXPECT_EQ(only.ie, 1);
  EXPECT_EQ(only.oi + only.oe, 0);
}

TEST(Activities, FirstIndexIsDoublyActive) {
  for (const Polymatroid* p : {&u12(), &u13(), &triangle()}) {
    for (const Vec& a : p->bases()) {
      const ActivityProfile r = activities(*p, a);
      EXPECT_TRUE(contains(r.internal & r.external, 0));
    }
  }
}

TEST(Activities, TightSetCharacterizationAgrees) {
  for (const Polymatroid* p : {&u12(), &u13(), &triangle()}) {
    const RankTable f = rank_from_bases(*p);
    for (const Vec& a : p->bases()) {
      EXPECT_EQ(activities(*p, a), activities_via_tight_sets(*p, f, a));
    }
  }
}

TEST(TutteDirect, Examples) {
  EXPECT_EQ(tutte_direct(validate_basis_set(1, {{3}})), parse_bipoly("x + y - 1"));
  EXPECT_EQ(tutte_direct(u12()), parse_bipoly("x^2 + 2*x*y + y^2 - x - y"));
  EXPECT_EQ(tutte_direct(triangle()), parse_bipoly("x^2 + 2*x*y + y^2 - 1"));
  EXPECT_EQ(tutte_direct(u13()),
            parse_bipoly("x^3 + 3*x^2*y + 3*x*y^2 + y^3 - x^2 - 3*x*y - 2*y^2 + y"));
}

TEST(TutteDirect, ValueAtOneCountsBases) {
  for (const Polymatroid* p : {&u12(), &u13(), &triangle()}) {
    EXPECT_EQ(tutte_direct(*p).value_at_one(), Integer(p->size()));
  }
}

TEST(InteriorExterior, Examples) {
  EXPECT_EQ(interior_direct(u13()), parse_bipoly("1 + 2*x"));
  EXPECT_EQ(exterior_direct(u13()), parse_bipoly("1 + y + y^2"));
  const Polymatroid single = validate_basis_set(1, {{2}});
  EXPECT_EQ(interior_direct(single), BiPoly::constant(1));
  EXPECT_EQ(exterior_direct(single), BiPoly::constant(1));
  EXPECT_EQ(exterior_direct(triangle()), parse_bipoly("1 + 2*y"));
}

TEST(InteriorExterior, RecoveredFromTutteByReversal) {
  for (const Polymatroid* p : {&u12(), &u13(), &triangle()}) {
    const int n = p->ground_size();
    const BiPoly t = tutte_direct(*p);
    EXPECT_EQ(interior_direct(*p), reversed(at_one(t, Axis::kY), Axis::kX, n));
    EXPECT_EQ(exterior_direct(*p), reversed(at_one(t, Axis::kX), Axis::kY, n));
  }
}

}  // namespace
}  // namespace polytutte
