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
#include "polytutte/config.hpp"
#include "polytutte/io.hpp"

namespace polytutte::io {
namespace {

TEST(Input, DetectsKinds) {
  EXPECT_EQ(detect_kind(parse_json(R"({"n":1,"bases":[[0]]})")), InputKind::kBases);
  EXPECT_EQ(detect_kind(parse_json(R"({"n":1,"f":[0,1]})")), InputKind::kRank);
  EXPECT_EQ(detect_kind(parse_json(R"({"vertices":["a"],"hyperedges":[["a"]]})")),
            InputKind::kHypergraph);
  EXPECT_THROW(detect_kind(parse_json("[1, 2]")), Error);
  EXPECT_THROW(parse_json("{"), Error);
}

TEST(Input, BasesAndRankAgree) {
  const LoadedInput a = load_input(parse_json(R"({"n":3,"bases":[[1,0,0],[0,1,0],[0,0,1]]})"));
  const LoadedInput b = load_input(parse_json(R"({"n":3,"f":[0,1,1,1,1,1,1,1]})"));
  EXPECT_EQ(a.polymatroid, b.polymatroid);
  EXPECT_EQ(a.rank, b.rank);
  EXPECT_FALSE(a.hypergraph.has_value());
}

TEST(Input, HypergraphFormatsAgree) {
  const LoadedInput a =
      load_input(parse_json(R"({"vertices":["v1","v2"],"hyperedges":[["v1","v2"],["v1","v2"]]})"));
  const LoadedInput b = load_input(parse_json(
      R"({"E":["e1","e2"],"V":["v1","v2"],"edges":[["e1","v1"],["e1","v2"],["e2","v1"],["e2","v2"]]})"));
  EXPECT_EQ(a.polymatroid, b.polymatroid);
  ASSERT_TRUE(a.hypergraph && b.hypergraph);
  EXPECT_EQ(*a.hypergraph, *b.hypergraph);
  EXPECT_EQ(tutte_direct(a.polymatroid), parse_bipoly("x^2 + 2*x*y + y^2 - x - y"));
}

TEST(Input, Errors) {
  auto kind = [](const char* text) {
    try {
      load_input(parse_json(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInvalidArgument;
  };
  EXPECT_EQ(kind(R"({"n":2,"bases":[[1,0],[0,2]]})"), ErrorKind::kUnequalSums);
  EXPECT_EQ(kind(R"({"n":2,"bases":[[1,0,0]]})"), ErrorKind::kParse);
  EXPECT_EQ(kind(R"({"bases":[[1]]})"), ErrorKind::kParse);
  EXPECT_EQ(kind(R"({"n":2,"f":[1,1,1,1]})"), ErrorKind::kNonzeroEmptySet);
  EXPECT_EQ(kind(R"({"E":["e"],"V":["v"],"edges":[["x","v"]]})"), ErrorKind::kParse);
}

TEST(Output, RoundTrips) {
  const Polymatroid p = validate_basis_set(2, {{2, 0}, {1, 1}, {0, 2}});
  EXPECT_EQ(polymatroid_from_json(to_json(p)), p);
  const RankTable f = rank_from_bases(p);
  EXPECT_EQ(rank_table_from_json(to_json(f)), f);
  const Hypergraph h = Hypergraph::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(hypergraph_from_json(to_json(h)), h);
  const BiPoly t = parse_bipoly("x^2 + 2*x*y + y^2 - 1");
  EXPECT_EQ(bipoly_from_json(to_json(t)), t);
  EXPECT_EQ(to_json(t).dump(), R"([[2,0,"1"],[1,1,"2"],[0,2,"1"],[0,0,"-1"]])");
}

TEST(Output, BigCoefficientsSurviveJson) {
  const BiPoly big = BiPoly::constant(Integer("123456789012345678901234567890"));
  EXPECT_EQ(bipoly_from_json(to_json(big)), big);
  EXPECT_TRUE(integer_json(Integer("123456789012345678901234567890")).is_string());
  EXPECT_TRUE(integer_json(Integer(-5)).is_number_integer());
}

TEST(Targets, Forms) {
  const auto plain = targets_from_json(parse_json(R"(["x + y - 1", [[1,0,"1"]]])"));
  ASSERT_EQ(plain.size(), 2u);
  EXPECT_EQ(plain[0].name, "target1");
  EXPECT_EQ(plain[1].tutte, BiPoly::x());
  const auto named = targets_from_json(parse_json(R"({"targets":[{"name":"a","tutte":"y"}]})"));
  ASSERT_EQ(named.size(), 1u);
  EXPECT_EQ(named[0].name, "a");
  EXPECT_EQ(named[0].tutte, BiPoly::y());
}

TEST(Config, Validation) {
  RunConfig config;
  EXPECT_NO_THROW(config.validate());
  config.max_n = 17;
  EXPECT_THROW(config.validate(), Error);
  config.max_n = 3;
  config.jobs = 0;
  EXPECT_THROW(config.validate(), Error);
  EXPECT_EQ(parse_output_format("json"), OutputFormat::kJson);
  EXPECT_THROW(parse_output_format("xml"), Error);
  EXPECT_EQ(parse_input_kind("polymatroid"), InputKind::kBases);
  EXPECT_THROW(parse_input_kind("graph"), Error);
}

}  // namespace
}  // namespace polytutte::io
