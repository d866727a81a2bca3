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


#include <string>

#include "gtest/gtest.h"
#include "togglekit/closure_system.h"
#include "togglekit/errors.h"
#include "togglekit/generators.h"
#include "togglekit/json_io.h"
#include "togglekit/perm_group.h"

namespace togglekit {
namespace {

std::string ParseErrorOf(const Json& j, SubsetFamily (*reader)(const Json&)) {
  try {
    reader(j);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(JsonIoTest, SyntaxErrorsNameLineAndColumn) {
  try {
    ParseJsonText("{\n  \"ground\": [1,,]\n}", "bad.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.json:2:"), std::string::npos)
        << e.what();
  }
  EXPECT_THROW(ReadJsonFile("/nonexistent/file.json"), ParseError);
}

TEST(JsonIoTest, FamilyRoundTripKeepsGivenOrder) {
  const Json j = ParseJsonText(
      R"({"ground": ["a", "b"], "members": [["a", "b"], [], ["b"]]})");
  const SubsetFamily f = FamilyFromJson(j);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.member(0).count(), 2u);
  const SubsetFamily again = FamilyFromJson(ToJson(f));
  EXPECT_EQ(again.members(), f.members());
  EXPECT_EQ(again.ground(), f.ground());
  const Json canonical = ParseJsonText(
      R"({"ground": ["a", "b"], "members": [["a", "b"], []], "order": "canonical"})");
  EXPECT_TRUE(FamilyFromJson(canonical).member(0).none());
}

TEST(JsonIoTest, FamilyErrorsNameThePath) {
  EXPECT_EQ(ParseErrorOf(ParseJsonText(R"({"ground": ["a"], "members": [["x"]]})"),
                         FamilyFromJson),
            "$.members[0][0]: unknown element 'x'");
  EXPECT_EQ(ParseErrorOf(ParseJsonText(R"({"members": []})"), FamilyFromJson),
            "$: missing key \"ground\"");
  EXPECT_NE(ParseErrorOf(ParseJsonText(R"({"ground": ["a"], "members": [[], []]})"),
                         FamilyFromJson),
            "");
  EXPECT_NE(ParseErrorOf(ParseJsonText(
                             R"({"ground": ["a"], "members": [], "order": "x"})"),
                         FamilyFromJson)
                .find("$.order"),
            std::string::npos);
}

TEST(JsonIoTest, SourcesRoundTrip) {
  const Poset p = Poset::ProductOfChains(2, 2);
  const Poset q = PosetFromJson(ToJson(p));
  EXPECT_EQ(q.labels(), p.labels());
  EXPECT_EQ(q.covers(), p.covers());
  const Graph g = Graph::Cycle(4);
  const Graph h = GraphFromJson(ToJson(g));
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_EQ(h.edge_labels(), g.edge_labels());
  const Matroid m = Matroid::Cographic(g);
  const Matroid n = MatroidFromJson(ToJson(m));
  EXPECT_EQ(n.kind(), MatroidKind::kCographic);
  EXPECT_TRUE(n.independents().SameMembers(m.independents()));
  const Matroid e = Matroid::Explicit(m.independents());
  EXPECT_TRUE(MatroidFromJson(ToJson(e)).independents().SameMembers(
      m.independents()));
  EXPECT_TRUE(std::holds_alternative<Poset>(SourceFromJson(ToJson(p))));
  EXPECT_TRUE(std::holds_alternative<Graph>(SourceFromJson(ToJson(g))));
  EXPECT_TRUE(std::holds_alternative<Matroid>(SourceFromJson(ToJson(m))));
  EXPECT_THROW(SourceFromJson(ParseJsonText("{}")), ParseError);
}

TEST(JsonIoTest, ValidationFailuresBecomeParseErrors) {
  EXPECT_THROW(PosetFromJson(ParseJsonText(
                   R"({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})")),
               ParseError);
  EXPECT_THROW(MatroidFromJson(ParseJsonText(
                   R"({"kind": "explicit", "ground": ["a"], "independents": [["a"]]})")),
               ParseError);
  EXPECT_THROW(ClosureSystemFromJson(ParseJsonText(
                   R"({"ground": ["a"], "closed_sets": [[]]})")),
               ParseError);
}

TEST(JsonIoTest, GroupSummary) {
  const SubsetFamily f = OrderIdeals(Poset::Chain(2));
  const Json j = ToJson(GroupFromToggles(f));
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["order"], "6");
  EXPECT_EQ(j["classification"], "Symmetric");
  EXPECT_EQ(j["generators"], Json::parse(R"j(["(1,2)", "(2,3)"])j"));
}

TEST(JsonIoTest, CoverClosureTable) {
  const ClosureSystem c = ClosureSystem::OfOrderIdeals(Poset::Chain(2));
  const Json j = CoverClosureToJson(c, true);
  EXPECT_EQ(j["bijective"], true);
  EXPECT_EQ(j["xi"][0]["set"], Json::array());
  EXPECT_EQ(j["xi"][0]["image"], Json::parse(R"(["1"])"));
  ASSERT_EQ(j["orbits"].size(), 1u);
  EXPECT_EQ(j["orbits"][0]["cycle"].size(), 3u);
}

TEST(JsonIoTest, FormatKeepsFlatArraysOnOneLine) {
  const Json j = ParseJsonText(R"({"a": [[1, 2], [3]], "b": {"c": "d"}})");
  const std::string s = FormatJson(j);
  EXPECT_NE(s.find("[[1,2],[3]]"), std::string::npos) << s;
  EXPECT_EQ(ParseJsonText(s), j);
}

}  // namespace
}  // namespace togglekit
