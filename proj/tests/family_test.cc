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


#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "togglekit/errors.h"
#include "togglekit/family.h"
#include "togglekit/permutation.h"
#include "togglekit/subset.h"
#include "togglekit/toggles.h"

namespace togglekit {
namespace {

using ::togglekit::testing::Mask;
using ::togglekit::testing::MaskToggles;

SubsetFamily SampleFamily() {
  return SubsetFamily::FromLabels(
      GroundSet::Numbered(4),
      {{}, {"1"}, {"1", "2"}, {"1", "3"}, {"1", "2", "3"}, {"1", "2", "3", "4"}});
}

TEST(SubsetTest, BasicOperations) {
  Subset a = Subset::FromIndices(70, {0, 3, 65});
  Subset b = Subset::FromIndices(70, {3, 66});
  EXPECT_EQ(a.count(), 3u);
  EXPECT_TRUE(a.test(65));
  EXPECT_EQ((a | b).Elements(), (std::vector<std::size_t>{0, 3, 65, 66}));
  EXPECT_EQ((a & b).Elements(), (std::vector<std::size_t>{3}));
  EXPECT_EQ((a - b).Elements(), (std::vector<std::size_t>{0, 65}));
  EXPECT_EQ(a.Complement().count(), 67u);
  EXPECT_TRUE((a & b).IsSubsetOf(a));
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_EQ(Subset(5).First(), 5u);
  EXPECT_EQ(a.Toggled(0).First(), 3u);
}

TEST(SubsetTest, CanonicalOrderIsCardinalityThenValue) {
  const Subset x = Subset::FromWord(3, 0b100);
  const Subset y = Subset::FromWord(3, 0b011);
  EXPECT_TRUE(Subset::CanonicalLess(x, y));
  EXPECT_TRUE(Subset::ValueLess(y, x));
}

TEST(GroundSetTest, LabelsAndFormatting) {
  GroundSet g({"a", "b", "c"});
  EXPECT_EQ(g.IndexOf("b"), 1u);
  EXPECT_FALSE(g.Find("z").has_value());
  EXPECT_THROW(g.IndexOf("z"), DomainError);
  EXPECT_EQ(g.Format(g.MakeSubset({"c", "a"})), "{a,c}");
  EXPECT_EQ(g.Format(Subset(3)), "{}");
  EXPECT_THROW(GroundSet({"a", "a"}), ValidationError);
}

TEST(SubsetFamilyTest, GivenOrderIsPreserved) {
  const SubsetFamily f = SampleFamily();
  EXPECT_EQ(f.size(), 6u);
  EXPECT_EQ(Mask(f.member(3)), 0b101u);
  EXPECT_EQ(f.IndexOf(f.ground().MakeSubset({"1", "2"})), 2u);
  EXPECT_THROW(SubsetFamily::FromLabels(GroundSet::Numbered(2), {{"1"}, {"1"}}),
               DomainError);
}

TEST(SubsetFamilyTest, CanonicalOrderDeduplicatesAndSorts) {
  const GroundSet g = GroundSet::Numbered(3);
  SubsetFamily f(g, {g.MakeSubset({"1", "2"}), g.MakeSubset({"3"}),
                     g.MakeSubset({}), g.MakeSubset({"3"})});
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(Mask(f.member(0)), 0u);
  EXPECT_EQ(Mask(f.member(1)), 0b100u);
  EXPECT_EQ(Mask(f.member(2)), 0b011u);
  EXPECT_TRUE(f.SameMembers(f.Canonicalized()));
}

TEST(ToggleTest, ExampleValues) {
  const SubsetFamily f = SampleFamily();
  const GroundSet& g = f.ground();
  EXPECT_EQ(ApplyToggle(f, "4", g.MakeSubset({"1", "2", "3"})),
            g.MakeSubset({"1", "2", "3", "4"}));
  EXPECT_EQ(ApplyToggle(f, "2", g.MakeSubset({"1", "2", "3", "4"})),
            g.MakeSubset({"1", "2", "3", "4"}));
  EXPECT_EQ(TogglePermutation(f, 0).ToCycleString(), "(1,2)");
  EXPECT_THROW(ApplyToggle(f, 0, g.MakeSubset({"2"})), DomainError);
  EXPECT_THROW(ApplyToggle(f, 7, Subset(4)), DomainError);
}

TEST(ToggleTest, ElementInEveryMemberGivesIdentity) {
  const SubsetFamily f = SubsetFamily::FromLabels(
      GroundSet::Numbered(3), {{"1"}, {"1", "2"}, {"1", "3"}});
  EXPECT_TRUE(TogglePermutation(f, 0).IsIdentity());
}

TEST(ToggleTest, InvolutionAndCycleStringsMatchMaskOracle) {
  // Every family on 3 elements with up to 8 members.
  for (std::uint64_t pick = 1; pick < 256; ++pick) {
    std::vector<Subset> members;
    for (std::uint64_t m = 0; m < 8; ++m) {
      if (pick >> m & 1) members.push_back(Subset::FromWord(3, m));
    }
    const SubsetFamily f(GroundSet::Numbered(3), members, MemberOrder::kGiven);
    const auto oracle = MaskToggles(f);
    const auto cycles = ToggleCycleStrings(f);
    for (std::size_t e = 0; e < 3; ++e) {
      for (const Subset& x : f.members()) {
        EXPECT_EQ(ApplyToggle(f, e, ApplyToggle(f, e, x)), x);
      }
      EXPECT_EQ(Permutation::FromCycleString(cycles[e], f.size()), oracle[e]);
    }
  }
}

TEST(ToggleTest, WordConventions) {
  const SubsetFamily f = SampleFamily();
  EXPECT_TRUE(WordPermutation(f, {}).IsIdentity());
  EXPECT_TRUE(WordPermutation(f, {1, 1}).IsIdentity());
  const std::vector<std::size_t> w1 = {0, 2};
  const std::vector<std::size_t> w2 = {3, 1, 0};
  std::vector<std::size_t> both = w1;
  both.insert(both.end(), w2.begin(), w2.end());
  EXPECT_EQ(WordPermutation(f, both), WordPermutation(f, w1) * WordPermutation(f, w2));
  // [1, 4] applies t_4 first: {1,2,3} -> {1,2,3,4} -> {2,3,4} is outside L,
  // so t_1 fixes it.
  const GroundSet& g = f.ground();
  EXPECT_EQ(ApplyWord(f, WordFromLabels(f, {"1", "4"}), g.MakeSubset({"1", "2", "3"})),
            g.MakeSubset({"1", "2", "3", "4"}));
  EXPECT_EQ(ApplyWord(f, WordFromLabels(f, {"4", "1"}), g.MakeSubset({"1"})),
            Subset(4));
}

TEST(FamilyOpsTest, UnionsAndRestrictions) {
  const GroundSet g = GroundSet::Numbered(2);
  const SubsetFamily a(g, {Subset(2)});
  const SubsetFamily b(g, {g.MakeSubset({"1"})});
  const SubsetFamily u = UnionFamilies(a, b);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_TRUE(UnionFamilies(u, u).SameMembers(u));
  EXPECT_THROW(UnionFamilies(a, SubsetFamily(GroundSet::Numbered(3), {})),
               DomainError);
  const SubsetFamily f = SampleFamily();
  EXPECT_EQ(MembersContaining(f, 1).size(), 3u);
  EXPECT_EQ(MembersAvoiding(f, 1).size(), 3u);
}

TEST(FamilyOpsTest, ClosurePredicatesMatchBruteForce) {
  for (std::uint64_t pick = 0; pick < 256; ++pick) {
    std::vector<Subset> members;
    std::set<std::uint64_t> in;
    for (std::uint64_t m = 0; m < 8; ++m) {
      if (pick >> m & 1) {
        members.push_back(Subset::FromWord(3, m));
        in.insert(m);
      }
    }
    bool unions = true;
    bool intersections = true;
    for (std::uint64_t x : in) {
      for (std::uint64_t y : in) {
        unions = unions && in.count(x | y);
        intersections = intersections && in.count(x & y);
      }
    }
    const SubsetFamily f(GroundSet::Numbered(3), members);
    EXPECT_EQ(IsUnionClosed(f), unions) << pick;
    EXPECT_EQ(IsIntersectionClosed(f), intersections) << pick;
  }
}

}  // namespace
}  // namespace togglekit
