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


#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "togglekit/generators.h"
#include "togglekit/structure_report.h"

namespace togglekit {
namespace {

using ::togglekit::testing::BruteToggleGroupOrder;
using ::togglekit::testing::FamilyFromMasks;

TEST(StructureReportTest, IndependentSetsOfTwoEdges) {
  const Graph g = Graph::FromLabels({"1", "2", "3", "4"}, {{"1", "2"}, {"3", "4"}});
  const SubsetFamily is = IndependentSets(g);
  ASSERT_EQ(is.size(), 9u);
  const StructureReport r = BuildStructureReport(is);
  ASSERT_EQ(r.factors.size(), 2u);
  for (const FactorReport& f : r.factors) {
    EXPECT_EQ(f.degree, 3u);
    EXPECT_EQ(*f.order, 6);
    EXPECT_EQ(*f.classification, GroupClass::kSymmetric);
  }
  EXPECT_EQ(*r.factor_order_product, 36);
  EXPECT_EQ(*r.whole_order, BruteToggleGroupOrder(is));
  EXPECT_TRUE(r.consistent);
  EXPECT_FALSE(r.trace.empty());
}

TEST(StructureReportTest, IdealsOfADisjointSum) {
  const Poset p = Poset::DisjointSum(
      Poset::Chain(2), Poset::FromLabels({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}}));
  const StructureReport r = BuildStructureReport(OrderIdeals(p));
  ASSERT_EQ(r.factors.size(), 2u);
  // J(2-chain) has 3 ideals, J of the V-shaped poset has 5.
  std::multiset<std::size_t> degrees;
  for (const FactorReport& f : r.factors) degrees.insert(f.degree);
  EXPECT_EQ(degrees, (std::multiset<std::size_t>{3, 5}));
  EXPECT_EQ(*r.factor_order_product, *r.whole_order);
  EXPECT_EQ(*r.whole_order, 6 * 120);
}

TEST(StructureReportTest, HeightTwoPosetGivesBooleanLattice) {
  // Without 3-element chains every subset is interval-closed.
  const Poset p = Poset::FromLabels({"a", "b", "c", "d"},
                                    {{"a", "c"}, {"b", "c"}, {"b", "d"}});
  const SubsetFamily ic = IntervalClosedSets(p);
  ASSERT_EQ(ic.size(), 16u);
  const StructureReport r = BuildStructureReport(ic);
  EXPECT_EQ(r.factors.size(), 4u);
  EXPECT_EQ(*r.factor_order_product, 16);
  EXPECT_EQ(*r.whole_order, 16);
}

TEST(StructureReportTest, FactorOrdersMultiplyOnRandomFamilies) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 400; ++trial) {
    std::set<std::uint64_t> chosen;
    const std::size_t size = 1 + rng() % 10;
    while (chosen.size() < size) chosen.insert(rng() % 32);
    const SubsetFamily l =
        FamilyFromMasks(5, std::vector<std::uint64_t>(chosen.begin(), chosen.end()));
    const StructureReport r = BuildStructureReport(l);
    ASSERT_TRUE(r.factor_order_product.has_value());
    EXPECT_TRUE(r.consistent);
    if (l.size() <= 8) {
      EXPECT_EQ(*r.factor_order_product, BruteToggleGroupOrder(l)) << trial;
    } else {
      EXPECT_EQ(*r.factor_order_product, *r.whole_order) << trial;
    }
  }
}

TEST(StructureReportTest, ItaIsAttachedWhenRequested) {
  StructureOptions options;
  options.ita = true;
  const StructureReport r =
      BuildStructureReport(OrderIdeals(Poset::Chain(5)), options);
  ASSERT_EQ(r.factors.size(), 1u);
  ASSERT_TRUE(r.factors[0].ita.has_value());
  EXPECT_EQ(r.factors[0].ita->verdict, ItaVerdict::kCertified);
}

TEST(StructureReportTest, ClassificationLimitLeavesOrdersUnset) {
  StructureOptions options;
  options.limits.classify_degree = 4;
  const StructureReport r =
      BuildStructureReport(OrderIdeals(Poset::Chain(5)), options);
  EXPECT_FALSE(r.factors[0].order.has_value());
  EXPECT_FALSE(r.whole_order.has_value());
  EXPECT_TRUE(r.consistent);
}

}  // namespace
}  // namespace togglekit
