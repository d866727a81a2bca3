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
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "togglekit/enumerate.h"
#include "togglekit/generators.h"
#include "togglekit/matroid.h"

namespace togglekit {
namespace {

using ::togglekit::testing::ComponentCount;
using ::togglekit::testing::FamilyFromMasks;
using ::togglekit::testing::FilterSubsets;
using ::togglekit::testing::IsForest;
using ::togglekit::testing::MaskSet;
using ::togglekit::testing::OracleLess;

bool In(std::uint64_t m, std::size_t i) { return m >> i & 1; }

// Pairwise predicate over the elements of m.
template <typename Pred>
bool AllPairs(std::uint64_t m, std::size_t n, Pred ok) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && In(m, i) && In(m, j) && !ok(i, j)) return false;
    }
  }
  return true;
}

Poset ForkedPoset() {
  return Poset::FromLabels({"a", "b", "c", "d", "e"},
                           {{"a", "b"}, {"b", "c"}, {"a", "d"}, {"d", "e"}});
}

TEST(GeneratorsTest, PosetFamiliesMatchFilters) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Poset& p : AllPosets(n)) {
      const auto less = OracleLess(p);
      auto leq = [&](std::size_t i, std::size_t j) { return i == j || less[i][j]; };
      EXPECT_EQ(MaskSet(OrderIdeals(p)), FilterSubsets(n, [&](std::uint64_t m) {
                  for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                      if (In(m, j) && less[i][j] && !In(m, i)) return false;
                    }
                  }
                  return true;
                }));
      EXPECT_EQ(MaskSet(OrderFilters(p)), FilterSubsets(n, [&](std::uint64_t m) {
                  for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                      if (In(m, i) && less[i][j] && !In(m, j)) return false;
                    }
                  }
                  return true;
                }));
      EXPECT_EQ(MaskSet(Chains(p)), FilterSubsets(n, [&](std::uint64_t m) {
                  return AllPairs(m, n, [&](std::size_t i, std::size_t j) {
                    return leq(i, j) || leq(j, i);
                  });
                }));
      EXPECT_EQ(MaskSet(Antichains(p)), FilterSubsets(n, [&](std::uint64_t m) {
                  return AllPairs(m, n, [&](std::size_t i, std::size_t j) {
                    return !leq(i, j) && !leq(j, i);
                  });
                }));
      EXPECT_EQ(MaskSet(IntervalClosedSets(p)),
                FilterSubsets(n, [&](std::uint64_t m) {
                  for (std::size_t x = 0; x < n; ++x) {
                    for (std::size_t y = 0; y < n; ++y) {
                      for (std::size_t z = 0; z < n; ++z) {
                        if (In(m, x) && In(m, z) && leq(x, y) && leq(y, z) &&
                            !In(m, y)) {
                          return false;
                        }
                      }
                    }
                  }
                  return true;
                }));
    }
  }
}

TEST(GeneratorsTest, KnownCounts) {
  EXPECT_EQ(OrderIdeals(Poset::ProductOfChains(2, 3)).size(), 10u);
  EXPECT_EQ(OrderIdeals(Poset::Chain(4)).size(), 5u);
  EXPECT_EQ(IntervalClosedSets(ForkedPoset()).size(), 25u);
  EXPECT_EQ(IntervalClosedSets(Poset::Chain(4)).size(), 11u);
  EXPECT_EQ(AcyclicSubgraphs(Graph::Cycle(5)).size(), 31u);
  EXPECT_EQ(SpanningSubgraphs(Graph::Cycle(3)).size(), 4u);
  EXPECT_EQ(IndependentSets(Graph::Path(4)).size(), 8u);
}

TEST(GeneratorsTest, AntichainsAndIdealsAreEquinumerous) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Poset& p : AllPosets(n)) {
      EXPECT_EQ(OrderIdeals(p).size(), Antichains(p).size());
    }
  }
}

TEST(GeneratorsTest, GraphFamiliesMatchFilters) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Graph& g : AllGraphs(n)) {
      const std::uint64_t all = (std::uint64_t{1} << n) - 1;
      const auto independent = FilterSubsets(n, [&](std::uint64_t m) {
        for (const auto& [u, v] : g.edges()) {
          if (In(m, u) && In(m, v)) return false;
        }
        return true;
      });
      EXPECT_EQ(MaskSet(IndependentSets(g)), independent);
      std::set<std::uint64_t> complements;
      for (std::uint64_t m : independent) complements.insert(all & ~m);
      EXPECT_EQ(MaskSet(VertexCovers(g)), complements);
    }
  }
  for (std::size_t m = 0; m <= 6; ++m) {
    for (const Graph& g : AllGraphsWithEdges(m)) {
      const std::uint64_t all = (std::uint64_t{1} << m) - 1;
      const std::size_t base = ComponentCount(g.vertex_count(), g.edges(), all);
      EXPECT_EQ(MaskSet(AcyclicSubgraphs(g)), FilterSubsets(m, [&](std::uint64_t s) {
                  return IsForest(g.vertex_count(), g.edges(), s);
                }));
      EXPECT_EQ(MaskSet(SpanningSubgraphs(g)), FilterSubsets(m, [&](std::uint64_t s) {
                  return ComponentCount(g.vertex_count(), g.edges(), s) == base;
                }));
      EXPECT_TRUE(MatroidIndependents(Matroid::Graphic(g))
                      .SameMembers(AcyclicSubgraphs(g)));
    }
  }
}

TEST(GeneratorsTest, IntervalClosedSetsFormConvexGeometries) {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Poset& p : AllPosets(n)) {
      EXPECT_TRUE(IsConvexGeometry(IntervalClosedSets(p)));
    }
  }
}

TEST(GeneratorsTest, ConvexGeometryFailures) {
  EXPECT_EQ(CheckConvexGeometry(FamilyFromMasks(2, {0b01, 0b11})).failed_axiom,
            "empty");
  EXPECT_EQ(CheckConvexGeometry(FamilyFromMasks(2, {0b00, 0b01})).failed_axiom,
            "full");
  EXPECT_EQ(CheckConvexGeometry(FamilyFromMasks(2, {0b00, 0b01, 0b10, 0b11}))
                .ok,
            true);
  const ConvexGeometryCheck inter =
      CheckConvexGeometry(FamilyFromMasks(3, {0b000, 0b011, 0b110, 0b111}));
  EXPECT_EQ(inter.failed_axiom, "intersection");
  const ConvexGeometryCheck aug =
      CheckConvexGeometry(FamilyFromMasks(2, {0b00, 0b11}));
  EXPECT_EQ(aug.failed_axiom, "augmentation");
  ASSERT_TRUE(aug.x.has_value());
  EXPECT_TRUE(aug.x->none());
}

}  // namespace
}  // namespace togglekit
