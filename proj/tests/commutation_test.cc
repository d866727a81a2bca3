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
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "togglekit/commutation.h"
#include "togglekit/enumerate.h"
#include "togglekit/errors.h"
#include "togglekit/generators.h"

namespace togglekit {
namespace {

using ::togglekit::testing::FamilyFromMasks;
using ::togglekit::testing::MaskToggles;

// (t_e t_f)^2 = 1 on the mask-level toggles.
CommutationMatrix OracleCommutation(const SubsetFamily& f) {
  const auto t = MaskToggles(f);
  CommutationMatrix out(t.size(), std::vector<bool>(t.size()));
  for (std::size_t e = 0; e < t.size(); ++e) {
    for (std::size_t g = 0; g < t.size(); ++g) {
      const Permutation p = t[e] * t[g];
      out[e][g] = (p * p).IsIdentity();
    }
  }
  return out;
}

TEST(CommutationTest, KindNames) {
  for (FamilyKind k : AllFamilyKinds()) {
    EXPECT_EQ(ParseFamilyKind(ToString(k)), k);
  }
  EXPECT_EQ(AllFamilyKinds().size(), 9u);
  EXPECT_EQ(ToString(FamilyKind::kIntervalClosed), "ic");
  EXPECT_THROW(ParseFamilyKind("ideals"), ParseError);
  EXPECT_THROW(GenerateFamily(FamilyKind::kChains, Source(Graph::Path(2))),
               DomainError);
}

TEST(CommutationTest, ActualMatchesBruteForce) {
  for (std::uint64_t pick = 1; pick < 65536; pick += 7) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < 16; ++m) {
      if (pick >> m & 1) masks.push_back(m);
    }
    const SubsetFamily f = FamilyFromMasks(4, masks);
    const CommutationMatrix actual = CommutationGraph(f).actual;
    EXPECT_EQ(actual, OracleCommutation(f)) << pick;
    for (std::size_t e = 0; e < 4; ++e) {
      EXPECT_TRUE(actual[e][e]);
      for (std::size_t g = 0; g < 4; ++g) EXPECT_EQ(actual[e][g], actual[g][e]);
    }
  }
}

TEST(CommutationTest, ExamplePredictions) {
  // Order ideals of a 3-chain: neighbours do not commute, 1 and 3 do.
  const CommutationMatrix j =
      PredictCommutation(FamilyKind::kOrderIdeals, Source(Poset::Chain(3)));
  EXPECT_FALSE(j[0][1]);
  EXPECT_TRUE(j[0][2]);
  // Interval-closed sets of a 2-chain: a minimal-maximal cover commutes.
  EXPECT_TRUE(PredictCommutation(FamilyKind::kIntervalClosed,
                                 Source(Poset::Chain(2)))[0][1]);
  EXPECT_FALSE(PredictCommutation(FamilyKind::kIntervalClosed,
                                  Source(Poset::Chain(3)))[0][1]);
  // Independent sets of a path: adjacent vertices do not commute.
  const CommutationMatrix is =
      PredictCommutation(FamilyKind::kIndependentSets, Source(Graph::Path(3)));
  EXPECT_FALSE(is[0][1]);
  EXPECT_TRUE(is[0][2]);
  // Acyclic subgraphs of a triangle: every pair lies on the cycle.
  const CommutationMatrix acyclic =
      PredictCommutation(FamilyKind::kAcyclicSubgraphs, Source(Graph::Cycle(3)));
  EXPECT_FALSE(acyclic[0][2]);
}

TEST(CommutationTest, PredictionsHoldOnSmallSources) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Poset& p : AllPosets(n)) {
      for (FamilyKind k : {FamilyKind::kOrderIdeals, FamilyKind::kChains,
                           FamilyKind::kAntichains, FamilyKind::kIntervalClosed}) {
        const CommutationReport r = VerifyCommutation(k, Source(p));
        EXPECT_TRUE(r.ok()) << ToString(k);
        EXPECT_EQ(r.actual, OracleCommutation(GenerateFamily(k, Source(p))));
      }
    }
    for (const Graph& g : AllGraphs(n)) {
      EXPECT_TRUE(VerifyCommutation(FamilyKind::kIndependentSets, Source(g)).ok());
      EXPECT_TRUE(VerifyCommutation(FamilyKind::kVertexCovers, Source(g)).ok());
    }
  }
  for (std::size_t m = 1; m <= 5; ++m) {
    for (const Graph& g : AllGraphsWithEdges(m)) {
      EXPECT_TRUE(VerifyCommutation(FamilyKind::kAcyclicSubgraphs, Source(g)).ok());
      EXPECT_TRUE(VerifyCommutation(FamilyKind::kSpanningSubgraphs, Source(g)).ok());
    }
  }
  for (const Matroid& m : AllMatroids(4)) {
    EXPECT_TRUE(VerifyCommutation(FamilyKind::kMatroidIndependents, Source(m)).ok());
  }
}

TEST(CommutationTest, ChainsOfAnAntichain) {
  // {∅, 1, 2}: the two toggles generate S_3 and do not commute.
  const CommutationReport r = CommutationGraph(Chains(Poset::Antichain(2)));
  EXPECT_FALSE(r.predicted.has_value());
  EXPECT_FALSE(r.actual[0][1]);
  EXPECT_TRUE(VerifyCommutation(FamilyKind::kChains, Source(Poset::Antichain(2))).ok());
}

}  // namespace
}  // namespace togglekit
