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
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "togglekit/decompose.h"
#include "togglekit/generators.h"
#include "togglekit/poset.h"

namespace togglekit {
namespace {

using ::togglekit::testing::BruteToggleGroupOrder;
using ::togglekit::testing::FamilyFromMasks;
using ::togglekit::testing::Masks;

std::vector<std::uint64_t> MasksFrom(std::uint64_t pick, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (pick >> m & 1) out.push_back(m);
  }
  return out;
}

// Elements that vary across the given masks.
std::uint64_t Support(const std::vector<std::uint64_t>& masks) {
  std::uint64_t any = 0;
  std::uint64_t all = ~std::uint64_t{0};
  for (std::uint64_t m : masks) {
    any |= m;
    all &= m;
  }
  return masks.empty() ? 0 : any & ~all;
}

// Component label of each member under single-element toggles.
std::vector<std::size_t> ToggleComponents(const std::vector<std::uint64_t>& l) {
  std::vector<std::size_t> comp(l.size(), l.size());
  std::size_t next = 0;
  for (std::size_t s = 0; s < l.size(); ++s) {
    if (comp[s] != l.size()) continue;
    std::vector<std::size_t> stack = {s};
    comp[s] = next;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < l.size(); ++j) {
        const std::uint64_t d = l[i] ^ l[j];
        if (comp[j] == l.size() && d && !(d & (d - 1))) {
          comp[j] = next;
          stack.push_back(j);
        }
      }
    }
    ++next;
  }
  return comp;
}

// Whether the members split into two unions of toggle components with
// disjoint supports.
bool OracleHasSum(const std::vector<std::uint64_t>& l) {
  const auto comp = ToggleComponents(l);
  std::size_t k = 0;
  for (std::size_t c : comp) k = std::max(k, c + 1);
  for (std::uint64_t side = 1; side + 1 < (std::uint64_t{1} << k); ++side) {
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> b;
    for (std::size_t i = 0; i < l.size(); ++i) {
      (side >> comp[i] & 1 ? a : b).push_back(l[i]);
    }
    if ((Support(a) & Support(b)) == 0) return true;
  }
  return false;
}

// Number of blocks in the finest product partition of a family whose
// elements are all non-constant and pairwise distinguishable.
std::size_t OracleProductBlocks(std::size_t n, const std::vector<std::uint64_t>& l) {
  std::size_t best = 1;
  // Restricted growth strings enumerate set partitions of {0..n-1}.
  std::vector<std::size_t> block(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t used) {
    if (i == n) {
      std::size_t product = 1;
      for (std::size_t b = 0; b < used; ++b) {
        std::uint64_t mask = 0;
        for (std::size_t e = 0; e < n; ++e) {
          if (block[e] == b) mask |= std::uint64_t{1} << e;
        }
        std::set<std::uint64_t> proj;
        for (std::uint64_t m : l) proj.insert(m & mask);
        product *= proj.size();
      }
      if (product == l.size()) best = std::max(best, used);
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return best;
}

bool Distinguishable(std::size_t n, const std::vector<std::uint64_t>& l) {
  std::set<std::uint64_t> columns;
  const std::uint64_t full = (std::uint64_t{1} << l.size()) - 1;
  for (std::size_t e = 0; e < n; ++e) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l[i] >> e & 1) c |= std::uint64_t{1} << i;
    }
    if (c == 0 || c == full || !columns.insert(c).second) return false;
  }
  return true;
}

TEST(SumTest, TaggedUnionOfIdealLatticesSplits) {
  // J(2-chain) tagged with element 3, J(antichain on {4,5}) tagged with 6.
  const SubsetFamily l = FamilyFromMasks(
      6, {0b000100, 0b000101, 0b000111, 0b100000, 0b101000, 0b110000, 0b111000});
  const auto split = DetectToggleDisjointSum(l);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->first_positions, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(split->second_positions, (std::vector<std::size_t>{3, 4, 5, 6}));
  EXPECT_EQ(BruteToggleGroupOrder(l),
            BruteToggleGroupOrder(split->first) *
                BruteToggleGroupOrder(split->second));
}

TEST(SumTest, SharedMemberIsNotASum) {
  // {∅, a} ∪ {∅, c} shares ∅ and generates S_3.
  const SubsetFamily l = FamilyFromMasks(2, {0b00, 0b01, 0b10});
  EXPECT_FALSE(DetectToggleDisjointSum(l).has_value());
  EXPECT_EQ(BruteToggleGroupOrder(l), 6u);
}

TEST(SumTest, MatchesBruteForceOnFourElements) {
  for (std::uint64_t pick = 1; pick < 65536; ++pick) {
    const auto masks = MasksFrom(pick, 4);
    const SubsetFamily l = FamilyFromMasks(4, masks);
    const auto split = DetectToggleDisjointSum(l);
    ASSERT_EQ(split.has_value(), OracleHasSum(masks)) << pick;
    if (!split) continue;
    const auto a = Masks(split->first);
    const auto b = Masks(split->second);
    EXPECT_EQ(Support(a) & Support(b), 0u) << pick;
    for (std::uint64_t x : a) {
      for (std::uint64_t y : b) {
        const std::uint64_t d = x ^ y;
        EXPECT_TRUE(d & (d - 1)) << pick;
      }
    }
    if (l.size() > 7) continue;
    EXPECT_EQ(BruteToggleGroupOrder(l),
              BruteToggleGroupOrder(split->first) *
                  BruteToggleGroupOrder(split->second))
        << pick;
  }
}

TEST(ProductTest, IdealsOfDisjointSumFactor) {
  const Poset p = Poset::DisjointSum(Poset::Chain(2),
                                     Poset::FromLabels({"x", "y"}, {{"y", "x"}}));
  const SubsetFamily l = OrderIdeals(p);
  const auto split = DetectToggleDisjointProduct(l);
  ASSERT_TRUE(split.has_value());
  ASSERT_EQ(split->blocks.size(), 2u);
  EXPECT_EQ(split->blocks[0], Subset::FromWord(4, 0b0011));
  EXPECT_EQ(split->blocks[1], Subset::FromWord(4, 0b1100));
  EXPECT_EQ(split->factors[0].size() * split->factors[1].size(), l.size());
}

TEST(ProductTest, ContractedClassesStayInOneBlock) {
  // {∅, 12} x {∅, 3}: the class {1,2} expands back into one block.
  const SubsetFamily l = FamilyFromMasks(3, {0b000, 0b011, 0b100, 0b111});
  const auto split = DetectToggleDisjointProduct(l);
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->blocks[0], Subset::FromWord(3, 0b011));
  EXPECT_EQ(split->blocks[1], Subset::FromWord(3, 0b100));
  EXPECT_EQ(BruteToggleGroupOrder(l),
            BruteToggleGroupOrder(split->factors[0]) *
                BruteToggleGroupOrder(split->factors[1]));
}

TEST(ProductTest, MatchesBruteForcePartitions) {
  for (std::uint64_t pick = 1; pick < 65536; ++pick) {
    const auto masks = MasksFrom(pick, 4);
    if (!Distinguishable(4, masks)) continue;
    const SubsetFamily l = FamilyFromMasks(4, masks);
    const auto split = DetectToggleDisjointProduct(l);
    const std::size_t blocks = OracleProductBlocks(4, masks);
    ASSERT_EQ(split ? split->blocks.size() : 1u, blocks) << pick;
    if (!split) continue;
    std::size_t product = 1;
    for (const SubsetFamily& f : split->factors) product *= f.size();
    EXPECT_EQ(product, l.size()) << pick;
    if (l.size() <= 7) {
      std::size_t order = 1;
      for (const SubsetFamily& f : split->factors) {
        order *= BruteToggleGroupOrder(f);
      }
      EXPECT_EQ(order, BruteToggleGroupOrder(l)) << pick;
    }
    // Reassembling one projection per factor yields every member.
    for (std::uint64_t m : masks) {
      std::uint64_t rebuilt = 0;
      for (const Subset& b : split->blocks) rebuilt |= m & b.word(0);
      EXPECT_EQ(rebuilt, m);
    }
  }
}

TEST(ProductTest, ProjectKeepsFirstSeenOrder) {
  const SubsetFamily l = FamilyFromMasks(2, {0b11, 0b00, 0b01, 0b10});
  EXPECT_EQ(Masks(Project(l, Subset::FromWord(2, 0b01))),
            (std::vector<std::uint64_t>{0b01, 0b00}));
}

}  // namespace
}  // namespace togglekit
