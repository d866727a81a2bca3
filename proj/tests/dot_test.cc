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
#include "togglekit/dot.h"
#include "togglekit/generators.h"

namespace togglekit {
namespace {

std::size_t Count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = s.find(needle); at != std::string::npos;
       at = s.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

TEST(DotTest, TogglePoset) {
  const std::string dot = TogglePosetDot(OrderIdeals(Poset::Chain(2)));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_NE(dot.find("m0 -> m1 [label=\"1\"]"), std::string::npos) << dot;
  EXPECT_NE(dot.find("m1 -> m2 [label=\"2\"]"), std::string::npos) << dot;
  EXPECT_EQ(Count(dot, "->"), 2u);
}

TEST(DotTest, PosetHasOneEdgePerCover) {
  const Poset p = Poset::ProductOfChains(2, 3);
  EXPECT_EQ(Count(PosetDot(p), "->"), p.covers().size());
}

TEST(DotTest, CoverClosureHasOneEdgePerSet) {
  const ClosureSystem c = ClosureSystem::OfOrderIdeals(Poset::Chain(3));
  const std::string dot = CoverClosureDot(c);
  EXPECT_EQ(Count(dot, "->"), c.size());
  EXPECT_NE(dot.find("m3 -> m0"), std::string::npos) << dot;
}

}  // namespace
}  // namespace togglekit
