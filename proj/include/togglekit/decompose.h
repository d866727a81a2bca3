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


#ifndef TOGGLEKIT_DECOMPOSE_H_
#define TOGGLEKIT_DECOMPOSE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "togglekit/family.h"

namespace togglekit {

// L = first ∪ second with no toggle joining the parts and disjoint essential
// supports (elements that vary within a part). Both parts keep L's ground
// set; positions index members of L.
struct SumSplit {
  SubsetFamily first;
  SubsetFamily second;
  std::vector<std::size_t> first_positions;
  std::vector<std::size_t> second_positions;
};

// A two-part split whose first part holds member 1, or nullopt when no split
// into unions of toggle components with disjoint supports exists.
std::optional<SumSplit> DetectToggleDisjointSum(const SubsetFamily& family);

// L' = proj_{B1}(L') x ... x proj_{Bk}(L') for the finest partition of the
// essential ground set. Blocks are expanded back to original elements
// (contracted classes included, constant elements excluded), and factors are
// the projections of L onto them, over L's ground set.
struct ProductSplit {
  std::vector<Subset> blocks;
  std::vector<SubsetFamily> factors;
};

// Nullopt when the finest partition has a single block or E' is empty.
// Throws ResourceLimitError when the candidate-block search would exceed 20
// dependence components.
std::optional<ProductSplit> DetectToggleDisjointProduct(
    const SubsetFamily& family);

// Projection of every member onto `block`, deduplicated in first-seen order.
SubsetFamily Project(const SubsetFamily& family, const Subset& block);

}  // namespace togglekit

#endif  // TOGGLEKIT_DECOMPOSE_H_
