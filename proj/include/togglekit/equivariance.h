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


#ifndef TOGGLEKIT_EQUIVARIANCE_H_
#define TOGGLEKIT_EQUIVARIANCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/poset.h"

namespace togglekit {

enum class BlockCondition { kComparable, kIncomparable };
enum class EquivarianceOutcome { kHolds, kHypothesisFailure, kFalsified };

std::string ToString(EquivarianceOutcome outcome);

struct EquivarianceOptions {
  // Exhaustive over all k! block orders up to this k, sampled above.
  std::size_t exhaustive_blocks = 7;
  std::size_t samples = 5040;
  std::uint64_t seed = 1;
};

struct EquivarianceResult {
  EquivarianceOutcome outcome = EquivarianceOutcome::kHolds;
  std::size_t orderings_checked = 0;
  // Cycle type shared by all checked orderings (when it holds).
  std::vector<std::size_t> cycle_type;
  // Two block orders with different cycle types (when falsified).
  std::optional<std::vector<std::size_t>> first_order;
  std::optional<std::vector<std::size_t>> second_order;
  std::string detail;
};

// For blocks B1..Bk (each a chain, resp. antichain, of `poset`, pairwise
// disjoint, with all elements of Bi and Bj comparable, resp. incomparable,
// when |i-j| > 1) checks that t_{B_π(1)} ... t_{B_π(k)} has the same cycle
// type on `family` for every block order π. Blocks are subsets of the
// poset's elements, which must be the family's ground set.
EquivarianceResult CheckOrderEquivariance(
    const SubsetFamily& family, const std::vector<Subset>& blocks,
    BlockCondition condition, const Poset& poset,
    const EquivarianceOptions& options = {});

}  // namespace togglekit

#endif  // TOGGLEKIT_EQUIVARIANCE_H_
