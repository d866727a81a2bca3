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


#include "togglekit/equivariance.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "togglekit/errors.h"
#include "togglekit/toggles.h"

namespace togglekit {
namespace {

bool Related(const Poset& p, BlockCondition c, std::size_t a, std::size_t b) {
  return c == BlockCondition::kComparable ? p.Comparable(a, b)
                                          : !p.Comparable(a, b);
}

// Empty when the hypothesis holds, otherwise a description of the failure.
std::string HypothesisProblem(const std::vector<Subset>& blocks,
                              BlockCondition c, const Poset& p) {
  Subset seen(p.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].width() != p.size()) {
      return "block " + std::to_string(i + 1) + " has the wrong width";
    }
    if (blocks[i].Intersects(seen)) {
      return "block " + std::to_string(i + 1) + " overlaps an earlier block";
    }
    seen |= blocks[i];
    const std::vector<std::size_t> el = blocks[i].Elements();
    for (std::size_t a = 0; a < el.size(); ++a) {
      for (std::size_t b = a + 1; b < el.size(); ++b) {
        if (!Related(p, c, el[a], el[b])) {
          return "block " + std::to_string(i + 1) + " is not a" +
                 (c == BlockCondition::kComparable ? " chain" : "n antichain");
        }
      }
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 2; j < blocks.size(); ++j) {
      bool ok = true;
      blocks[i].ForEach([&](std::size_t a) {
        blocks[j].ForEach([&](std::size_t b) {
          if (!Related(p, c, a, b)) ok = false;
        });
      });
      if (!ok) {
        return "blocks " + std::to_string(i + 1) + " and " +
               std::to_string(j + 1) + " violate the distance condition";
      }
    }
  }
  return "";
}

}  // namespace

std::string ToString(EquivarianceOutcome outcome) {
  switch (outcome) {
    case EquivarianceOutcome::kHolds:
      return "holds";
    case EquivarianceOutcome::kHypothesisFailure:
      return "hypothesis-failure";
    case EquivarianceOutcome::kFalsified:
      return "falsified";
  }
  return "holds";
}

EquivarianceResult CheckOrderEquivariance(const SubsetFamily& family,
                                          const std::vector<Subset>& blocks,
                                          BlockCondition condition,
                                          const Poset& poset,
                                          const EquivarianceOptions& options) {
  if (family.ground_size() != poset.size()) {
    throw DomainError("family ground set and poset differ in size");
  }
  EquivarianceResult result;
  if (std::string problem = HypothesisProblem(blocks, condition, poset);
      !problem.empty()) {
    result.outcome = EquivarianceOutcome::kHypothesisFailure;
    result.detail = problem;
    return result;
  }
  const std::size_t k = blocks.size();
  std::vector<Permutation> block_perm;
  for (const Subset& b : blocks) {
    block_perm.push_back(WordPermutation(family, b.Elements()));
  }
  auto word = [&](const std::vector<std::size_t>& order) {
    Permutation p(family.size());
    for (std::size_t i : order) p = p * block_perm[i];
    return p;
  };
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  const std::vector<std::size_t> reference_order = order;
  result.cycle_type = word(order).CycleType();
  auto check = [&](const std::vector<std::size_t>& o) {
    ++result.orderings_checked;
    if (word(o).CycleType() == result.cycle_type) return true;
    result.outcome = EquivarianceOutcome::kFalsified;
    result.first_order = reference_order;
    result.second_order = o;
    result.detail = "block orders have different cycle types";
    return false;
  };
  if (k <= options.exhaustive_blocks) {
    do {
      if (!check(order)) return result;
    } while (std::next_permutation(order.begin(), order.end()));
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::shuffle(order.begin(), order.end(), rng);
      if (!check(order)) return result;
    }
  }
  return result;
}

}  // namespace togglekit
