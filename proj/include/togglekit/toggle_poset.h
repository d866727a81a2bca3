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


#ifndef TOGGLEKIT_TOGGLE_POSET_H_
#define TOGGLEKIT_TOGGLE_POSET_H_

#include <cstddef>
#include <vector>

#include "togglekit/family.h"

namespace togglekit {

// Member `lower` is covered by member `upper` = lower + {element}.
struct CoverEdge {
  std::size_t lower;
  std::size_t upper;
  std::size_t element;

  bool operator==(const CoverEdge&) const = default;
};

// The toggle poset of a family: members ordered by the transitive closure of
// single-element additions that stay inside the family.
class TogglePoset {
 public:
  explicit TogglePoset(const SubsetFamily& family);

  std::size_t size() const { return size_; }
  // Sorted by (lower, element).
  const std::vector<CoverEdge>& edges() const { return edges_; }
  const std::vector<std::size_t>& up(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& down(std::size_t i) const {
    return down_[i];
  }

  // Whether member i lies below or equal to member j.
  bool Leq(std::size_t i, std::size_t j) const { return reach_[i].test(j); }

  // The Hasse diagram is connected (vacuously true for at most one member).
  bool IsConnected() const;
  // Every maximal chain has the same length.
  bool IsStronglyGraded() const;
  // The poset order coincides with set containment on the members.
  bool EqualsContainmentOrder() const;

 private:
  std::size_t size_;
  std::vector<Subset> members_;
  std::vector<CoverEdge> edges_;
  std::vector<std::vector<std::size_t>> up_;    // edge indices
  std::vector<std::vector<std::size_t>> down_;  // edge indices
  std::vector<Subset> reach_;                   // reach_[i] = up-set of i
};

}  // namespace togglekit

#endif  // TOGGLEKIT_TOGGLE_POSET_H_
