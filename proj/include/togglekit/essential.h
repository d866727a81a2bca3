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


#ifndef TOGGLEKIT_ESSENTIAL_H_
#define TOGGLEKIT_ESSENTIAL_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/limits.h"

namespace togglekit {

// L' together with the classes of original elements behind each element of
// E'. classes[i] is sorted and classes[i][0] is the representative whose
// label element i of E' carries. Member positions are unchanged.
struct Essentialization {
  SubsetFamily family;
  std::vector<std::vector<std::size_t>> classes;
};

// Drops elements lying in all or in none of the members and contracts every
// class of always co-occurring elements to its smallest index, iterated to a
// fixpoint. The toggle group of L' can differ from that of L when a class of
// size > 1 is contracted, so callers compute groups on L itself.
Essentialization Essentialize(const SubsetFamily& family);

// The bijection E1' -> E2' (indices into the essential ground sets) mapping
// L1' onto L2', if one exists. Throws ResourceLimitError when |E'| exceeds
// limits.isomorphism_elements.
std::optional<std::vector<std::size_t>> FindIsomorphism(
    const SubsetFamily& a, const SubsetFamily& b,
    const Limits& limits = Limits());

inline bool FamiliesIsomorphic(const SubsetFamily& a, const SubsetFamily& b,
                               const Limits& limits = Limits()) {
  return FindIsomorphism(a, b, limits).has_value();
}

}  // namespace togglekit

#endif  // TOGGLEKIT_ESSENTIAL_H_
