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


#ifndef TOGGLEKIT_ROWMOTION_H_
#define TOGGLEKIT_ROWMOTION_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/poset.h"
#include "togglekit/subset.h"

namespace togglekit {

// The order ideal generated by the minimal elements of P \ I. DomainError
// when I is not an order ideal.
Subset RowmotionMin(const Poset& p, const Subset& ideal);

// Rowmotion as a toggle word under the product convention of ApplyWord: the
// deterministic linear extension x1, ..., xn (smallest index first among
// available elements). The last letter acts first, so the toggles are
// applied top to bottom, in reverse linear-extension order.
std::vector<std::size_t> RowmotionWord(const Poset& p);

// Rowmotion on J(P) as a permutation table over the members of `ideals`,
// which must be OrderIdeals(p) in any order.
std::vector<std::uint32_t> RowmotionTable(const Poset& p,
                                          const SubsetFamily& ideals);

}  // namespace togglekit

#endif  // TOGGLEKIT_ROWMOTION_H_
