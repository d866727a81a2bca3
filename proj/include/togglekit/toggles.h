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

#ifndef TOGGLEKIT_TOGGLES_H_
#define TOGGLEKIT_TOGGLES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/permutation.h"

namespace togglekit {

// t_e as a permutation of member positions; always an involution.
Permutation TogglePermutation(const SubsetFamily& family, std::size_t element);

// One permutation per ground element, in ground order.
std::vector<Permutation> TogglePermutations(const SubsetFamily& family);

// Cycle strings of all toggles, e.g. {"(1,2)(5,6)", ...}.
std::vector<std::string> ToggleCycleStrings(const SubsetFamily& family);

// The word [e1, ..., ek] acts as t_{e1} t_{e2} ... t_{ek}: the last letter
// is applied first. Throws DomainError for unknown elements.
Subset ApplyWord(const SubsetFamily& family,
                 const std::vector<std::size_t>& word, const Subset& x);
Permutation WordPermutation(const SubsetFamily& family,
                            const std::vector<std::size_t>& word);

// Label-based overloads.
std::vector<std::size_t> WordFromLabels(const SubsetFamily& family,
                                        const std::vector<std::string>& word);

}  // namespace togglekit

#endif  // TOGGLEKIT_TOGGLES_H_
