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

#include "togglekit/toggles.h"

#include "togglekit/errors.h"

namespace togglekit {

Permutation TogglePermutation(const SubsetFamily& family,
                              std::size_t element) {
  return Permutation(ToggleImages(family, element));
}

std::vector<Permutation> TogglePermutations(const SubsetFamily& family) {
  std::vector<Permutation> out;
  out.reserve(family.ground_size());
  for (std::size_t e = 0; e < family.ground_size(); ++e) {
    out.push_back(TogglePermutation(family, e));
  }
  return out;
}

std::vector<std::string> ToggleCycleStrings(const SubsetFamily& family) {
  std::vector<std::string> out;
  for (const Permutation& p : TogglePermutations(family)) {
    out.push_back(p.ToCycleString());
  }
  return out;
}

Subset ApplyWord(const SubsetFamily& family,
                 const std::vector<std::size_t>& word, const Subset& x) {
  if (!family.Contains(x)) {
    throw DomainError("subset is not a member of the family");
  }
  Subset y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    y = ApplyToggle(family, *it, y);
  }
  return y;
}

Permutation WordPermutation(const SubsetFamily& family,
                            const std::vector<std::size_t>& word) {
  Permutation p(family.size());
  // p accumulates t_{e1} ... t_{ek}; right factors act first.
  for (std::size_t e : word) p = p * TogglePermutation(family, e);
  return p;
}

std::vector<std::size_t> WordFromLabels(const SubsetFamily& family,
                                        const std::vector<std::string>& word) {
  std::vector<std::size_t> out;
  out.reserve(word.size());
  for (const std::string& l : word) out.push_back(family.ground().IndexOf(l));
  return out;
}

}  // namespace togglekit
