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


#include "togglekit/rowmotion.h"

#include "togglekit/errors.h"

namespace togglekit {

Subset RowmotionMin(const Poset& p, const Subset& ideal) {
  if (!p.IsOrderIdeal(ideal)) {
    throw DomainError(p.ground().Format(ideal) + " is not an order ideal");
  }
  const Subset rest = Subset::Full(p.size()) - ideal;
  Subset minimal(p.size());
  rest.ForEach([&](std::size_t x) {
    if (!p.Below(x).Intersects(rest)) minimal.set(x);
  });
  return p.IdealGeneratedBy(minimal);
}

std::vector<std::size_t> RowmotionWord(const Poset& p) {
  return p.LinearExtension();
}

std::vector<std::uint32_t> RowmotionTable(const Poset& p,
                                          const SubsetFamily& ideals) {
  std::vector<std::uint32_t> table;
  table.reserve(ideals.size());
  for (const Subset& x : ideals.members()) {
    auto j = ideals.IndexOf(RowmotionMin(p, x));
    if (!j) throw DomainError("family is not the set of order ideals");
    table.push_back(static_cast<std::uint32_t>(*j));
  }
  return table;
}

}  // namespace togglekit
