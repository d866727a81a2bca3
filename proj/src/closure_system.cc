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


#include "togglekit/closure_system.h"

#include <algorithm>
#include <string>

#include "togglekit/errors.h"
#include "togglekit/essential.h"
#include "togglekit/generators.h"
#include "togglekit/toggle_poset.h"

namespace togglekit {

ClosureSystem::ClosureSystem(SubsetFamily closed_sets)
    : closed_(std::move(closed_sets)) {
  const std::size_t n = closed_.ground_size();
  if (!closed_.Contains(Subset::Full(n))) {
    throw ValidationError("closure system lacks the full ground set");
  }
  for (std::size_t i = 0; i < closed_.size(); ++i) {
    for (std::size_t j = i + 1; j < closed_.size(); ++j) {
      const Subset meet = closed_.member(i) & closed_.member(j);
      if (!closed_.Contains(meet)) {
        throw ValidationError(
            "closed sets " + ground().Format(closed_.member(i)) + " and " +
            ground().Format(closed_.member(j)) +
            " intersect in the non-closed set " + ground().Format(meet));
      }
    }
  }
}

ClosureSystem ClosureSystem::OfOrderIdeals(const Poset& p) {
  return ClosureSystem(OrderIdeals(p));
}

Subset ClosureSystem::Closure(const Subset& a) const {
  Subset out = Subset::Full(closed_.ground_size());
  for (const Subset& x : closed_.members()) {
    if (a.IsSubsetOf(x)) out &= x;
  }
  return out;
}

Subset ClosureSystem::CoversOf(const Subset& x) const {
  if (!closed_.Contains(x)) {
    throw DomainError(ground().Format(x) + " is not a closed set");
  }
  Subset out(closed_.ground_size());
  (Subset::Full(closed_.ground_size()) - x).ForEach([&](std::size_t e) {
    if (closed_.Contains(x.Toggled(e))) out.set(e);
  });
  return out;
}

Subset ClosureSystem::CoverClosure(const Subset& x) const {
  return Closure(CoversOf(x));
}

Subset ClosureSystem::Removables(const Subset& x) const {
  if (!closed_.Contains(x)) {
    throw DomainError(ground().Format(x) + " is not a closed set");
  }
  Subset out(closed_.ground_size());
  x.ForEach([&](std::size_t e) {
    if (closed_.Contains(x.Toggled(e))) out.set(e);
  });
  return out;
}

ClosureSystem ClosureSystem::Dualize() const {
  std::vector<Subset> complements;
  for (const Subset& x : closed_.members()) {
    complements.push_back(x.Complement());
  }
  return ClosureSystem(closed_.WithMembers(std::move(complements)));
}

std::vector<std::uint32_t> ClosureSystem::CoverClosureTable() const {
  std::vector<std::uint32_t> table;
  table.reserve(closed_.size());
  for (const Subset& x : closed_.members()) {
    table.push_back(
        static_cast<std::uint32_t>(*closed_.IndexOf(CoverClosure(x))));
  }
  return table;
}

bool ClosureSystem::IsBijective() const {
  const std::vector<std::uint32_t> table = CoverClosureTable();
  std::vector<bool> hit(table.size(), false);
  for (std::uint32_t v : table) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

OrbitDecomposition DecomposeOrbits(const std::vector<std::uint32_t>& map) {
  OrbitDecomposition out;
  out.map = map;
  const std::size_t n = map.size();
  // 0 = unseen, 1 = on the current path, 2 = finished.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<std::size_t> position(n, 0);
  out.bijective = true;
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<std::uint32_t> path;
    std::uint32_t v = static_cast<std::uint32_t>(start);
    while (state[v] == 0) {
      state[v] = 1;
      position[v] = path.size();
      path.push_back(v);
      v = map[v];
    }
    Trajectory t;
    if (state[v] == 1) {
      t.tail.assign(path.begin(), path.begin() + position[v]);
      t.cycle.assign(path.begin() + position[v], path.end());
    } else {
      t.tail = path;
      t.joins = v;
    }
    if (!t.tail.empty()) out.bijective = false;
    for (std::uint32_t w : path) state[w] = 2;
    out.orbits.push_back(std::move(t));
  }
  return out;
}

OrbitDecomposition CoverClosureOrbits(const ClosureSystem& system) {
  return DecomposeOrbits(system.CoverClosureTable());
}

CoverCounts CountCoversAndEdges(const ClosureSystem& system) {
  CoverCounts counts;
  for (const Subset& x : system.closed_sets().members()) {
    counts.covers += system.CoversOf(x).count();
    counts.removables += system.Removables(x).count();
  }
  counts.edges = TogglePoset(system.closed_sets()).edges().size();
  return counts;
}

TheoremRow VerifyTheoremRow(const ClosureSystem& system,
                            const Limits& limits) {
  TheoremRow row;
  row.bijective = system.IsBijective();
  const Essentialization ess = Essentialize(system.closed_sets());
  const SubsetFamily& essential = ess.family;
  row.separated = std::all_of(ess.classes.begin(), ess.classes.end(),
                              [](const auto& c) { return c.size() == 1; });
  row.distributive = IsUnionClosed(essential);
  if (row.distributive) {
    // Join-irreducibles: members that are not the union of the members
    // strictly below them.
    std::vector<std::size_t> irreducible;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < essential.size(); ++i) {
      const Subset& x = essential.member(i);
      Subset below(essential.ground_size());
      for (const Subset& y : essential.members()) {
        if (y != x && y.IsSubsetOf(x)) below |= y;
      }
      if (below == x) continue;
      irreducible.push_back(i);
      std::string label;
      for (std::size_t e : (x - below).Elements()) {
        label += (label.empty() ? "" : "+") + essential.ground().label(e);
      }
      labels.push_back(label);
    }
    std::vector<Subset> above(irreducible.size(), Subset(irreducible.size()));
    for (std::size_t a = 0; a < irreducible.size(); ++a) {
      for (std::size_t b = 0; b < irreducible.size(); ++b) {
        const Subset& x = essential.member(irreducible[a]);
        const Subset& y = essential.member(irreducible[b]);
        if (a != b && x.IsSubsetOf(y)) above[a].set(b);
      }
    }
    row.extracted_poset = Poset::FromStrictOrder(std::move(labels), above);
    row.round_trip = FamiliesIsomorphic(OrderIdeals(*row.extracted_poset),
                                        essential, limits);
  }
  row.holds = row.bijective == row.distributive &&
              (!row.distributive || row.round_trip);
  row.holds_separated = row.bijective == (row.distributive && row.separated) &&
                        (!row.distributive || row.round_trip);
  return row;
}

}  // namespace togglekit
