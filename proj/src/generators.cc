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


#include "togglekit/generators.h"

#include <algorithm>
#include <numeric>

#include "togglekit/matroid.h"

namespace togglekit {
namespace {

// Depth-first over elements in `order`; `allowed(current, x)` decides whether
// x may join the current set. Every node of the search is a member.
template <typename Allowed>
std::vector<Subset> GrowHereditary(std::size_t n,
                                   const std::vector<std::size_t>& order,
                                   Allowed&& allowed) {
  std::vector<Subset> out;
  Subset current(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.push_back(current);
      return;
    }
    self(self, k + 1);
    const std::size_t x = order[k];
    if (allowed(current, x)) {
      current.set(x);
      self(self, k + 1);
      current.reset(x);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::size_t> Identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

SubsetFamily Canonical(const GroundSet& ground, std::vector<Subset> members) {
  return SubsetFamily(ground, std::move(members), MemberOrder::kCanonical);
}

}  // namespace

SubsetFamily OrderIdeals(const Poset& p) {
  return Canonical(
      p.ground(),
      GrowHereditary(p.size(), p.LinearExtension(),
                     [&](const Subset& cur, std::size_t x) {
                       return p.Below(x).IsSubsetOf(cur);
                     }));
}

SubsetFamily OrderFilters(const Poset& p) {
  std::vector<std::size_t> order = p.LinearExtension();
  std::reverse(order.begin(), order.end());
  return Canonical(p.ground(),
                   GrowHereditary(p.size(), order,
                                  [&](const Subset& cur, std::size_t x) {
                                    return p.Above(x).IsSubsetOf(cur);
                                  }));
}

SubsetFamily Chains(const Poset& p) {
  return Canonical(p.ground(),
                   GrowHereditary(p.size(), Identity(p.size()),
                                  [&](const Subset& cur, std::size_t x) {
                                    bool ok = true;
                                    cur.ForEach([&](std::size_t y) {
                                      if (!p.Comparable(x, y)) ok = false;
                                    });
                                    return ok;
                                  }));
}

SubsetFamily Antichains(const Poset& p) {
  return Canonical(p.ground(),
                   GrowHereditary(p.size(), Identity(p.size()),
                                  [&](const Subset& cur, std::size_t x) {
                                    return !cur.Intersects(p.Above(x)) &&
                                           !cur.Intersects(p.Below(x));
                                  }));
}

SubsetFamily IntervalClosedSets(const Poset& p) {
  // In linear-extension order every element strictly between a and x is
  // decided before x, so convexity can be checked when x is added.
  return Canonical(p.ground(),
                   GrowHereditary(p.size(), p.LinearExtension(),
                                  [&](const Subset& cur, std::size_t x) {
                                    bool ok = true;
                                    (cur & p.Below(x)).ForEach([&](std::size_t a) {
                                      if (!(p.Above(a) & p.Below(x))
                                               .IsSubsetOf(cur)) {
                                        ok = false;
                                      }
                                    });
                                    return ok;
                                  }));
}

SubsetFamily IndependentSets(const Graph& g) {
  return Canonical(g.vertex_ground(),
                   GrowHereditary(g.vertex_count(), Identity(g.vertex_count()),
                                  [&](const Subset& cur, std::size_t v) {
                                    return !cur.Intersects(g.Neighbors(v));
                                  }));
}

SubsetFamily VertexCovers(const Graph& g) {
  std::vector<Subset> covers;
  const SubsetFamily independent = IndependentSets(g);
  for (const Subset& s : independent.members()) {
    covers.push_back(s.Complement());
  }
  return Canonical(g.vertex_ground(), std::move(covers));
}

SubsetFamily AcyclicSubgraphs(const Graph& g) {
  return Canonical(g.edge_ground(),
                   GrowHereditary(g.edge_count(), Identity(g.edge_count()),
                                  [&](const Subset& cur, std::size_t e) {
                                    return !g.HasCycle(cur.Toggled(e));
                                  }));
}

SubsetFamily SpanningSubgraphs(const Graph& g) {
  // Grow the removed set R; (V, E \ R) must keep the component count, and
  // removing more edges can only add components.
  const std::size_t base = g.Components().size();
  const Subset all = Subset::Full(g.edge_count());
  std::vector<Subset> removed = GrowHereditary(
      g.edge_count(), Identity(g.edge_count()),
      [&](const Subset& cur, std::size_t e) {
        return g.ComponentCount(all - cur.Toggled(e)) == base;
      });
  std::vector<Subset> kept;
  for (const Subset& r : removed) kept.push_back(all - r);
  return Canonical(g.edge_ground(), std::move(kept));
}

SubsetFamily MatroidIndependents(const Matroid& m) {
  return m.independents();
}

ConvexGeometryCheck CheckConvexGeometry(const SubsetFamily& family) {
  const std::size_t n = family.ground_size();
  const Subset empty(n);
  const Subset full = Subset::Full(n);
  if (!family.Contains(empty)) return {false, "empty", empty, std::nullopt};
  if (!family.Contains(full)) return {false, "full", full, std::nullopt};
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!family.Contains(family.member(i) & family.member(j))) {
        return {false, "intersection", family.member(i), family.member(j)};
      }
    }
  }
  for (const Subset& x : family.members()) {
    if (x == full) continue;
    bool extendable = false;
    (full - x).ForEach([&](std::size_t e) {
      if (!extendable && ApplyToggle(family, e, x) != x) extendable = true;
    });
    if (!extendable) return {false, "augmentation", x, std::nullopt};
  }
  return {};
}

}  // namespace togglekit
