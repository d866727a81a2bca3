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


#ifndef TOGGLEKIT_GENERATORS_H_
#define TOGGLEKIT_GENERATORS_H_

#include <optional>
#include <string>

#include "togglekit/family.h"
#include "togglekit/graph.h"
#include "togglekit/poset.h"

namespace togglekit {

class Matroid;

// Families over the poset's elements, canonical order.
SubsetFamily OrderIdeals(const Poset& p);
SubsetFamily OrderFilters(const Poset& p);
SubsetFamily Chains(const Poset& p);
SubsetFamily Antichains(const Poset& p);
SubsetFamily IntervalClosedSets(const Poset& p);

// Families over the graph's vertices.
SubsetFamily IndependentSets(const Graph& g);
SubsetFamily VertexCovers(const Graph& g);

// Families over the graph's edges.
SubsetFamily AcyclicSubgraphs(const Graph& g);
// Edge sets S with (V, S) having as many components as G.
SubsetFamily SpanningSubgraphs(const Graph& g);

SubsetFamily MatroidIndependents(const Matroid& m);

// Result of the convex-geometry test: the first failed axiom ("empty",
// "full", "intersection" or "augmentation") and its witnesses.
struct ConvexGeometryCheck {
  bool ok = true;
  std::string failed_axiom;
  std::optional<Subset> x;
  std::optional<Subset> y;
};

// ∅ and E present, closed under intersection, and every X ≠ E admits a toggle
// t_e with e ∉ X acting nontrivially on X.
ConvexGeometryCheck CheckConvexGeometry(const SubsetFamily& family);
inline bool IsConvexGeometry(const SubsetFamily& family) {
  return CheckConvexGeometry(family).ok;
}

}  // namespace togglekit

#endif  // TOGGLEKIT_GENERATORS_H_
