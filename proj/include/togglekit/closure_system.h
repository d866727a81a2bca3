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


#ifndef TOGGLEKIT_CLOSURE_SYSTEM_H_
#define TOGGLEKIT_CLOSURE_SYSTEM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/limits.h"
#include "togglekit/poset.h"

namespace togglekit {

// A closure operator held through its closed sets: an intersection-closed
// family containing E. Member order is preserved and indexes all tables.
class ClosureSystem {
 public:
  // Throws ValidationError when E is missing or two closed sets have a
  // non-closed intersection.
  explicit ClosureSystem(SubsetFamily closed_sets);
  static ClosureSystem OfOrderIdeals(const Poset& p);

  const SubsetFamily& closed_sets() const { return closed_; }
  const GroundSet& ground() const { return closed_.ground(); }
  std::size_t size() const { return closed_.size(); }

  // τ(A): the smallest closed superset of A.
  Subset Closure(const Subset& a) const;
  // cov(X) = {e ∉ X : X ∪ {e} closed}; DomainError if X is not closed.
  Subset CoversOf(const Subset& x) const;
  // ξ(X) = τ(cov(X)).
  Subset CoverClosure(const Subset& x) const;
  // rem(X) = {e ∈ X : X \ {e} closed}.
  Subset Removables(const Subset& x) const;

  // The complements of all closed sets, order preserved. ValidationError if
  // they do not form a closure system (needs ∅ closed and union-closure).
  ClosureSystem Dualize() const;

  // xi[i] = index of ξ(member i).
  std::vector<std::uint32_t> CoverClosureTable() const;
  bool IsBijective() const;

 private:
  SubsetFamily closed_;
};

// One trajectory of a self-map: a tail of fresh indices followed either by a
// cycle closed within the trajectory or by a join into an earlier one.
struct Trajectory {
  std::vector<std::uint32_t> tail;
  std::vector<std::uint32_t> cycle;
  std::optional<std::uint32_t> joins;
};

// Every index appears in exactly one trajectory. For bijections all tails are
// empty and every trajectory is a pure cycle.
struct OrbitDecomposition {
  std::vector<std::uint32_t> map;
  std::vector<Trajectory> orbits;
  bool bijective = false;
};

OrbitDecomposition DecomposeOrbits(const std::vector<std::uint32_t>& map);
OrbitDecomposition CoverClosureOrbits(const ClosureSystem& system);

struct CoverCounts {
  std::size_t covers = 0;      // Σ |cov(X)|
  std::size_t removables = 0;  // Σ |rem(X)|
  std::size_t edges = 0;       // cover edges of the toggle poset
  bool equal() const { return covers == removables && removables == edges; }
};

CoverCounts CountCoversAndEdges(const ClosureSystem& system);
inline bool SumCoversEqualsEdges(const ClosureSystem& system) {
  return CountCoversAndEdges(system).equal();
}

struct TheoremRow {
  bool bijective = false;
  // The essentialized closed sets are closed under union.
  bool distributive = false;
  // Join-irreducible closed sets of L' ordered by containment, each labelled
  // by the element it adds (distributive only).
  std::optional<Poset> extracted_poset;
  // order_ideals(extracted_poset) is isomorphic to L' (distributive only).
  bool round_trip = false;
  // bijective == distributive, and the round trip holds when distributive.
  bool holds = false;
  // No two non-constant elements lie in exactly the same closed sets, so L'
  // needed no contraction.
  bool separated = false;
  // bijective == (distributive && separated), with the round trip when
  // distributive. Contracting a class can make ξ bijective on L' but not on
  // L (e.g. {∅, {1,2}}), so this form is the one that holds exhaustively.
  bool holds_separated = false;
};

TheoremRow VerifyTheoremRow(const ClosureSystem& system,
                            const Limits& limits = Limits());

}  // namespace togglekit

#endif  // TOGGLEKIT_CLOSURE_SYSTEM_H_
