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


#ifndef TOGGLEKIT_COMMUTATION_H_
#define TOGGLEKIT_COMMUTATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/graph.h"
#include "togglekit/limits.h"
#include "togglekit/matroid.h"
#include "togglekit/poset.h"

namespace togglekit {

enum class FamilyKind {
  kOrderIdeals,
  kChains,
  kAntichains,
  kIntervalClosed,
  kIndependentSets,
  kVertexCovers,
  kAcyclicSubgraphs,
  kSpanningSubgraphs,
  kMatroidIndependents,
};

// CLI names: order-ideals, chains, antichains, ic, is, vc, acyclic,
// spanning, matroid.
std::string ToString(FamilyKind kind);
// Throws ParseError for unknown names.
FamilyKind ParseFamilyKind(std::string_view name);
std::vector<FamilyKind> AllFamilyKinds();

using Source = std::variant<Poset, Graph, Matroid>;

// Builds the family of `kind` from a matching source; DomainError when the
// source has the wrong type.
SubsetFamily GenerateFamily(FamilyKind kind, const Source& source);

// Symmetric boolean matrices indexed by ground elements; the diagonal is
// true.
using CommutationMatrix = std::vector<std::vector<bool>>;

struct CommutationReport {
  CommutationMatrix actual;
  std::optional<CommutationMatrix> predicted;
  // Pairs (e, f), e < f, where actual and predicted differ.
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// actual[e][f] iff (t_e t_f)^2 fixes every member.
CommutationReport CommutationGraph(const SubsetFamily& family);

// The commutation predicted by the combinatorial lemma for `kind`.
CommutationMatrix PredictCommutation(FamilyKind kind, const Source& source,
                                     const Limits& limits = Limits());

// Actual against predicted on the generated family.
CommutationReport VerifyCommutation(FamilyKind kind, const Source& source,
                                    const Limits& limits = Limits());

}  // namespace togglekit

#endif  // TOGGLEKIT_COMMUTATION_H_
