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


#ifndef TOGGLEKIT_MATROID_H_
#define TOGGLEKIT_MATROID_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/graph.h"
#include "togglekit/limits.h"

namespace togglekit {

enum class MatroidKind { kExplicit, kGraphic, kCographic };

std::string ToString(MatroidKind kind);

// The first failed independence axiom ("empty", "hereditary" or "exchange")
// with the offending pair (X, Y); for "empty" both are the empty set, for
// "hereditary" Y ⊂ X is the missing subset.
struct AxiomViolation {
  std::string axiom;
  Subset x;
  Subset y;
};

std::optional<AxiomViolation> CheckMatroidAxioms(const SubsetFamily& family);

// A matroid (E, I) held through its independent sets.
class Matroid {
 public:
  // Throws ValidationError naming the failed axiom and witness pair.
  static Matroid Explicit(const SubsetFamily& independents);
  // Forests of the graph; ground set = edge labels.
  static Matroid Graphic(const Graph& graph);
  // Complements of spanning edge sets; circuits are the bonds of the graph.
  static Matroid Cographic(const Graph& graph);

  MatroidKind kind() const { return kind_; }
  const GroundSet& ground() const { return independents_.ground(); }
  const SubsetFamily& independents() const { return independents_; }
  const std::optional<Graph>& graph() const { return graph_; }
  bool IsIndependent(const Subset& s) const {
    return independents_.Contains(s);
  }

  // Minimal dependent sets. Throws ResourceLimitError above
  // limits.matroid_elements.
  std::vector<Subset> Circuits(const Limits& limits = Limits()) const;
  bool OnCommonCircuit(std::size_t x, std::size_t y,
                       const Limits& limits = Limits()) const;

 private:
  Matroid(MatroidKind kind, SubsetFamily independents,
          std::optional<Graph> graph)
      : kind_(kind),
        independents_(std::move(independents)),
        graph_(std::move(graph)) {}

  MatroidKind kind_;
  SubsetFamily independents_;
  std::optional<Graph> graph_;
};

}  // namespace togglekit

#endif  // TOGGLEKIT_MATROID_H_
