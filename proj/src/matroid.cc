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


#include "togglekit/matroid.h"

#include "togglekit/errors.h"
#include "togglekit/generators.h"

namespace togglekit {

std::string ToString(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kExplicit:
      return "explicit";
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kCographic:
      return "cographic";
  }
  return "explicit";
}

std::optional<AxiomViolation> CheckMatroidAxioms(const SubsetFamily& family) {
  const std::size_t n = family.ground_size();
  if (!family.Contains(Subset(n))) {
    return AxiomViolation{"empty", Subset(n), Subset(n)};
  }
  for (const Subset& x : family.members()) {
    std::optional<AxiomViolation> missing;
    x.ForEach([&](std::size_t e) {
      if (!missing && !family.Contains(x.Toggled(e))) {
        missing = AxiomViolation{"hereditary", x, x.Toggled(e)};
      }
    });
    if (missing) return missing;
  }
  for (const Subset& x : family.members()) {
    for (const Subset& y : family.members()) {
      if (y.count() <= x.count()) continue;
      bool augments = false;
      (y - x).ForEach([&](std::size_t e) {
        if (!augments && family.Contains(x.Toggled(e))) augments = true;
      });
      if (!augments) return AxiomViolation{"exchange", x, y};
    }
  }
  return std::nullopt;
}

Matroid Matroid::Explicit(const SubsetFamily& independents) {
  if (auto v = CheckMatroidAxioms(independents)) {
    const GroundSet& g = independents.ground();
    throw ValidationError("matroid axiom '" + v->axiom + "' fails for X=" +
                          g.Format(v->x) + ", Y=" + g.Format(v->y));
  }
  return Matroid(MatroidKind::kExplicit, independents.Canonicalized(),
                 std::nullopt);
}

Matroid Matroid::Graphic(const Graph& graph) {
  return Matroid(MatroidKind::kGraphic, AcyclicSubgraphs(graph), graph);
}

Matroid Matroid::Cographic(const Graph& graph) {
  const SubsetFamily spanning = SpanningSubgraphs(graph);
  std::vector<Subset> complements;
  for (const Subset& s : spanning.members()) {
    complements.push_back(s.Complement());
  }
  return Matroid(MatroidKind::kCographic,
                 SubsetFamily(graph.edge_ground(), std::move(complements)),
                 graph);
}

std::vector<Subset> Matroid::Circuits(const Limits& limits) const {
  const std::size_t n = ground().size();
  if (n > limits.matroid_elements || n >= 63) {
    throw ResourceLimitError("circuit enumeration on " + std::to_string(n) +
                             " elements exceeds the limit of " +
                             std::to_string(limits.matroid_elements));
  }
  std::vector<Subset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const Subset s = Subset::FromWord(n, mask);
    if (IsIndependent(s)) continue;
    bool minimal = true;
    s.ForEach([&](std::size_t e) {
      if (minimal && !IsIndependent(s.Toggled(e))) minimal = false;
    });
    if (minimal) out.push_back(s);
  }
  return out;
}

bool Matroid::OnCommonCircuit(std::size_t x, std::size_t y,
                              const Limits& limits) const {
  for (const Subset& c : Circuits(limits)) {
    if (c.test(x) && c.test(y)) return true;
  }
  return false;
}

}  // namespace togglekit
