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


#include "togglekit/commutation.h"

#include "togglekit/errors.h"
#include "togglekit/generators.h"

namespace togglekit {
namespace {

struct KindName {
  FamilyKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::kOrderIdeals, "order-ideals"},
    {FamilyKind::kChains, "chains"},
    {FamilyKind::kAntichains, "antichains"},
    {FamilyKind::kIntervalClosed, "ic"},
    {FamilyKind::kIndependentSets, "is"},
    {FamilyKind::kVertexCovers, "vc"},
    {FamilyKind::kAcyclicSubgraphs, "acyclic"},
    {FamilyKind::kSpanningSubgraphs, "spanning"},
    {FamilyKind::kMatroidIndependents, "matroid"},
};

template <typename T>
const T& Require(FamilyKind kind, const Source& source, const char* what) {
  if (const T* p = std::get_if<T>(&source)) return *p;
  throw DomainError("family kind '" + ToString(kind) + "' needs a " + what +
                    " source");
}

CommutationMatrix Square(std::size_t n) {
  CommutationMatrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  return m;
}

template <typename Pred>
CommutationMatrix FromPredicate(std::size_t n, Pred&& commute) {
  CommutationMatrix m = Square(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = e + 1; f < n; ++f) {
      m[e][f] = m[f][e] = commute(e, f);
    }
  }
  return m;
}

// Neither set in `sets` contains both e and f.
CommutationMatrix NoCommonSet(std::size_t n, const std::vector<Subset>& sets) {
  return FromPredicate(n, [&](std::size_t e, std::size_t f) {
    for (const Subset& s : sets) {
      if (s.test(e) && s.test(f)) return false;
    }
    return true;
  });
}

}  // namespace

std::string ToString(FamilyKind kind) {
  for (const KindName& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

FamilyKind ParseFamilyKind(std::string_view name) {
  for (const KindName& k : kKindNames) {
    if (name == k.name) return k.kind;
  }
  throw ParseError("unknown family kind '" + std::string(name) + "'");
}

std::vector<FamilyKind> AllFamilyKinds() {
  std::vector<FamilyKind> out;
  for (const KindName& k : kKindNames) out.push_back(k.kind);
  return out;
}

SubsetFamily GenerateFamily(FamilyKind kind, const Source& source) {
  switch (kind) {
    case FamilyKind::kOrderIdeals:
      return OrderIdeals(Require<Poset>(kind, source, "poset"));
    case FamilyKind::kChains:
      return Chains(Require<Poset>(kind, source, "poset"));
    case FamilyKind::kAntichains:
      return Antichains(Require<Poset>(kind, source, "poset"));
    case FamilyKind::kIntervalClosed:
      return IntervalClosedSets(Require<Poset>(kind, source, "poset"));
    case FamilyKind::kIndependentSets:
      return IndependentSets(Require<Graph>(kind, source, "graph"));
    case FamilyKind::kVertexCovers:
      return VertexCovers(Require<Graph>(kind, source, "graph"));
    case FamilyKind::kAcyclicSubgraphs:
      return AcyclicSubgraphs(Require<Graph>(kind, source, "graph"));
    case FamilyKind::kSpanningSubgraphs:
      return SpanningSubgraphs(Require<Graph>(kind, source, "graph"));
    case FamilyKind::kMatroidIndependents:
      return MatroidIndependents(Require<Matroid>(kind, source, "matroid"));
  }
  throw DomainError("unknown family kind");
}

CommutationReport CommutationGraph(const SubsetFamily& family) {
  const std::size_t n = family.ground_size();
  std::vector<std::vector<std::uint32_t>> images;
  images.reserve(n);
  for (std::size_t e = 0; e < n; ++e) {
    images.push_back(ToggleImages(family, e));
  }
  CommutationReport report;
  report.actual = FromPredicate(n, [&](std::size_t e, std::size_t f) {
    const auto& te = images[e];
    const auto& tf = images[f];
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (te[tf[te[tf[i]]]] != i) return false;
    }
    return true;
  });
  return report;
}

CommutationMatrix PredictCommutation(FamilyKind kind, const Source& source,
                                     const Limits& limits) {
  switch (kind) {
    case FamilyKind::kOrderIdeals: {
      const Poset& p = Require<Poset>(kind, source, "poset");
      return FromPredicate(p.size(), [&](std::size_t a, std::size_t b) {
        return !p.Covers(a, b) && !p.Covers(b, a);
      });
    }
    case FamilyKind::kChains: {
      const Poset& p = Require<Poset>(kind, source, "poset");
      return FromPredicate(p.size(), [&](std::size_t a, std::size_t b) {
        return p.Comparable(a, b);
      });
    }
    case FamilyKind::kAntichains: {
      const Poset& p = Require<Poset>(kind, source, "poset");
      return FromPredicate(p.size(), [&](std::size_t a, std::size_t b) {
        return !p.Comparable(a, b);
      });
    }
    case FamilyKind::kIntervalClosed: {
      const Poset& p = Require<Poset>(kind, source, "poset");
      return FromPredicate(p.size(), [&](std::size_t a, std::size_t b) {
        if (!p.Comparable(a, b)) return true;
        const std::size_t lo = p.Less(a, b) ? a : b;
        const std::size_t hi = p.Less(a, b) ? b : a;
        return p.Covers(lo, hi) && p.IsMinimal(lo) && p.IsMaximal(hi);
      });
    }
    case FamilyKind::kIndependentSets:
    case FamilyKind::kVertexCovers: {
      const Graph& g = Require<Graph>(kind, source, "graph");
      return FromPredicate(g.vertex_count(), [&](std::size_t u, std::size_t v) {
        return !g.Adjacent(u, v);
      });
    }
    case FamilyKind::kAcyclicSubgraphs: {
      const Graph& g = Require<Graph>(kind, source, "graph");
      return NoCommonSet(g.edge_count(), g.Circuits(limits));
    }
    case FamilyKind::kSpanningSubgraphs: {
      const Graph& g = Require<Graph>(kind, source, "graph");
      return NoCommonSet(g.edge_count(), g.Bonds(limits));
    }
    case FamilyKind::kMatroidIndependents: {
      const Matroid& m = Require<Matroid>(kind, source, "matroid");
      return NoCommonSet(m.ground().size(), m.Circuits(limits));
    }
  }
  throw DomainError("unknown family kind");
}

CommutationReport VerifyCommutation(FamilyKind kind, const Source& source,
                                    const Limits& limits) {
  CommutationReport report = CommutationGraph(GenerateFamily(kind, source));
  report.predicted = PredictCommutation(kind, source, limits);
  const std::size_t n = report.actual.size();
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = e + 1; f < n; ++f) {
      if (report.actual[e][f] != (*report.predicted)[e][f]) {
        report.mismatches.emplace_back(e, f);
      }
    }
  }
  return report;
}

}  // namespace togglekit
