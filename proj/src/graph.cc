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


#include "togglekit/graph.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "togglekit/errors.h"

namespace togglekit {
namespace {

std::size_t Root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::pair<std::size_t, std::size_t>> edges,
             std::vector<std::string> edge_labels)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      edge_labels_(std::move(edge_labels)),
      vertex_ground_(vertices_) {
  const std::size_t n = vertices_.size();
  adjacency_.assign(n, Subset(n));
  for (auto& [u, v] : edges_) {
    if (u >= n || v >= n) throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("loop at vertex " + vertices_[u]);
    if (v < u) std::swap(u, v);
    if (adjacency_[u].test(v)) {
      throw ValidationError("repeated edge " + vertices_[u] + "-" +
                            vertices_[v]);
    }
    adjacency_[u].set(v);
    adjacency_[v].set(u);
  }
  if (edge_labels_.empty()) {
    for (const auto& [u, v] : edges_) {
      edge_labels_.push_back(vertices_[u] + "-" + vertices_[v]);
    }
  } else if (edge_labels_.size() != edges_.size()) {
    throw ValidationError("edge label count differs from edge count");
  }
  edge_ground_ = GroundSet(edge_labels_);
}

Graph Graph::FromLabels(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  GroundSet ground(vertices);
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  for (const auto& [a, b] : edges) {
    auto u = ground.Find(a);
    auto v = ground.Find(b);
    if (!u || !v) {
      throw ValidationError("edge " + a + "-" + b +
                            " names an unknown vertex");
    }
    indexed.emplace_back(*u, *v);
  }
  return Graph(std::move(vertices), std::move(indexed));
}

Graph Graph::Cycle(std::size_t n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(std::to_string(i + 1));
    if (i + 1 < n) e.emplace_back(i, i + 1);
  }
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph(std::move(v), std::move(e));
}

Graph Graph::Path(std::size_t vertices) {
  std::vector<std::string> v;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < vertices; ++i) {
    v.push_back(std::to_string(i + 1));
    if (i > 0) e.emplace_back(i - 1, i);
  }
  return Graph(std::move(v), std::move(e));
}

Graph Graph::Complete(std::size_t n) {
  std::vector<std::string> v;
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(std::to_string(i + 1));
    for (std::size_t j = 0; j < i; ++j) e.emplace_back(j, i);
  }
  return Graph(std::move(v), std::move(e));
}

std::vector<Subset> Graph::Components(const Subset& kept_edges) const {
  const std::size_t n = vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  kept_edges.ForEach([&](std::size_t k) {
    const std::size_t a = Root(parent, edges_[k].first);
    const std::size_t b = Root(parent, edges_[k].second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  });
  std::vector<Subset> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = Root(parent, v);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back(n);
    }
    out[slot[r]].set(v);
  }
  return out;
}

std::vector<Subset> Graph::Components() const {
  return Components(Subset::Full(edge_count()));
}

std::size_t Graph::ComponentCount(const Subset& kept_edges) const {
  return Components(kept_edges).size();
}

bool Graph::HasCycle(const Subset& kept_edges) const {
  std::vector<std::size_t> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  bool cycle = false;
  kept_edges.ForEach([&](std::size_t k) {
    const std::size_t a = Root(parent, edges_[k].first);
    const std::size_t b = Root(parent, edges_[k].second);
    if (a == b) {
      cycle = true;
    } else {
      parent[a] = b;
    }
  });
  return cycle;
}

Subset Graph::CutVertices() const {
  const std::size_t n = vertex_count();
  const std::size_t base = Components().size();
  Subset cut(n);
  for (std::size_t v = 0; v < n; ++v) {
    Subset kept(edge_count());
    for (std::size_t k = 0; k < edge_count(); ++k) {
      if (edges_[k].first != v && edges_[k].second != v) kept.set(k);
    }
    // Removing v leaves n - 1 vertices; v itself counts as one component.
    if (ComponentCount(kept) - 1 > base) cut.set(v);
  }
  return cut;
}

void Graph::CheckEdgeLimit(const Limits& limits, const char* what) const {
  if (edge_count() > limits.graph_edges) {
    throw ResourceLimitError(std::string(what) + " enumeration on " +
                             std::to_string(edge_count()) +
                             " edges exceeds the limit of " +
                             std::to_string(limits.graph_edges));
  }
}

std::vector<Subset> Graph::Circuits(const Limits& limits) const {
  CheckEdgeLimit(limits, "cycle");
  const std::size_t m = edge_count();
  std::vector<Subset> out;
  // A nonempty edge set is a cycle iff it is connected and 2-regular.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<unsigned> degree(vertex_count(), 0);
    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1) {
        ++degree[edges_[k].first];
        ++degree[edges_[k].second];
      }
    }
    if (std::any_of(degree.begin(), degree.end(),
                    [](unsigned d) { return d != 0 && d != 2; })) {
      continue;
    }
    const Subset kept = Subset::FromWord(m, mask);
    const std::size_t touched = static_cast<std::size_t>(
        std::count(degree.begin(), degree.end(), 2u));
    if (ComponentCount(kept) == vertex_count() - touched + 1) {
      out.push_back(kept);
    }
  }
  return out;
}

std::vector<Subset> Graph::Bonds(const Limits& limits) const {
  CheckEdgeLimit(limits, "bond");
  const std::size_t m = edge_count();
  std::set<std::vector<std::size_t>> seen;
  std::vector<Subset> out;
  const Subset all_edges = Subset::Full(m);
  const std::vector<Subset> components = Components();
  const std::size_t base = components.size();
  for (const Subset& comp : components) {
    const std::vector<std::size_t> verts = comp.Elements();
    if (verts.size() < 2) continue;
    // Bipartitions (S, C \ S) with verts[0] in S and both sides connected.
    const std::size_t free = verts.size() - 1;
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << free);
         ++mask) {
      Subset side(vertex_count());
      side.set(verts[0]);
      for (std::size_t k = 0; k < free; ++k) {
        if (mask >> k & 1) side.set(verts[k + 1]);
      }
      Subset crossing(m);
      for (std::size_t k = 0; k < m; ++k) {
        if (side.test(edges_[k].first) != side.test(edges_[k].second)) {
          crossing.set(k);
        }
      }
      // Both sides connected iff removing the crossing edges splits the
      // component into exactly two pieces.
      if (ComponentCount(all_edges - crossing) != base + 1) continue;
      if (seen.insert(crossing.Elements()).second) out.push_back(crossing);
    }
  }
  return out;
}

bool Graph::EdgesOnCommonCycle(std::size_t e, std::size_t f,
                               const Limits& limits) const {
  for (const Subset& c : Circuits(limits)) {
    if (c.test(e) && c.test(f)) return true;
  }
  return false;
}

bool Graph::EdgesOnCommonCutset(std::size_t e, std::size_t f,
                                const Limits& limits) const {
  for (const Subset& b : Bonds(limits)) {
    if (b.test(e) && b.test(f)) return true;
  }
  return false;
}

}  // namespace togglekit
