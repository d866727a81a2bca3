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


#ifndef TOGGLEKIT_GRAPH_H_
#define TOGGLEKIT_GRAPH_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/limits.h"
#include "togglekit/subset.h"

namespace togglekit {

// A finite simple graph. Edges are stored with endpoints (u, v), u < v, in
// the order given; edge k carries label edge_labels()[k] ("u-v" by default).
class Graph {
 public:
  Graph() = default;
  // Throws ValidationError on loops, repeated edges or bad endpoints.
  Graph(std::vector<std::string> vertices,
        std::vector<std::pair<std::size_t, std::size_t>> edges,
        std::vector<std::string> edge_labels = {});
  static Graph FromLabels(
      std::vector<std::string> vertices,
      const std::vector<std::pair<std::string, std::string>>& edges);
  // Vertices "1".."n".
  static Graph Cycle(std::size_t n);
  static Graph Path(std::size_t vertices);
  static Graph Complete(std::size_t n);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  const std::vector<std::string>& edge_labels() const { return edge_labels_; }
  const GroundSet& vertex_ground() const { return vertex_ground_; }
  const GroundSet& edge_ground() const { return edge_ground_; }
  bool Adjacent(std::size_t u, std::size_t v) const {
    return adjacency_[u].test(v);
  }
  const Subset& Neighbors(std::size_t v) const { return adjacency_[v]; }

  // Components of (V, kept edges), as vertex sets ordered by smallest vertex.
  std::vector<Subset> Components(const Subset& kept_edges) const;
  std::vector<Subset> Components() const;
  std::size_t ComponentCount(const Subset& kept_edges) const;
  bool IsConnected() const { return Components().size() <= 1; }
  // Whether the kept edges contain a cycle.
  bool HasCycle(const Subset& kept_edges) const;

  // Vertices whose removal increases the number of components.
  Subset CutVertices() const;

  // Edge sets of all cycles / all bonds (minimal disconnecting edge sets).
  // Throw ResourceLimitError above limits.graph_edges edges.
  std::vector<Subset> Circuits(const Limits& limits = Limits()) const;
  std::vector<Subset> Bonds(const Limits& limits = Limits()) const;
  bool EdgesOnCommonCycle(std::size_t e, std::size_t f,
                          const Limits& limits = Limits()) const;
  bool EdgesOnCommonCutset(std::size_t e, std::size_t f,
                           const Limits& limits = Limits()) const;

 private:
  void CheckEdgeLimit(const Limits& limits, const char* what) const;

  std::vector<std::string> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::string> edge_labels_;
  GroundSet vertex_ground_;
  GroundSet edge_ground_;
  std::vector<Subset> adjacency_;
};

}  // namespace togglekit

#endif  // TOGGLEKIT_GRAPH_H_
