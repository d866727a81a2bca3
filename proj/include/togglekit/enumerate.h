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


#ifndef TOGGLEKIT_ENUMERATE_H_
#define TOGGLEKIT_ENUMERATE_H_

#include <cstddef>
#include <vector>

#include "togglekit/closure_system.h"
#include "togglekit/graph.h"
#include "togglekit/matroid.h"
#include "togglekit/poset.h"

namespace togglekit {

// Exhaustive generators for the verification sweeps. "Up to isomorphism"
// results keep one representative per class, in a deterministic order.

// Posets on n elements up to isomorphism (n <= 7), labelled "1".."n" with
// the index order a linear extension.
std::vector<Poset> AllPosets(std::size_t n);

// Simple graphs on n vertices up to isomorphism (n <= 6).
std::vector<Graph> AllGraphs(std::size_t n);

// Graphs with exactly m edges and no isolated vertex, up to isomorphism
// (m <= 7).
std::vector<Graph> AllGraphsWithEdges(std::size_t m);

// Connected graphs with exactly m edges, up to isomorphism (m <= 7).
std::vector<Graph> AllConnectedGraphsWithEdges(std::size_t m);

// Matroids on n elements up to isomorphism (n <= 5), as explicit matroids.
std::vector<Matroid> AllMatroids(std::size_t n);

// Every intersection-closed family containing E on the labelled ground set
// "1".."n" (n <= 4).
std::vector<ClosureSystem> AllClosureSystems(std::size_t n);

}  // namespace togglekit

#endif  // TOGGLEKIT_ENUMERATE_H_
