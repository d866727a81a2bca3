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


#ifndef TOGGLEKIT_DOT_H_
#define TOGGLEKIT_DOT_H_

#include <string>

#include "togglekit/closure_system.h"
#include "togglekit/family.h"
#include "togglekit/poset.h"

namespace togglekit {

// Hasse diagram of the toggle poset, drawn bottom to top. Nodes are members
// in family order, named m0, m1, ...; edges carry the toggled element.
std::string TogglePosetDot(const SubsetFamily& family);

// Hasse diagram of a poset, drawn bottom to top.
std::string PosetDot(const Poset& poset);

// ξ as a functional digraph: one node per closed set and an edge X -> ξ(X).
std::string CoverClosureDot(const ClosureSystem& system);

}  // namespace togglekit

#endif  // TOGGLEKIT_DOT_H_
