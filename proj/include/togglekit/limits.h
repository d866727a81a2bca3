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

#ifndef TOGGLEKIT_LIMITS_H_
#define TOGGLEKIT_LIMITS_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace togglekit {

// Bounds on the exponential searches. Exceeding one raises
// ResourceLimitError.
struct Limits {
  // Essential ground size accepted by FamiliesIsomorphic.
  std::size_t isomorphism_elements = 16;
  // Edge count for brute-force cycle / bond enumeration.
  std::size_t graph_edges = 20;
  // Element count for exponential poset predicates.
  std::size_t poset_elements = 16;
  // Ground size for brute-force matroid circuit enumeration.
  std::size_t matroid_elements = 20;
  // Largest family size whose toggle group is classified directly.
  std::size_t classify_degree = 5000;
  // Recursion depth of the inductive certificate search.
  std::size_t ita_depth = 64;

  // Parses "key=value,key=value" with keys iso, edges, poset, matroid,
  // degree, depth. Unknown keys or malformed values raise ParseError.
  static Limits Parse(std::string_view spec);
  static Limits Parse(std::string_view spec, Limits base);

  // Defaults overridden by the TOGGLEKIT_LIMITS environment variable.
  static Limits FromEnvironment();
};

inline constexpr const char* kLimitsEnvVar = "TOGGLEKIT_LIMITS";

}  // namespace togglekit

#endif  // TOGGLEKIT_LIMITS_H_
