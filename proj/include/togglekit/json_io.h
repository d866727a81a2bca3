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


#ifndef TOGGLEKIT_JSON_IO_H_
#define TOGGLEKIT_JSON_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "togglekit/closure_system.h"
#include "togglekit/commutation.h"
#include "togglekit/family.h"
#include "togglekit/graph.h"
#include "togglekit/ita.h"
#include "togglekit/matroid.h"
#include "togglekit/perm_group.h"
#include "togglekit/poset.h"
#include "togglekit/structure_report.h"
#include "togglekit/verify_suites.h"

namespace togglekit {

// Key order is kept as written so that output is stable and readable.
using Json = nlohmann::ordered_json;

// Parses text; syntax errors raise ParseError with "name:line:column".
Json ParseJsonText(std::string_view text, std::string_view name = "input");
// Reads and parses a file; ParseError when it cannot be read.
Json ReadJsonFile(const std::string& path);

// Indented output in which arrays that hold no objects stay on one line.
std::string FormatJson(const Json& j);

// Readers raise ParseError naming the offending JSON path, e.g.
// "$.members[2][0]: unknown element 'x'". Domain validation failures are
// rethrown as ParseError with the path of the whole object.

// {"ground": [...], "members": [[...], ...], "order": "given"|"canonical"}.
// "order" defaults to "given".
SubsetFamily FamilyFromJson(const Json& j);
Json ToJson(const SubsetFamily& family);

// {"elements": [...], "covers": [["a","b"], ...]}.
Poset PosetFromJson(const Json& j);
Json ToJson(const Poset& poset);

// {"vertices": [...], "edges": [["u","v"], ...], "edge_labels": [...]}
// with "edge_labels" optional.
Graph GraphFromJson(const Json& j);
Json ToJson(const Graph& graph);

// {"kind": "explicit", "ground": [...], "independents": [[...], ...]} or
// {"kind": "graphic"|"cographic", "vertices": [...], "edges": [...]}.
Matroid MatroidFromJson(const Json& j);
Json ToJson(const Matroid& matroid);

// Dispatches on the keys present: "kind" (matroid), "elements" (poset),
// "vertices" (graph).
Source SourceFromJson(const Json& j);

// {"ground": [...], "closed_sets": [[...], ...]}.
ClosureSystem ClosureSystemFromJson(const Json& j);
Json ToJson(const ClosureSystem& system);

// {"degree", "generators": [cycle strings], "order": decimal string,
//  "classification"}.
Json ToJson(const PermutationGroup& group);

Json ToJson(const ItaCertificate& certificate);

// Pairs are written as label pairs of the family's ground set.
Json CommutationToJson(const CommutationReport& report,
                       const SubsetFamily& family);

// {"factors": [...], "trace": [...], "factor_order_product", "whole_order",
//  "whole_classification", "consistent"} plus "ita" and "commutation" when
// given.
Json ToJson(const StructureReport& report,
            const std::optional<ItaCertificate>& ita = std::nullopt,
            const std::optional<Json>& commutation = std::nullopt);

// ξ as a table of closed sets and its trajectories, sets written as label
// lists.
Json CoverClosureToJson(const ClosureSystem& system, bool with_orbits);

Json ToJson(const SuiteResult& result);

}  // namespace togglekit

#endif  // TOGGLEKIT_JSON_IO_H_
