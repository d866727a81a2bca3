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


#ifndef TOGGLEKIT_STRUCTURE_REPORT_H_
#define TOGGLEKIT_STRUCTURE_REPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/ita.h"
#include "togglekit/limits.h"
#include "togglekit/perm_group.h"

namespace togglekit {

struct FactorReport {
  SubsetFamily family;
  // Where the factor came from, e.g. "root/sum[1]/product[0]".
  std::string path;
  std::size_t degree = 0;
  std::size_t essential_size = 0;
  // Unset when the degree exceeds limits.classify_degree.
  std::optional<BigInt> order;
  std::optional<GroupClass> classification;
  std::optional<bool> contains_alternating;
  std::string justification;
  std::optional<ItaCertificate> ita;
};

struct StructureReport {
  std::vector<FactorReport> factors;
  // One line per ⊕ / ⊗ step, in visit order.
  std::vector<std::string> trace;
  // Product of the factor orders when all of them were computed.
  std::optional<BigInt> factor_order_product;
  // |T(L)| computed directly when |L| is within limits.classify_degree.
  std::optional<BigInt> whole_order;
  std::optional<GroupClass> whole_classification;
  // Both orders known and equal, or at least one unknown.
  bool consistent = true;
};

struct StructureOptions {
  bool ita = false;
  Limits limits;
};

// Splits L recursively by ⊕, then ⊗, and classifies each indecomposable
// factor directly when feasible. |T(L)| is the product of the factor orders
// for both kinds of split.
StructureReport BuildStructureReport(const SubsetFamily& family,
                                     const StructureOptions& options = {});

}  // namespace togglekit

#endif  // TOGGLEKIT_STRUCTURE_REPORT_H_
