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


#ifndef TOGGLEKIT_ITA_H_
#define TOGGLEKIT_ITA_H_

#include <cstddef>
#include <string>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/limits.h"
#include "togglekit/permutation.h"

namespace togglekit {

enum class ItaVerdict { kCertified, kNotCertified };

std::string ToString(ItaVerdict v);

enum class ItaBranch { kContaining, kAvoiding };  // 2a: L_e, 2b: L_ē

// One restriction step of a certificate: L -> L_e or L_ē.
struct ItaStep {
  std::size_t element;  // index into the root family's ground set
  std::string label;
  ItaBranch branch;
  std::size_t family_size;     // |L| before restricting
  std::size_t essential_size;  // |E'| before restricting
};

// One line of the failed search, in visit order.
struct ItaTraceEntry {
  std::size_t depth;
  std::size_t family_size;
  std::size_t essential_size;
  std::string note;
};

struct ItaCertificate {
  ItaVerdict verdict = ItaVerdict::kNotCertified;
  // Restriction path from the root to the base case (certified only).
  std::vector<ItaStep> witness;
  // The base case family: its degree, group order and classification test.
  std::size_t base_degree = 0;
  std::size_t base_essential_size = 0;
  BigInt base_order = 0;
  // Full search trace (not-certified only).
  std::vector<ItaTraceEntry> trace;
};

// Semi-decision for the inductive certificate. Elements of E' are tried in
// ground order, branch 2a before 2b; t_e is the toggle of the family being
// restricted. Throws ResourceLimitError when the recursion exceeds
// limits.ita_depth.
ItaCertificate CheckInductivelyToggleAlternating(
    const SubsetFamily& family, const Limits& limits = Limits());

// Re-derives every branch condition along the witness and the base-case
// verdict. False for not-certified certificates.
bool ReplayItaCertificate(const SubsetFamily& family,
                          const ItaCertificate& certificate);

}  // namespace togglekit

#endif  // TOGGLEKIT_ITA_H_
