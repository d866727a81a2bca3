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


#ifndef TOGGLEKIT_VERIFY_SUITES_H_
#define TOGGLEKIT_VERIFY_SUITES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "togglekit/limits.h"

namespace togglekit {

// Exhaustive sweeps comparing computed objects against the combinatorial
// predictions. ic-relaxed only reports counts and never fails.
enum class VerifySuite {
  kCommutation,
  kBaseCases,
  kTheoremRow,
  kEquivariance,
  kIcRelaxed,
};

// Names: commutation, base-cases, theorem-row, equivariance, ic-relaxed.
std::string ToString(VerifySuite suite);
// Throws ParseError for unknown names.
VerifySuite ParseVerifySuite(std::string_view name);
std::vector<VerifySuite> AllVerifySuites();

// Default size bound: 4 for base-cases, theorem-row and ic-relaxed, 5 for
// commutation and equivariance.
std::size_t DefaultMaxSize(VerifySuite suite);

struct VerifyOptions {
  std::optional<std::size_t> max_size;
  // Cases are evaluated on this many threads; results are merged in case
  // order, so the output does not depend on it.
  std::size_t workers = 1;
  Limits limits;
};

struct Counterexample {
  std::string category;
  // Compact description of the input object, e.g. "poset 1<2 1<3".
  std::string object;
  std::string detail;
};

struct CategoryTally {
  std::string category;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct SuiteResult {
  VerifySuite suite = VerifySuite::kCommutation;
  std::size_t max_size = 0;
  bool report_only = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<CategoryTally> tallies;  // first-seen order
  std::vector<Counterexample> counterexamples;

  bool passed() const { return report_only || failures == 0; }
};

// Sizes per suite with N = max_size:
//   commutation: posets |P| <= N (order ideals, chains, antichains, IC),
//     graphs |V| <= N (IS, VC), graphs with |E| <= N+1 and no isolated
//     vertex (acyclic, spanning), matroids |E| <= min(N, 5).
//   base-cases: connected posets (J, A), non-ordinal-sum posets (chains),
//     strongly-extremal-atomic-free posets (IC), connected graphs (IS, VC),
//     all of size 1..N; each toggle group must contain the alternating group.
//   theorem-row: every closure system on |E| <= min(N, 4), checked against
//     both TheoremRow::holds and TheoremRow::holds_separated, plus the order
//     ideals of every poset |P| <= N.
//   equivariance: both six-element example posets, then every poset
//     |P| <= N with every ordering of singleton blocks meeting the chain
//     (resp. antichain) hypothesis.
//   ic-relaxed: posets 1..N without extremal-atomic elements; tallies
//     whether T(IC(P)) contains the alternating group.
// ResourceLimitError from any case propagates.
SuiteResult RunVerifySuite(VerifySuite suite,
                           const VerifyOptions& options = VerifyOptions());

}  // namespace togglekit

#endif  // TOGGLEKIT_VERIFY_SUITES_H_
