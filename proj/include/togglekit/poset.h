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


#ifndef TOGGLEKIT_POSET_H_
#define TOGGLEKIT_POSET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/limits.h"
#include "togglekit/subset.h"

namespace togglekit {

// A finite poset given by its cover relation. Comparability is derived once
// at construction.
class Poset {
 public:
  Poset() = default;
  // covers[k] = (lower, upper). Throws ValidationError on self-covers,
  // duplicate covers, cycles, or covers implied by transitivity.
  Poset(std::vector<std::string> labels,
        std::vector<std::pair<std::size_t, std::size_t>> covers);
  static Poset FromLabels(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& covers);
  // Builds the cover relation from a strict order given as less[i] = the
  // elements strictly above i. The relation must be transitive.
  static Poset FromStrictOrder(std::vector<std::string> labels,
                               const std::vector<Subset>& above);

  // Elements labelled "1".."n" (Chain/Antichain) or "(i,j)" (grid).
  static Poset Chain(std::size_t n);
  static Poset Antichain(std::size_t n);
  // [a] x [b]; element (i,j) sits at index i*b + j.
  static Poset ProductOfChains(std::size_t a, std::size_t b);
  // P + Q and P ⊕ Q (every element of P below every element of Q). Labels
  // must be disjoint.
  static Poset DisjointSum(const Poset& p, const Poset& q);
  static Poset OrdinalSum(const Poset& p, const Poset& q);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const GroundSet& ground() const { return ground_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const {
    return upper_covers_[i];
  }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const {
    return lower_covers_[i];
  }

  bool Less(std::size_t i, std::size_t j) const { return above_[i].test(j); }
  bool Leq(std::size_t i, std::size_t j) const { return i == j || Less(i, j); }
  bool Comparable(std::size_t i, std::size_t j) const {
    return Leq(i, j) || Leq(j, i);
  }
  bool Covers(std::size_t lower, std::size_t upper) const;
  // Strict up-set / down-set.
  const Subset& Above(std::size_t i) const { return above_[i]; }
  const Subset& Below(std::size_t i) const { return below_[i]; }

  bool IsMinimal(std::size_t i) const { return below_[i].none(); }
  bool IsMaximal(std::size_t i) const { return above_[i].none(); }
  Subset Minimals() const;
  Subset Maximals() const;
  bool IsChain() const;

  // Kahn's algorithm, smallest index first among available elements.
  std::vector<std::size_t> LinearExtension() const;

  // Induced subposet on `keep`, labels carried over, index order preserved.
  Poset Induced(const Subset& keep) const;

  bool IsOrderIdeal(const Subset& s) const;
  // Order ideal generated by s.
  Subset IdealGeneratedBy(const Subset& s) const;

  // Connected Hasse diagram (the empty poset counts as connected).
  bool IsConnected() const;
  // P = P1 + P2 with both parts nonempty.
  bool IsDisjointUnion() const;
  // The down-closed part of an ordinal-sum split P = P1 ⊕ P2 with both parts
  // nonempty, or nullopt when none exists.
  std::optional<Subset> OrdinalSumSplit() const;
  bool IsOrdinalSum() const { return OrdinalSumSplit().has_value(); }

  // Maximal elements covering only minimal ones and minimal elements covered
  // only by maximal ones. Isolated elements qualify vacuously.
  Subset ExtremalAtomicElements() const;
  bool IsExtremalAtomicFree() const { return ExtremalAtomicElements().none(); }

  // Searches for a deletion sequence of extremal elements ending in a chain
  // of at least three elements, every intermediate poset connected and free
  // of extremal-atomic elements. Throws ResourceLimitError above
  // limits.poset_elements.
  bool IsStronglyExtremalAtomicFree(const Limits& limits = Limits()) const;
  // The deletion sequence found, if any.
  std::optional<std::vector<std::size_t>> StronglyExtremalAtomicFreeWitness(
      const Limits& limits = Limits()) const;

 private:
  void Build();

  std::vector<std::string> labels_;
  GroundSet ground_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<Subset> above_;
  std::vector<Subset> below_;
};

}  // namespace togglekit

#endif  // TOGGLEKIT_POSET_H_
