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

#ifndef TOGGLEKIT_FAMILY_H_
#define TOGGLEKIT_FAMILY_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "togglekit/subset.h"

namespace togglekit {

// Finite ground set E with opaque, pairwise distinct labels. Element i is
// identified with labels()[i].
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);
  // Labels "1", "2", ..., "n".
  static GroundSet Numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> Find(std::string_view label) const;
  // Throws DomainError for unknown labels.
  std::size_t IndexOf(std::string_view label) const;

  Subset MakeSubset(std::span<const std::string> labels) const;
  Subset MakeSubset(std::initializer_list<std::string_view> labels) const;
  std::vector<std::string> Labels(const Subset& s) const;
  // "{1,2,3}"; the empty set prints as "{}".
  std::string Format(const Subset& s) const;

  bool operator==(const GroundSet& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class MemberOrder {
  kGiven,      // caller order preserved verbatim; duplicates rejected
  kCanonical,  // deduplicated, sorted by cardinality then mask value
};

// An immutable family L of subsets of a ground set, with 0-based positional
// access. Cycle notation uses 1-based positions.
class SubsetFamily {
 public:
  SubsetFamily();
  SubsetFamily(GroundSet ground, std::vector<Subset> members,
               MemberOrder order = MemberOrder::kCanonical);
  // Members given as label lists.
  static SubsetFamily FromLabels(
      GroundSet ground, const std::vector<std::vector<std::string>>& members,
      MemberOrder order = MemberOrder::kGiven);

  const GroundSet& ground() const { return *ground_; }
  std::shared_ptr<const GroundSet> shared_ground() const { return ground_; }
  std::size_t ground_size() const { return ground_->size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Subset& member(std::size_t i) const { return members_.at(i); }
  const std::vector<Subset>& members() const { return members_; }

  std::optional<std::size_t> IndexOf(const Subset& s) const;
  bool Contains(const Subset& s) const { return IndexOf(s).has_value(); }

  // Same members under canonical order.
  SubsetFamily Canonicalized() const;
  // The members satisfying `keep`, in the current order, over the same ground.
  template <typename Pred>
  SubsetFamily Filter(Pred&& keep) const {
    std::vector<Subset> kept;
    for (const Subset& s : members_) {
      if (keep(s)) kept.push_back(s);
    }
    return SubsetFamily(ground_, std::move(kept));
  }

  // The members at `positions`, in that order, over the same ground.
  SubsetFamily Subfamily(const std::vector<std::size_t>& positions) const;
  // Another family over the same ground; order preserved, duplicates
  // rejected.
  SubsetFamily WithMembers(std::vector<Subset> members) const;

  // Members as label lists, in order.
  std::vector<std::vector<std::string>> MemberLabels() const;

  // Equal as sets of subsets over equal ground sets (order ignored).
  bool SameMembers(const SubsetFamily& other) const;

 private:
  SubsetFamily(std::shared_ptr<const GroundSet> ground,
               std::vector<Subset> members);
  void BuildIndex();

  std::shared_ptr<const GroundSet> ground_;
  std::vector<Subset> members_;
  std::unordered_map<Subset, std::size_t, SubsetHash> index_;
};

// t_e(X): X with e toggled when the result lies in L, else X.
// Throws DomainError if X is not a member or e is outside the ground set.
Subset ApplyToggle(const SubsetFamily& family, std::size_t element,
                   const Subset& x);
Subset ApplyToggle(const SubsetFamily& family, std::string_view element,
                   const Subset& x);

// Position-level toggle: images[i] = index of t_e(member i).
std::vector<std::uint32_t> ToggleImages(const SubsetFamily& family,
                                        std::size_t element);

// Deduplicated union in canonical order. Ground sets must be identical.
SubsetFamily UnionFamilies(const SubsetFamily& a, const SubsetFamily& b);

// L_e (members containing e) and L_ē (members avoiding e), order preserved.
SubsetFamily MembersContaining(const SubsetFamily& family, std::size_t element);
SubsetFamily MembersAvoiding(const SubsetFamily& family, std::size_t element);

// Pairwise intersection / union closure tests.
bool IsIntersectionClosed(const SubsetFamily& family);
bool IsUnionClosed(const SubsetFamily& family);

}  // namespace togglekit

#endif  // TOGGLEKIT_FAMILY_H_
