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

#include "togglekit/family.h"

#include <algorithm>
#include <unordered_set>

#include "togglekit/errors.h"

namespace togglekit {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw ValidationError("duplicate ground-set label '" + labels_[i] + "'");
    }
  }
}

GroundSet GroundSet::Numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

std::optional<std::size_t> GroundSet::Find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroundSet::IndexOf(std::string_view label) const {
  if (auto i = Find(label)) return *i;
  throw DomainError("element '" + std::string(label) +
                    "' is not in the ground set");
}

Subset GroundSet::MakeSubset(std::span<const std::string> labels) const {
  Subset s(size());
  for (const std::string& l : labels) s.set(IndexOf(l));
  return s;
}

Subset GroundSet::MakeSubset(
    std::initializer_list<std::string_view> labels) const {
  Subset s(size());
  for (std::string_view l : labels) s.set(IndexOf(l));
  return s;
}

std::vector<std::string> GroundSet::Labels(const Subset& s) const {
  std::vector<std::string> out;
  s.ForEach([&](std::size_t i) { out.push_back(labels_.at(i)); });
  return out;
}

std::string GroundSet::Format(const Subset& s) const {
  std::string out = "{";
  bool first = true;
  s.ForEach([&](std::size_t i) {
    if (!first) out += ',';
    out += labels_.at(i);
    first = false;
  });
  out += '}';
  return out;
}

SubsetFamily::SubsetFamily()
    : ground_(std::make_shared<const GroundSet>()) {}

SubsetFamily::SubsetFamily(GroundSet ground, std::vector<Subset> members,
                           MemberOrder order)
    : ground_(std::make_shared<const GroundSet>(std::move(ground))),
      members_(std::move(members)) {
  for (const Subset& s : members_) {
    if (s.width() != ground_->size()) {
      throw DomainError("member width " + std::to_string(s.width()) +
                        " does not match ground-set size " +
                        std::to_string(ground_->size()));
    }
  }
  if (order == MemberOrder::kCanonical) {
    std::sort(members_.begin(), members_.end(), Subset::CanonicalLess);
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }
  BuildIndex();
}

SubsetFamily::SubsetFamily(std::shared_ptr<const GroundSet> ground,
                           std::vector<Subset> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  BuildIndex();
}

SubsetFamily SubsetFamily::FromLabels(
    GroundSet ground, const std::vector<std::vector<std::string>>& members,
    MemberOrder order) {
  std::vector<Subset> subsets;
  subsets.reserve(members.size());
  for (const auto& m : members) {
    Subset s(ground.size());
    for (const std::string& l : m) {
      const std::size_t i = ground.IndexOf(l);
      if (s.test(i)) {
        throw DomainError("element '" + l + "' repeated within a member");
      }
      s.set(i);
    }
    subsets.push_back(std::move(s));
  }
  return SubsetFamily(std::move(ground), std::move(subsets), order);
}

void SubsetFamily::BuildIndex() {
  index_.clear();
  index_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (!index_.emplace(members_[i], i).second) {
      throw DomainError("duplicate member " + ground_->Format(members_[i]) +
                        " at position " + std::to_string(i + 1));
    }
  }
}

std::optional<std::size_t> SubsetFamily::IndexOf(const Subset& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubsetFamily SubsetFamily::Canonicalized() const {
  std::vector<Subset> sorted = members_;
  std::sort(sorted.begin(), sorted.end(), Subset::CanonicalLess);
  return SubsetFamily(ground_, std::move(sorted));
}

SubsetFamily SubsetFamily::Subfamily(
    const std::vector<std::size_t>& positions) const {
  std::vector<Subset> picked;
  picked.reserve(positions.size());
  for (std::size_t i : positions) picked.push_back(members_.at(i));
  return SubsetFamily(ground_, std::move(picked));
}

SubsetFamily SubsetFamily::WithMembers(std::vector<Subset> members) const {
  for (const Subset& s : members) {
    if (s.width() != ground_->size()) {
      throw DomainError("member width " + std::to_string(s.width()) +
                        " differs from ground size " +
                        std::to_string(ground_->size()));
    }
  }
  return SubsetFamily(ground_, std::move(members));
}

std::vector<std::vector<std::string>> SubsetFamily::MemberLabels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(members_.size());
  for (const Subset& s : members_) out.push_back(ground_->Labels(s));
  return out;
}

bool SubsetFamily::SameMembers(const SubsetFamily& other) const {
  if (!(ground() == other.ground()) || size() != other.size()) return false;
  for (const Subset& s : members_) {
    if (!other.Contains(s)) return false;
  }
  return true;
}

Subset ApplyToggle(const SubsetFamily& family, std::size_t element,
                   const Subset& x) {
  if (element >= family.ground_size()) {
    throw DomainError("toggle element index " + std::to_string(element) +
                      " is not in the ground set");
  }
  if (x.width() != family.ground_size() || !family.Contains(x)) {
    throw DomainError("subset is not a member of the family");
  }
  Subset y = x.Toggled(element);
  return family.Contains(y) ? y : x;
}

Subset ApplyToggle(const SubsetFamily& family, std::string_view element,
                   const Subset& x) {
  return ApplyToggle(family, family.ground().IndexOf(element), x);
}

std::vector<std::uint32_t> ToggleImages(const SubsetFamily& family,
                                        std::size_t element) {
  if (element >= family.ground_size()) {
    throw DomainError("toggle element index " + std::to_string(element) +
                      " is not in the ground set");
  }
  std::vector<std::uint32_t> images(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto j = family.IndexOf(family.member(i).Toggled(element));
    images[i] = static_cast<std::uint32_t>(j ? *j : i);
  }
  return images;
}

SubsetFamily UnionFamilies(const SubsetFamily& a, const SubsetFamily& b) {
  if (!(a.ground() == b.ground())) {
    throw DomainError("union of families over different ground sets");
  }
  std::vector<Subset> all = a.members();
  all.insert(all.end(), b.members().begin(), b.members().end());
  return SubsetFamily(a.ground(), std::move(all), MemberOrder::kCanonical);
}

SubsetFamily MembersContaining(const SubsetFamily& family,
                               std::size_t element) {
  if (element >= family.ground_size()) {
    throw DomainError("element index out of range");
  }
  return family.Filter([&](const Subset& s) { return s.test(element); });
}

SubsetFamily MembersAvoiding(const SubsetFamily& family, std::size_t element) {
  if (element >= family.ground_size()) {
    throw DomainError("element index out of range");
  }
  return family.Filter([&](const Subset& s) { return !s.test(element); });
}

bool IsIntersectionClosed(const SubsetFamily& family) {
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!family.Contains(m[i] & m[j])) return false;
    }
  }
  return true;
}

bool IsUnionClosed(const SubsetFamily& family) {
  const auto& m = family.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!family.Contains(m[i] | m[j])) return false;
    }
  }
  return true;
}

}  // namespace togglekit
