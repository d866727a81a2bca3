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

#include "togglekit/perm_group.h"

#include <algorithm>

#include "togglekit/errors.h"
#include "togglekit/toggles.h"

namespace togglekit {

std::string ToString(GroupClass c) {
  switch (c) {
    case GroupClass::kSymmetric:
      return "Symmetric";
    case GroupClass::kAlternating:
      return "Alternating";
    case GroupClass::kOther:
      return "Other";
  }
  return "Other";
}

PermutationGroup::PermutationGroup(std::size_t degree,
                                   std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Permutation& g : generators_) {
    if (g.degree() != degree_) {
      throw DomainError("generator degree " + std::to_string(g.degree()) +
                        " differs from group degree " +
                        std::to_string(degree_));
    }
  }
  SchreierSims();
}

std::vector<std::size_t> PermutationGroup::base() const {
  std::vector<std::size_t> b;
  for (const Level& l : levels_) b.push_back(l.point);
  return b;
}

std::vector<std::size_t> PermutationGroup::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const Level& l : levels_) s.push_back(l.orbit.size());
  return s;
}

void PermutationGroup::AddLevel(std::uint32_t point) {
  Level level;
  level.point = point;
  level.slot.assign(degree_, -1);
  for (std::size_t s = 0; s < strong_.size(); ++s) {
    bool fixes = true;
    for (const Level& prev : levels_) {
      if (strong_[s](prev.point) != prev.point) {
        fixes = false;
        break;
      }
    }
    if (fixes) level.generators.push_back(s);
  }
  levels_.push_back(std::move(level));
  RebuildOrbit(levels_.back());
}

void PermutationGroup::RebuildOrbit(Level& level) const {
  level.orbit.clear();
  level.transversal.clear();
  level.inverse.clear();
  std::fill(level.slot.begin(), level.slot.end(), -1);
  level.orbit.push_back(level.point);
  level.slot[level.point] = 0;
  level.transversal.emplace_back(degree_);
  level.inverse.emplace_back(degree_);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const std::uint32_t beta = level.orbit[k];
    for (std::size_t s : level.generators) {
      const std::uint32_t gamma = strong_[s](beta);
      if (level.slot[gamma] >= 0) continue;
      level.slot[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      Permutation u = strong_[s] * level.transversal[k];
      level.inverse.push_back(u.Inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::Strip(
    Permutation g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    const std::int32_t k = level.slot[g(level.point)];
    if (k < 0) return {std::move(g), l};
    g = level.inverse[static_cast<std::size_t>(k)] * g;
  }
  return {std::move(g), levels_.size()};
}

void PermutationGroup::SchreierSims() {
  for (const Permutation& g : generators_) {
    if (g.IsIdentity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) != strong_.end()) continue;
    strong_.push_back(g);
  }
  // Initial base: every strong generator moves some base point.
  std::vector<std::uint32_t> points;
  for (const Permutation& g : strong_) {
    bool fixes_all = true;
    for (std::uint32_t b : points) {
      if (g(b) != b) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) points.push_back(static_cast<std::uint32_t>(g.FirstMovedPoint()));
  }
  for (std::uint32_t b : points) AddLevel(b);

  // Work downward from the deepest level; whenever a Schreier generator
  // fails to sift, extend the chain and resume at the level where it failed.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t level_index = i - 1;
    bool extended = false;
    for (std::size_t k = 0; k < levels_[level_index].orbit.size() && !extended;
         ++k) {
      const std::size_t gen_count = levels_[level_index].generators.size();
      for (std::size_t gi = 0; gi < gen_count; ++gi) {
        const Level& level = levels_[level_index];
        const Permutation& s = strong_[level.generators[gi]];
        const std::uint32_t beta = level.orbit[k];
        const std::int32_t target = level.slot[s(beta)];
        Permutation schreier = level.inverse[static_cast<std::size_t>(target)] *
                               (s * level.transversal[k]);
        auto [residue, stop] = Strip(std::move(schreier), level_index + 1);
        if (residue.IsIdentity()) continue;
        if (stop == levels_.size()) {
          AddLevel(static_cast<std::uint32_t>(residue.FirstMovedPoint()));
        }
        strong_.push_back(std::move(residue));
        const std::size_t new_index = strong_.size() - 1;
        for (std::size_t l = level_index + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(new_index);
          RebuildOrbit(levels_[l]);
        }
        i = stop + 1;
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  order_ = 1;
  for (const Level& l : levels_) order_ *= l.orbit.size();
}

bool PermutationGroup::Contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stop] = Strip(p);
  return stop == levels_.size() && residue.IsIdentity();
}

GroupClass PermutationGroup::Classify() const {
  const BigInt full = Factorial(degree_);
  if (order_ == full) return GroupClass::kSymmetric;
  if (order_ * 2 == full) {
    for (const Permutation& g : generators_) {
      if (!g.IsEven()) return GroupClass::kOther;
    }
    return GroupClass::kAlternating;
  }
  return GroupClass::kOther;
}

bool PermutationGroup::ContainsAlternating() const {
  return order_ * 2 >= Factorial(degree_);
}

PermutationGroup GroupFromToggles(const SubsetFamily& family) {
  return PermutationGroup(family.size(), TogglePermutations(family));
}

}  // namespace togglekit
