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

#ifndef TOGGLEKIT_PERM_GROUP_H_
#define TOGGLEKIT_PERM_GROUP_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "togglekit/family.h"
#include "togglekit/permutation.h"

namespace togglekit {

enum class GroupClass { kSymmetric, kAlternating, kOther };

std::string ToString(GroupClass c);

// A permutation group given by generators, with a base and strong generating
// set built by deterministic Schreier-Sims. Base points are chosen as the
// smallest point moved by the generator that forces a new level.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<std::size_t> base() const;
  // Sizes of the fundamental orbits, one per base point.
  std::vector<std::size_t> orbit_sizes() const;
  const BigInt& order() const { return order_; }

  bool Contains(const Permutation& p) const;

  // Sifts g through the stabilizer chain. Returns the residue and the level
  // at which sifting stopped (base length when it went all the way through).
  std::pair<Permutation, std::size_t> Strip(Permutation g,
                                            std::size_t from_level = 0) const;

  // Symmetric iff |G| = d!; alternating iff |G| = d!/2 with every generator
  // even; otherwise other.
  GroupClass Classify() const;
  // |G| >= d!/2, i.e. G contains the alternating group.
  bool ContainsAlternating() const;

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<std::size_t> generators;  // indices into strong_
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> slot;  // point -> orbit index, or -1
    std::vector<Permutation> transversal;  // maps `point` to orbit[k]
    std::vector<Permutation> inverse;
  };

  void AddLevel(std::uint32_t point);
  void RebuildOrbit(Level& level) const;
  void SchreierSims();

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  BigInt order_;
};

// The group T(L) generated by all toggles of a family, degree |L|.
PermutationGroup GroupFromToggles(const SubsetFamily& family);

}  // namespace togglekit

#endif  // TOGGLEKIT_PERM_GROUP_H_
