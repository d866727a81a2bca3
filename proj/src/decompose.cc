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


#include "togglekit/decompose.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <unordered_set>

#include "togglekit/errors.h"
#include "togglekit/essential.h"

namespace togglekit {
namespace {

constexpr std::size_t kMaxProductComponents = 20;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // The smaller root survives so that groups are named by their first item.
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t ProjectionCount(const std::vector<Subset>& members,
                            const Subset& block) {
  std::unordered_set<Subset, SubsetHash> seen;
  for (const Subset& m : members) seen.insert(m & block);
  return seen.size();
}

// Whether `members` (all distinct) equal proj_block x proj_rest.
bool SplitsOff(const std::vector<Subset>& members, const Subset& block,
               const Subset& rest) {
  const std::size_t a = ProjectionCount(members, block);
  const std::size_t b = ProjectionCount(members, rest);
  return a * b == members.size();
}

// Calls visit(chosen) for every subset of `pool` in order of increasing size,
// then lexicographically, until visit returns true.
bool ForEachSubsetBySize(
    const std::vector<std::size_t>& pool,
    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, std::size_t)> rec =
      [&](std::size_t start, std::size_t left) -> bool {
    if (left == 0) return visit(chosen);
    for (std::size_t i = start; i + left <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (rec(i + 1, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= pool.size(); ++size) {
    if (rec(0, size)) return true;
  }
  return false;
}

}  // namespace

SubsetFamily Project(const SubsetFamily& family, const Subset& block) {
  std::vector<Subset> out;
  std::unordered_set<Subset, SubsetHash> seen;
  for (const Subset& m : family.members()) {
    Subset p = m & block;
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return family.WithMembers(std::move(out));
}

std::optional<SumSplit> DetectToggleDisjointSum(const SubsetFamily& family) {
  const std::size_t m = family.size();
  if (m < 2) return std::nullopt;
  UnionFind linked(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t e = 0; e < family.ground_size(); ++e) {
      if (auto j = family.IndexOf(family.member(i).Toggled(e))) {
        linked.Union(i, *j);
      }
    }
  }
  std::vector<std::size_t> component(m);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t r = linked.Find(i);
    if (r == i) {
      component[i] = parts.size();
      parts.emplace_back();
    }
    component[i] = component[r];
    parts[component[i]].push_back(i);
  }
  if (parts.size() < 2) return std::nullopt;

  const std::size_t n = family.ground_size();
  auto support = [&](const std::vector<bool>& side, bool value) {
    Subset any(n);
    Subset all = Subset::Full(n);
    bool empty = true;
    for (std::size_t c = 0; c < parts.size(); ++c) {
      if (side[c] != value) continue;
      for (std::size_t i : parts[c]) {
        any |= family.member(i);
        all &= family.member(i);
        empty = false;
      }
    }
    return empty ? Subset(n) : any - all;
  };
  auto varies = [&](std::size_t c, std::size_t e) {
    const bool first = family.member(parts[c][0]).test(e);
    for (std::size_t i : parts[c]) {
      if (family.member(i).test(e) != first) return true;
    }
    return false;
  };

  // Grows the side holding member 1 until the supports of both sides are
  // disjoint. An element varying on both sides forces every component that
  // varies it across; otherwise the components on the far side all hold it
  // constant, and one of its two values must move over entirely.
  std::function<std::optional<std::vector<bool>>(std::vector<bool>)> grow =
      [&](std::vector<bool> side) -> std::optional<std::vector<bool>> {
    while (true) {
      if (std::all_of(side.begin(), side.end(), [](bool b) { return b; })) {
        return std::nullopt;
      }
      const Subset overlap = support(side, true) & support(side, false);
      if (overlap.none()) return side;
      const std::size_t e = overlap.First();
      bool forced = false;
      for (std::size_t c = 0; c < parts.size(); ++c) {
        if (!side[c] && varies(c, e)) {
          side[c] = true;
          forced = true;
        }
      }
      if (forced) continue;
      std::vector<bool> with(side);
      std::vector<bool> without(side);
      std::size_t moved_with = 0;
      for (std::size_t c = 0; c < parts.size(); ++c) {
        if (side[c]) continue;
        if (family.member(parts[c][0]).test(e)) {
          with[c] = true;
          ++moved_with;
        } else {
          without[c] = true;
        }
      }
      const std::size_t far = static_cast<std::size_t>(
          std::count(side.begin(), side.end(), false));
      const bool with_first = moved_with <= far - moved_with;
      if (auto r = grow(with_first ? with : without)) return r;
      return grow(with_first ? without : with);
    }
  };
  std::vector<bool> start(parts.size(), false);
  start[component[0]] = true;
  const std::optional<std::vector<bool>> side = grow(std::move(start));
  if (!side) return std::nullopt;

  SumSplit split;
  for (std::size_t i = 0; i < m; ++i) {
    ((*side)[component[i]] ? split.first_positions : split.second_positions)
        .push_back(i);
  }
  split.first = family.Subfamily(split.first_positions);
  split.second = family.Subfamily(split.second_positions);
  return split;
}

std::optional<ProductSplit> DetectToggleDisjointProduct(
    const SubsetFamily& family) {
  const Essentialization ess = Essentialize(family);
  const std::size_t n = ess.family.ground_size();
  if (n < 2) return std::nullopt;
  const std::vector<Subset>& members = ess.family.members();

  // e ~ f when some (in e, in f) pattern is missing from L'.
  UnionFind dependent(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t f = e + 1; f < n; ++f) {
      unsigned patterns = 0;
      for (const Subset& x : members) {
        patterns |= 1u << (2 * x.test(e) + x.test(f));
        if (patterns == 15u) break;
      }
      if (patterns != 15u) dependent.Union(e, f);
    }
  }
  std::vector<Subset> components;
  std::vector<std::size_t> component_of(n);
  for (std::size_t e = 0; e < n; ++e) {
    const std::size_t r = dependent.Find(e);
    if (r == e) {
      component_of[e] = components.size();
      components.emplace_back(n);
    }
    component_of[e] = component_of[r];
    components[component_of[e]].set(e);
  }

  std::vector<Subset> blocks;
  std::size_t product = 1;
  for (const Subset& c : components) {
    product *= ProjectionCount(members, c);
    if (product > members.size()) break;
  }
  if (product == members.size()) {
    blocks = components;
  } else {
    std::vector<std::size_t> remaining(components.size());
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<Subset> current = members;
    while (!remaining.empty()) {
      if (remaining.size() > kMaxProductComponents) {
        throw ResourceLimitError(
            "product detection over " + std::to_string(remaining.size()) +
            " dependence components exceeds the limit of " +
            std::to_string(kMaxProductComponents));
      }
      Subset all(n);
      for (std::size_t c : remaining) all |= components[c];
      const std::vector<std::size_t> pool(remaining.begin() + 1,
                                          remaining.end());
      Subset found(n);
      ForEachSubsetBySize(pool, [&](const std::vector<std::size_t>& extra) {
        Subset block = components[remaining[0]];
        for (std::size_t c : extra) block |= components[c];
        if (!SplitsOff(current, block, all - block)) return false;
        found = block;
        return true;
      });
      blocks.push_back(found);
      std::vector<std::size_t> next;
      for (std::size_t c : remaining) {
        if (!components[c].IsSubsetOf(found)) next.push_back(c);
      }
      remaining = std::move(next);
      // Continue on the distinct projections onto what is left.
      std::unordered_set<Subset, SubsetHash> seen;
      std::vector<Subset> rest;
      for (const Subset& x : current) {
        Subset p = x - found;
        if (seen.insert(p).second) rest.push_back(std::move(p));
      }
      current = std::move(rest);
    }
  }
  if (blocks.size() < 2) return std::nullopt;

  ProductSplit split;
  for (const Subset& b : blocks) {
    Subset expanded(family.ground_size());
    b.ForEach([&](std::size_t e) {
      for (std::size_t original : ess.classes[e]) expanded.set(original);
    });
    split.factors.push_back(Project(family, expanded));
    split.blocks.push_back(std::move(expanded));
  }
  return split;
}

}  // namespace togglekit
