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


#include "togglekit/essential.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "togglekit/errors.h"

namespace togglekit {
namespace {

// Column of element e: the positions of the members containing it.
Subset Column(const std::vector<Subset>& members, std::size_t e) {
  Subset col(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].test(e)) col.set(i);
  }
  return col;
}

// One reduction pass. Returns false when nothing changed.
bool ReducePass(std::vector<Subset>& members,
                std::vector<std::vector<std::size_t>>& classes) {
  const std::size_t n = classes.size();
  std::vector<Subset> columns;
  columns.reserve(n);
  for (std::size_t e = 0; e < n; ++e) columns.push_back(Column(members, e));
  std::vector<std::size_t> keep;
  std::vector<std::vector<std::size_t>> merged;
  std::vector<bool> absorbed(n, false);
  for (std::size_t e = 0; e < n; ++e) {
    if (absorbed[e]) continue;
    const std::size_t c = columns[e].count();
    if (c == 0 || c == members.size()) continue;
    std::vector<std::size_t> cls = classes[e];
    for (std::size_t f = e + 1; f < n; ++f) {
      if (!absorbed[f] && columns[f] == columns[e]) {
        absorbed[f] = true;
        cls.insert(cls.end(), classes[f].begin(), classes[f].end());
      }
    }
    std::sort(cls.begin(), cls.end());
    keep.push_back(e);
    merged.push_back(std::move(cls));
  }
  if (keep.size() == n) return false;
  for (Subset& m : members) {
    Subset reduced(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      if (m.test(keep[k])) reduced.set(k);
    }
    m = std::move(reduced);
  }
  classes = std::move(merged);
  return true;
}

// Per-element invariant used to prune the bijection search: the sorted sizes
// of the members containing the element.
std::vector<std::size_t> Signature(const std::vector<Subset>& members,
                                   std::size_t e) {
  std::vector<std::size_t> sizes;
  for (const Subset& m : members) {
    if (m.test(e)) sizes.push_back(m.count());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

class IsoSearch {
 public:
  IsoSearch(const std::vector<Subset>& a, const std::vector<Subset>& b,
            std::size_t n)
      : a_(a), b_(b), n_(n), map_(n, 0), used_(n, false),
        proj_a_(a.size(), 0), proj_b_(b.size(), 0) {
    for (std::size_t e = 0; e < n; ++e) {
      sig_a_.push_back(Signature(a, e));
      sig_b_.push_back(Signature(b, e));
    }
    // Place the rarest signatures first.
    order_.resize(n);
    for (std::size_t e = 0; e < n; ++e) order_[e] = e;
    std::map<std::vector<std::size_t>, std::size_t> freq;
    for (const auto& s : sig_a_) ++freq[s];
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) {
                       return freq[sig_a_[x]] < freq[sig_a_[y]];
                     });
  }

  bool Run() { return Extend(0); }
  const std::vector<std::size_t>& mapping() const { return map_; }

 private:
  bool Extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t e = order_[depth];
    for (std::size_t f = 0; f < n_; ++f) {
      if (used_[f] || sig_a_[e] != sig_b_[f]) continue;
      const std::uint64_t bit = std::uint64_t{1} << depth;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i].test(e)) proj_a_[i] |= bit;
        if (b_[i].test(f)) proj_b_[i] |= bit;
      }
      if (ProjectionsAgree()) {
        used_[f] = true;
        map_[e] = f;
        if (Extend(depth + 1)) return true;
        used_[f] = false;
      }
      for (std::size_t i = 0; i < a_.size(); ++i) {
        proj_a_[i] &= ~bit;
        proj_b_[i] &= ~bit;
      }
    }
    return false;
  }

  bool ProjectionsAgree() const {
    std::vector<std::uint64_t> x = proj_a_;
    std::vector<std::uint64_t> y = proj_b_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  const std::vector<Subset>& a_;
  const std::vector<Subset>& b_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> sig_a_;
  std::vector<std::vector<std::size_t>> sig_b_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> proj_a_;
  std::vector<std::uint64_t> proj_b_;
};

}  // namespace

Essentialization Essentialize(const SubsetFamily& family) {
  std::vector<Subset> members = family.members();
  std::vector<std::vector<std::size_t>> classes(family.ground_size());
  for (std::size_t e = 0; e < classes.size(); ++e) classes[e] = {e};
  while (ReducePass(members, classes)) {
  }
  std::vector<std::string> labels;
  labels.reserve(classes.size());
  for (const auto& cls : classes) labels.push_back(family.ground().label(cls[0]));
  Essentialization out{
      SubsetFamily(GroundSet(std::move(labels)), std::move(members),
                   MemberOrder::kGiven),
      std::move(classes)};
  return out;
}

std::optional<std::vector<std::size_t>> FindIsomorphism(
    const SubsetFamily& a, const SubsetFamily& b, const Limits& limits) {
  const Essentialization ea = Essentialize(a);
  const Essentialization eb = Essentialize(b);
  const std::size_t n = ea.family.ground_size();
  if (n != eb.family.ground_size() || ea.family.size() != eb.family.size()) {
    return std::nullopt;
  }
  const std::size_t cap = std::min<std::size_t>(limits.isomorphism_elements, 64);
  if (n > cap) {
    throw ResourceLimitError("isomorphism search on " + std::to_string(n) +
                             " essential elements exceeds the limit of " +
                             std::to_string(cap));
  }
  IsoSearch search(ea.family.members(), eb.family.members(), n);
  if (!search.Run()) return std::nullopt;
  return search.mapping();
}

}  // namespace togglekit
