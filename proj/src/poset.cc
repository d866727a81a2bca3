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


#include "togglekit/poset.h"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "togglekit/errors.h"

namespace togglekit {

Poset::Poset(std::vector<std::string> labels,
             std::vector<std::pair<std::size_t, std::size_t>> covers)
    : labels_(std::move(labels)), covers_(std::move(covers)) {
  Build();
}

Poset Poset::FromLabels(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  GroundSet ground(labels);
  std::vector<std::pair<std::size_t, std::size_t>> indexed;
  for (const auto& [lo, hi] : covers) {
    auto a = ground.Find(lo);
    auto b = ground.Find(hi);
    if (!a || !b) {
      throw ValidationError("cover (" + lo + ", " + hi +
                            ") names an unknown element");
    }
    indexed.emplace_back(*a, *b);
  }
  return Poset(std::move(labels), std::move(indexed));
}

Poset Poset::FromStrictOrder(std::vector<std::string> labels,
                             const std::vector<Subset>& above) {
  const std::size_t n = labels.size();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    above[i].ForEach([&](std::size_t j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (above[i].test(k) && above[k].test(j)) return;
      }
      covers.emplace_back(i, j);
    });
  }
  Poset p(std::move(labels), std::move(covers));
  for (std::size_t i = 0; i < n; ++i) {
    if (!(p.above_[i] == above[i])) {
      throw ValidationError("strict order is not transitive at element " +
                            p.labels_[i]);
    }
  }
  return p;
}

void Poset::Build() {
  const std::size_t n = labels_.size();
  ground_ = GroundSet(labels_);
  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : covers_) {
    if (a >= n || b >= n) throw ValidationError("cover index out of range");
    if (a == b) {
      throw ValidationError("element " + labels_[a] + " covers itself");
    }
    if (!seen.emplace(a, b).second) {
      throw ValidationError("duplicate cover (" + labels_[a] + ", " +
                            labels_[b] + ")");
    }
    upper_covers_[a].push_back(b);
    lower_covers_[b].push_back(a);
  }
  for (auto& v : upper_covers_) std::sort(v.begin(), v.end());
  for (auto& v : lower_covers_) std::sort(v.begin(), v.end());

  // Topological order; leftover elements lie on a cycle.
  std::vector<std::size_t> indegree(n);
  for (std::size_t i = 0; i < n; ++i) indegree[i] = lower_covers_[i].size();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) order.push_back(i);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t j : upper_covers_[order[k]]) {
      if (--indegree[j] == 0) order.push_back(j);
    }
  }
  if (order.size() != n) {
    throw ValidationError("cover relation contains a cycle");
  }
  above_.assign(n, Subset(n));
  below_.assign(n, Subset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t j : upper_covers_[*it]) {
      above_[*it].set(j);
      above_[*it] |= above_[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    above_[i].ForEach([&](std::size_t j) { below_[j].set(i); });
  }
  for (const auto& [a, b] : covers_) {
    for (std::size_t c : upper_covers_[a]) {
      if (c != b && above_[c].test(b)) {
        throw ValidationError("cover (" + labels_[a] + ", " + labels_[b] +
                              ") is implied by transitivity through " +
                              labels_[c]);
      }
    }
  }
}

Poset Poset::Chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return Poset(std::move(labels), std::move(covers));
}

Poset Poset::Antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return Poset(std::move(labels), {});
}

Poset Poset::ProductOfChains(std::size_t a, std::size_t b) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      labels.push_back("(" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")");
      if (i + 1 < a) covers.emplace_back(i * b + j, (i + 1) * b + j);
      if (j + 1 < b) covers.emplace_back(i * b + j, i * b + j + 1);
    }
  }
  return Poset(std::move(labels), std::move(covers));
}

Poset Poset::DisjointSum(const Poset& p, const Poset& q) {
  std::vector<std::string> labels = p.labels_;
  labels.insert(labels.end(), q.labels_.begin(), q.labels_.end());
  std::vector<std::pair<std::size_t, std::size_t>> covers = p.covers_;
  for (const auto& [a, b] : q.covers_) {
    covers.emplace_back(a + p.size(), b + p.size());
  }
  return Poset(std::move(labels), std::move(covers));
}

Poset Poset::OrdinalSum(const Poset& p, const Poset& q) {
  std::vector<std::string> labels = p.labels_;
  labels.insert(labels.end(), q.labels_.begin(), q.labels_.end());
  std::vector<std::pair<std::size_t, std::size_t>> covers = p.covers_;
  for (const auto& [a, b] : q.covers_) {
    covers.emplace_back(a + p.size(), b + p.size());
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.IsMaximal(i)) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q.IsMinimal(j)) covers.emplace_back(i, j + p.size());
    }
  }
  return Poset(std::move(labels), std::move(covers));
}

bool Poset::Covers(std::size_t lower, std::size_t upper) const {
  const auto& ups = upper_covers_[lower];
  return std::binary_search(ups.begin(), ups.end(), upper);
}

Subset Poset::Minimals() const {
  Subset s(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (IsMinimal(i)) s.set(i);
  }
  return s;
}

Subset Poset::Maximals() const {
  Subset s(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (IsMaximal(i)) s.set(i);
  }
  return s;
}

bool Poset::IsChain() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (!Comparable(i, j)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> Poset::LinearExtension() const {
  const std::size_t n = size();
  std::vector<std::size_t> indegree(n);
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    indegree[i] = lower_covers_[i].size();
    if (indegree[i] == 0) ready.insert(i);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (std::size_t j : upper_covers_[v]) {
      if (--indegree[j] == 0) ready.insert(j);
    }
  }
  return order;
}

Poset Poset::Induced(const Subset& keep) const {
  const std::vector<std::size_t> kept = keep.Elements();
  std::vector<std::string> labels;
  std::vector<Subset> above;
  for (std::size_t i : kept) labels.push_back(labels_[i]);
  for (std::size_t i : kept) {
    Subset a(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (Less(i, kept[k])) a.set(k);
    }
    above.push_back(std::move(a));
  }
  return FromStrictOrder(std::move(labels), above);
}

bool Poset::IsOrderIdeal(const Subset& s) const {
  if (s.width() != size()) return false;
  bool ok = true;
  s.ForEach([&](std::size_t i) {
    if (!below_[i].IsSubsetOf(s)) ok = false;
  });
  return ok;
}

Subset Poset::IdealGeneratedBy(const Subset& s) const {
  Subset ideal = s;
  s.ForEach([&](std::size_t i) { ideal |= below_[i]; });
  return ideal;
}

bool Poset::IsConnected() const {
  const std::size_t n = size();
  if (n == 0) return true;
  Subset seen(n);
  std::vector<std::size_t> stack = {0};
  seen.set(0);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    Subset next = (above_[v] | below_[v]) - seen;
    next.ForEach([&](std::size_t w) {
      seen.set(w);
      stack.push_back(w);
    });
  }
  return seen.count() == n;
}

bool Poset::IsDisjointUnion() const { return size() >= 2 && !IsConnected(); }

std::optional<Subset> Poset::OrdinalSumSplit() const {
  // Every ordinal-sum split is a prefix of every linear extension.
  const std::vector<std::size_t> order = LinearExtension();
  Subset lower(size());
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    lower.set(order[k]);
    const Subset upper = Subset::Full(size()) - lower;
    bool split = true;
    lower.ForEach([&](std::size_t i) {
      if (!upper.IsSubsetOf(above_[i])) split = false;
    });
    if (split) return lower;
  }
  return std::nullopt;
}

Subset Poset::ExtremalAtomicElements() const {
  Subset out(size());
  for (std::size_t m = 0; m < size(); ++m) {
    bool atomic = false;
    if (IsMaximal(m)) {
      atomic = std::all_of(lower_covers_[m].begin(), lower_covers_[m].end(),
                           [&](std::size_t c) { return IsMinimal(c); });
    }
    if (!atomic && IsMinimal(m)) {
      atomic = std::all_of(upper_covers_[m].begin(), upper_covers_[m].end(),
                           [&](std::size_t c) { return IsMaximal(c); });
    }
    if (atomic) out.set(m);
  }
  return out;
}

bool Poset::IsStronglyExtremalAtomicFree(const Limits& limits) const {
  return StronglyExtremalAtomicFreeWitness(limits).has_value();
}

std::optional<std::vector<std::size_t>>
Poset::StronglyExtremalAtomicFreeWitness(const Limits& limits) const {
  if (size() > limits.poset_elements) {
    throw ResourceLimitError("strongly-extremal-atomic-free search on " +
                             std::to_string(size()) +
                             " elements exceeds the limit of " +
                             std::to_string(limits.poset_elements));
  }
  std::unordered_set<Subset, SubsetHash> failed;
  std::vector<std::size_t> sequence;
  // Depth-first over remaining-element sets; `failed` memoizes dead ends.
  auto search = [&](auto&& self, const Subset& remaining) -> bool {
    if (failed.count(remaining)) return false;
    const Poset sub = Induced(remaining);
    if (sub.IsConnected() && sub.IsExtremalAtomicFree()) {
      if (sub.IsChain()) {
        if (sub.size() >= 3) return true;
      } else {
        const std::vector<std::size_t> kept = remaining.Elements();
        for (std::size_t k = 0; k < kept.size(); ++k) {
          if (!sub.IsMinimal(k) && !sub.IsMaximal(k)) continue;
          sequence.push_back(kept[k]);
          Subset next = remaining;
          next.reset(kept[k]);
          if (self(self, next)) return true;
          sequence.pop_back();
        }
      }
    }
    failed.insert(remaining);
    return false;
  };
  if (search(search, Subset::Full(size()))) return sequence;
  return std::nullopt;
}

}  // namespace togglekit
