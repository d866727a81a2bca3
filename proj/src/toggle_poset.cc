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


#include "togglekit/toggle_poset.h"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace togglekit {

TogglePoset::TogglePoset(const SubsetFamily& family)
    : size_(family.size()),
      members_(family.members()),
      up_(family.size()),
      down_(family.size()) {
  for (std::size_t i = 0; i < size_; ++i) {
    const Subset& x = family.member(i);
    for (std::size_t e = 0; e < family.ground_size(); ++e) {
      if (x.test(e)) continue;
      if (auto j = family.IndexOf(x.Toggled(e))) {
        up_[i].push_back(edges_.size());
        down_[*j].push_back(edges_.size());
        edges_.push_back({i, *j, e});
      }
    }
  }
  // Up-sets, filled from the largest members down.
  std::vector<std::size_t> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return members_[a].count() > members_[b].count();
  });
  reach_.assign(size_, Subset(size_));
  for (std::size_t i : order) {
    reach_[i].set(i);
    for (std::size_t k : up_[i]) reach_[i] |= reach_[edges_[k].upper];
  }
}

bool TogglePoset::IsConnected() const {
  if (size_ <= 1) return true;
  std::vector<bool> seen(size_, false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        stack.push_back(w);
      }
    };
    for (std::size_t k : up_[v]) visit(edges_[k].upper);
    for (std::size_t k : down_[v]) visit(edges_[k].lower);
  }
  return visited == size_;
}

bool TogglePoset::IsStronglyGraded() const {
  if (size_ == 0) return true;
  // Shortest and longest chain length from a minimal element to each member.
  std::vector<std::size_t> order(size_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return members_[a].count() < members_[b].count();
  });
  std::vector<std::size_t> lo(size_, 0);
  std::vector<std::size_t> hi(size_, 0);
  for (std::size_t v : order) {
    if (down_[v].empty()) continue;
    lo[v] = SIZE_MAX;
    for (std::size_t k : down_[v]) {
      lo[v] = std::min(lo[v], lo[edges_[k].lower] + 1);
      hi[v] = std::max(hi[v], hi[edges_[k].lower] + 1);
    }
  }
  std::size_t min_len = SIZE_MAX;
  std::size_t max_len = 0;
  for (std::size_t v = 0; v < size_; ++v) {
    if (!up_[v].empty()) continue;
    min_len = std::min(min_len, lo[v]);
    max_len = std::max(max_len, hi[v]);
  }
  return min_len == max_len;
}

bool TogglePoset::EqualsContainmentOrder() const {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (members_[i].IsSubsetOf(members_[j]) != Leq(i, j)) return false;
    }
  }
  return true;
}

}  // namespace togglekit
