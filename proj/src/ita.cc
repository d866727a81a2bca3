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


#include "togglekit/ita.h"

#include <algorithm>
#include <map>
#include <optional>

#include "togglekit/errors.h"
#include "togglekit/essential.h"
#include "togglekit/perm_group.h"

namespace togglekit {
namespace {

constexpr std::size_t kBaseEssentialSize = 4;

SubsetFamily Restrict(const SubsetFamily& family, std::size_t e,
                      ItaBranch branch) {
  return branch == ItaBranch::kContaining ? MembersContaining(family, e)
                                          : MembersAvoiding(family, e);
}

// L_x ∪ t_e(L_x) = L and L_x ∩ t_e(L_x) ≠ ∅, t_e taken in L.
bool BranchConditionHolds(const SubsetFamily& family, std::size_t e,
                          const SubsetFamily& part) {
  std::vector<bool> covered(family.size(), false);
  bool meets = false;
  for (const Subset& x : part.members()) {
    covered[*family.IndexOf(x)] = true;
    const Subset y = ApplyToggle(family, e, x);
    covered[*family.IndexOf(y)] = true;
    if (part.Contains(y)) meets = true;
  }
  return meets && std::all_of(covered.begin(), covered.end(),
                              [](bool b) { return b; });
}

std::string BranchName(ItaBranch b) {
  return b == ItaBranch::kContaining ? "2a" : "2b";
}

class ItaSearch {
 public:
  explicit ItaSearch(const Limits& limits) : limits_(limits) {}

  bool Certify(const SubsetFamily& family, std::size_t depth) {
    if (depth > limits_.ita_depth) {
      throw ResourceLimitError("inductive certificate search exceeds depth " +
                               std::to_string(limits_.ita_depth));
    }
    std::vector<Subset> key = family.members();
    std::sort(key.begin(), key.end(), Subset::CanonicalLess);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (!it->second) {
        trace_.push_back({depth, family.size(), 0, "already refuted"});
      }
      return it->second;
    }
    const Essentialization ess = Essentialize(family);
    const std::size_t k = ess.family.ground_size();
    bool ok = false;
    if (k <= kBaseEssentialSize) {
      if (family.size() > limits_.classify_degree) {
        throw ResourceLimitError("base case of degree " +
                                 std::to_string(family.size()) +
                                 " exceeds the classification limit");
      }
      PermutationGroup g = GroupFromToggles(family);
      ok = g.ContainsAlternating();
      if (ok) {
        base_degree_ = family.size();
        base_essential_ = k;
        base_order_ = g.order();
      } else {
        trace_.push_back({depth, family.size(), k,
                          "base case: order " + g.order().str() +
                              " below half of " +
                              std::to_string(family.size()) + "!"});
      }
    } else {
      for (std::size_t c = 0; c < k && !ok; ++c) {
        const std::size_t e = ess.classes[c][0];
        for (ItaBranch branch : {ItaBranch::kContaining, ItaBranch::kAvoiding}) {
          const SubsetFamily part = Restrict(family, e, branch);
          const std::string head = "e=" + family.ground().label(e) + " " +
                                   BranchName(branch) + ": ";
          if (!BranchConditionHolds(family, e, part)) {
            trace_.push_back(
                {depth, family.size(), k, head + "union/intersection fails"});
            continue;
          }
          path_.push_back({e, family.ground().label(e), branch, family.size(),
                           k});
          if (Certify(part, depth + 1)) {
            ok = true;
            break;
          }
          path_.pop_back();
          trace_.push_back(
              {depth, family.size(), k, head + "restriction not certified"});
        }
      }
    }
    memo_.emplace(std::move(key), ok);
    return ok;
  }

  ItaCertificate Result(bool ok) {
    ItaCertificate cert;
    cert.verdict = ok ? ItaVerdict::kCertified : ItaVerdict::kNotCertified;
    if (ok) {
      cert.witness = path_;
      cert.base_degree = base_degree_;
      cert.base_essential_size = base_essential_;
      cert.base_order = base_order_;
    } else {
      cert.trace = trace_;
    }
    return cert;
  }

 private:
  const Limits& limits_;
  std::map<std::vector<Subset>, bool,
           bool (*)(const std::vector<Subset>&, const std::vector<Subset>&)>
      memo_{[](const std::vector<Subset>& a, const std::vector<Subset>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end(), Subset::CanonicalLess);
      }};
  std::vector<ItaStep> path_;
  std::vector<ItaTraceEntry> trace_;
  std::size_t base_degree_ = 0;
  std::size_t base_essential_ = 0;
  BigInt base_order_ = 0;
};

}  // namespace

std::string ToString(ItaVerdict v) {
  return v == ItaVerdict::kCertified ? "certified" : "not-certified";
}

ItaCertificate CheckInductivelyToggleAlternating(const SubsetFamily& family,
                                                 const Limits& limits) {
  ItaSearch search(limits);
  const bool ok = search.Certify(family, 0);
  return search.Result(ok);
}

bool ReplayItaCertificate(const SubsetFamily& family,
                          const ItaCertificate& certificate) {
  if (certificate.verdict != ItaVerdict::kCertified) return false;
  SubsetFamily current = family;
  for (const ItaStep& step : certificate.witness) {
    if (Essentialize(current).family.ground_size() <= kBaseEssentialSize) {
      return false;
    }
    const SubsetFamily part = Restrict(current, step.element, step.branch);
    if (!BranchConditionHolds(current, step.element, part)) return false;
    current = part;
  }
  if (Essentialize(current).family.ground_size() > kBaseEssentialSize) {
    return false;
  }
  const PermutationGroup g = GroupFromToggles(current);
  return g.ContainsAlternating() && g.order() == certificate.base_order;
}

}  // namespace togglekit
