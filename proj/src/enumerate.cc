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


#include "togglekit/enumerate.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "togglekit/errors.h"
#include "togglekit/generators.h"

namespace togglekit {
namespace {

void RequireAtMost(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw DomainError(std::string(what) + " enumeration supports sizes up to " +
                      std::to_string(cap));
  }
}

std::vector<std::string> NumberedLabels(std::size_t n) {
  return GroundSet::Numbered(n).labels();
}

// Strict order as above[i] bitmasks. The canonical code is the smallest
// relation encoding over all relabellings.
std::uint64_t PosetCode(const std::vector<std::uint32_t>& above) {
  const std::size_t n = above.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = UINT64_MAX;
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (above[i] >> j & 1u) code |= std::uint64_t{1} << (perm[i] * n + perm[j]);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Adjacency over vertex pairs; canonical code minimised over relabellings.
std::uint64_t GraphCode(std::size_t n,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = UINT64_MAX;
  do {
    std::uint64_t code = 0;
    for (const auto& [u, v] : edges) {
      std::size_t a = perm[u];
      std::size_t b = perm[v];
      if (a > b) std::swap(a, b);
      code |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

struct RawGraph {
  std::size_t vertices;
  EdgeList edges;
};

Graph MakeGraph(const RawGraph& g) {
  return Graph(NumberedLabels(g.vertices), g.edges);
}

// Connected graphs by edge count, built by adding one edge at a time.
std::vector<std::vector<RawGraph>> ConnectedByEdges(std::size_t max_edges) {
  std::vector<std::vector<RawGraph>> levels(max_edges + 1);
  levels[0].push_back({1, {}});
  for (std::size_t m = 1; m <= max_edges; ++m) {
    std::unordered_set<std::uint64_t> seen;
    for (const RawGraph& g : levels[m - 1]) {
      std::vector<RawGraph> candidates;
      for (std::size_t a = 0; a < g.vertices; ++a) {
        for (std::size_t b = a + 1; b < g.vertices; ++b) {
          if (std::find(g.edges.begin(), g.edges.end(),
                        std::make_pair(a, b)) != g.edges.end()) {
            continue;
          }
          RawGraph h = g;
          h.edges.emplace_back(a, b);
          candidates.push_back(std::move(h));
        }
        RawGraph h = g;
        h.edges.emplace_back(a, g.vertices);
        ++h.vertices;
        candidates.push_back(std::move(h));
      }
      for (RawGraph& h : candidates) {
        if (seen.insert(GraphCode(h.vertices, h.edges) * 16 + h.vertices)
                .second) {
          levels[m].push_back(std::move(h));
        }
      }
    }
  }
  return levels;
}

}  // namespace

std::vector<Poset> AllPosets(std::size_t n) {
  RequireAtMost(n, 7, "poset");
  // Every poset arises from one on n-1 elements by adding a maximal element
  // whose strict down-set is an order ideal.
  std::vector<std::vector<std::uint32_t>> level = {{}};
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::vector<std::uint32_t>> next;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& above : level) {
      const std::size_t k = above.size();
      for (std::uint32_t ideal = 0; ideal < (1u << k); ++ideal) {
        bool down_closed = true;
        for (std::size_t i = 0; i < k && down_closed; ++i) {
          if ((ideal >> i & 1u) == 0) continue;
          for (std::size_t j = 0; j < k; ++j) {
            if ((above[j] >> i & 1u) && !(ideal >> j & 1u)) {
              down_closed = false;
              break;
            }
          }
        }
        if (!down_closed) continue;
        std::vector<std::uint32_t> grown = above;
        grown.push_back(0);
        for (std::size_t i = 0; i < k; ++i) {
          if (ideal >> i & 1u) grown[i] |= 1u << k;
        }
        if (seen.insert(PosetCode(grown)).second) next.push_back(grown);
      }
    }
    level = std::move(next);
  }
  std::vector<Poset> out;
  for (const auto& above : level) {
    std::vector<Subset> sets;
    for (std::uint32_t a : above) sets.push_back(Subset::FromWord(n, a));
    out.push_back(Poset::FromStrictOrder(NumberedLabels(n), sets));
  }
  return out;
}

std::vector<Graph> AllGraphs(std::size_t n) {
  RequireAtMost(n, 6, "graph");
  EdgeList pairs;
  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t a = 0; a < b; ++a) pairs.emplace_back(a, b);
  }
  std::unordered_set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    EdgeList edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) edges.push_back(pairs[k]);
    }
    if (seen.insert(GraphCode(n, edges)).second) {
      out.push_back(Graph(NumberedLabels(n), edges));
    }
  }
  return out;
}

std::vector<Graph> AllConnectedGraphsWithEdges(std::size_t m) {
  RequireAtMost(m, 7, "connected graph");
  std::vector<Graph> out;
  const auto levels = ConnectedByEdges(m);
  for (const RawGraph& g : levels[m]) out.push_back(MakeGraph(g));
  return out;
}

std::vector<Graph> AllGraphsWithEdges(std::size_t m) {
  RequireAtMost(m, 7, "graph");
  const auto levels = ConnectedByEdges(m);
  // Multisets of connected components with at least one edge each, chosen in
  // non-increasing (edge count, index) order to avoid repeats.
  std::vector<Graph> out;
  std::vector<const RawGraph*> chosen;
  std::function<void(std::size_t, std::size_t, std::size_t)> rec =
      [&](std::size_t left, std::size_t max_edges, std::size_t max_index) {
        if (left == 0) {
          RawGraph g{0, {}};
          for (const RawGraph* c : chosen) {
            for (const auto& [a, b] : c->edges) {
              g.edges.emplace_back(a + g.vertices, b + g.vertices);
            }
            g.vertices += c->vertices;
          }
          out.push_back(MakeGraph(g));
          return;
        }
        for (std::size_t e = std::min(left, max_edges); e >= 1; --e) {
          const std::size_t top =
              e == max_edges ? max_index : levels[e].size() - 1;
          for (std::size_t i = 0; i <= top && i < levels[e].size(); ++i) {
            chosen.push_back(&levels[e][i]);
            rec(left - e, e, i);
            chosen.pop_back();
          }
        }
      };
  if (m == 0) return {Graph()};
  rec(m, m, SIZE_MAX);
  return out;
}

std::vector<Matroid> AllMatroids(std::size_t n) {
  RequireAtMost(n, 5, "matroid");
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint32_t> order(total);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<std::size_t> perm_init(n);
  std::iota(perm_init.begin(), perm_init.end(), 0);
  auto canonical = [&](const std::vector<std::uint32_t>& sets) {
    std::vector<std::size_t> perm = perm_init;
    std::vector<std::uint32_t> best;
    do {
      std::vector<std::uint32_t> mapped;
      for (std::uint32_t s : sets) {
        std::uint32_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (s >> i & 1u) t |= 1u << perm[i];
        }
        mapped.push_back(t);
      }
      std::sort(mapped.begin(), mapped.end());
      if (best.empty() || mapped < best) best = std::move(mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Matroid> out;
  std::vector<bool> in(total, false);
  std::vector<std::uint32_t> members;
  // Down-closed families containing ∅, deciding subsets by size.
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == total) {
      for (std::uint32_t x : members) {
        for (std::uint32_t y : members) {
          if (std::popcount(y) <= std::popcount(x)) continue;
          bool augments = false;
          for (std::size_t e = 0; e < n && !augments; ++e) {
            if ((y >> e & 1u) && !(x >> e & 1u) && in[x | (1u << e)]) {
              augments = true;
            }
          }
          if (!augments) return;
        }
      }
      if (!seen.insert(canonical(members)).second) return;
      std::vector<Subset> subsets;
      for (std::uint32_t s : members) subsets.push_back(Subset::FromWord(n, s));
      out.push_back(Matroid::Explicit(
          SubsetFamily(GroundSet::Numbered(n), std::move(subsets))));
      return;
    }
    const std::uint32_t s = order[k];
    bool allowed = true;
    for (std::size_t e = 0; e < n; ++e) {
      if ((s >> e & 1u) && !in[s & ~(1u << e)]) allowed = false;
    }
    if (s != 0) rec(k + 1);
    if (allowed) {
      in[s] = true;
      members.push_back(s);
      rec(k + 1);
      members.pop_back();
      in[s] = false;
    }
  };
  rec(0);
  return out;
}

std::vector<ClosureSystem> AllClosureSystems(std::size_t n) {
  RequireAtMost(n, 4, "closure system");
  const std::uint32_t full = (1u << n) - 1;
  const std::size_t proper = full;  // subsets 0 .. full-1
  std::vector<ClosureSystem> out;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << proper);
       ++choice) {
    const std::uint64_t present = choice | (std::uint64_t{1} << full);
    bool closed = true;
    for (std::uint32_t a = 0; a <= full && closed; ++a) {
      if (!(present >> a & 1)) continue;
      for (std::uint32_t b = a + 1; b <= full; ++b) {
        if ((present >> b & 1) && !(present >> (a & b) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Subset> members;
    for (std::uint32_t a = 0; a <= full; ++a) {
      if (present >> a & 1) members.push_back(Subset::FromWord(n, a));
    }
    out.emplace_back(SubsetFamily(GroundSet::Numbered(n), std::move(members)));
  }
  return out;
}

}  // namespace togglekit
