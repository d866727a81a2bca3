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


#include "togglekit/verify_suites.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <numeric>
#include <thread>
#include <utility>

#include "togglekit/closure_system.h"
#include "togglekit/commutation.h"
#include "togglekit/enumerate.h"
#include "togglekit/equivariance.h"
#include "togglekit/errors.h"
#include "togglekit/perm_group.h"

namespace togglekit {
namespace {

struct CaseOutcome {
  std::string category;
  bool passed = true;
  std::string object;
  std::string detail;
};

using Case = std::function<CaseOutcome()>;

std::string Describe(const Poset& p) {
  std::string out = "poset " + std::to_string(p.size()) + ":";
  for (const auto& [a, b] : p.covers()) {
    out += " " + p.ground().label(a) + "<" + p.ground().label(b);
  }
  return out;
}

std::string Describe(const Graph& g) {
  std::string out = "graph " + std::to_string(g.vertex_count()) + ":";
  for (const auto& [u, v] : g.edges()) {
    out += " " + g.vertex_ground().label(u) + "-" + g.vertex_ground().label(v);
  }
  return out;
}

std::string Describe(const SubsetFamily& f) {
  std::string out = "family on " + std::to_string(f.ground_size()) + ":";
  for (const Subset& m : f.members()) out += " " + f.ground().Format(m);
  return out;
}

std::string Describe(const Matroid& m) {
  return "matroid " + Describe(m.independents());
}

std::string Describe(const Source& s) {
  return std::visit([](const auto& x) { return Describe(x); }, s);
}

std::string FormatPairs(const SubsetFamily& family,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::string out;
  for (const auto& [e, f] : pairs) {
    if (!out.empty()) out += ", ";
    out += "(" + family.ground().label(e) + "," + family.ground().label(f) + ")";
  }
  return out;
}

std::string FormatOrder(const std::vector<std::size_t>& order) {
  std::string out = "[";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(order[i] + 1);
  }
  return out + "]";
}

Case CommutationCase(FamilyKind kind, Source source, const Limits& limits) {
  return [kind, source = std::move(source), limits] {
    CaseOutcome out;
    out.category = ToString(kind);
    const CommutationReport report = VerifyCommutation(kind, source, limits);
    if (!report.ok()) {
      out.passed = false;
      out.object = Describe(source);
      out.detail = "commutation differs on " +
                   FormatPairs(GenerateFamily(kind, source), report.mismatches);
    }
    return out;
  };
}

Case AlternatingCase(FamilyKind kind, Source source, bool report_only_label) {
  return [kind, source = std::move(source), report_only_label] {
    CaseOutcome out;
    out.category = ToString(kind);
    const SubsetFamily family = GenerateFamily(kind, source);
    const PermutationGroup group = GroupFromToggles(family);
    out.passed = group.ContainsAlternating();
    if (report_only_label) {
      out.category += out.passed ? " contains-alternating" : " smaller";
    }
    if (!out.passed) {
      out.object = Describe(source);
      out.detail = "|L| = " + std::to_string(family.size()) +
                   ", |T| = " + group.order().str();
    }
    return out;
  };
}

// `separated` selects the biconditional that also requires L' to need no
// contraction; otherwise distributivity alone is compared with bijectivity.
Case TheoremRowCase(std::string category, ClosureSystem system,
                    const Limits& limits, bool separated) {
  return [category = std::move(category), system = std::move(system), limits,
          separated] {
    CaseOutcome out;
    out.category = category;
    const TheoremRow row = VerifyTheoremRow(system, limits);
    out.passed = separated ? row.holds_separated : row.holds;
    if (!out.passed) {
      out.object = Describe(system.closed_sets());
      out.detail = std::string("bijective=") + (row.bijective ? "true" : "false") +
                   " distributive=" + (row.distributive ? "true" : "false") +
                   " separated=" + (row.separated ? "true" : "false") +
                   " round_trip=" + (row.round_trip ? "true" : "false");
    }
    return out;
  };
}

Case EquivarianceCase(std::string category, Poset poset, FamilyKind kind,
                      BlockCondition condition,
                      std::vector<std::size_t> element_order) {
  return [category = std::move(category), poset = std::move(poset), kind,
          condition, element_order = std::move(element_order)] {
    CaseOutcome out;
    out.category = category;
    const SubsetFamily family = GenerateFamily(kind, poset);
    std::vector<Subset> blocks;
    for (std::size_t e : element_order) {
      blocks.push_back(Subset(poset.size()).Toggled(e));
    }
    const EquivarianceResult r =
        CheckOrderEquivariance(family, blocks, condition, poset);
    if (r.outcome != EquivarianceOutcome::kHolds) {
      out.passed = false;
      out.object = Describe(poset) + " blocks " + FormatOrder(element_order);
      out.detail = ToString(r.outcome) + ": " + r.detail;
      if (r.first_order && r.second_order) {
        out.detail += " " + FormatOrder(*r.first_order) + " vs " +
                      FormatOrder(*r.second_order);
      }
    }
    return out;
  };
}

// Singleton block orders meeting the hypothesis: elements at distance > 1 in
// the order are comparable (chains) or incomparable (antichains).
bool SingletonHypothesis(const Poset& p, const std::vector<std::size_t>& order,
                         BlockCondition condition) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 2; j < order.size(); ++j) {
      const bool comparable = p.Comparable(order[i], order[j]);
      if (comparable != (condition == BlockCondition::kComparable)) return false;
    }
  }
  return true;
}

Poset ChainExamplePoset() {
  return Poset::FromLabels(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", "3"}, {"1", "4"}, {"2", "4"}, {"2", "5"}, {"3", "5"}, {"3", "6"},
       {"4", "6"}});
}

Poset AntichainExamplePoset() {
  return Poset::FromLabels(
      {"1", "2", "3", "4", "5", "6"},
      {{"1", "2"}, {"3", "2"}, {"3", "4"}, {"5", "4"}, {"5", "6"}});
}

std::vector<Case> CommutationCases(std::size_t n, const Limits& limits) {
  std::vector<Case> cases;
  const FamilyKind poset_kinds[] = {FamilyKind::kOrderIdeals, FamilyKind::kChains,
                                    FamilyKind::kAntichains,
                                    FamilyKind::kIntervalClosed};
  for (FamilyKind kind : poset_kinds) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (Poset& p : AllPosets(k)) cases.push_back(CommutationCase(kind, p, limits));
    }
  }
  for (FamilyKind kind : {FamilyKind::kIndependentSets, FamilyKind::kVertexCovers}) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (Graph& g : AllGraphs(k)) cases.push_back(CommutationCase(kind, g, limits));
    }
  }
  for (FamilyKind kind :
       {FamilyKind::kAcyclicSubgraphs, FamilyKind::kSpanningSubgraphs}) {
    for (std::size_t m = 1; m <= std::min<std::size_t>(n + 1, 7); ++m) {
      for (Graph& g : AllGraphsWithEdges(m)) {
        cases.push_back(CommutationCase(kind, g, limits));
      }
    }
  }
  for (std::size_t k = 1; k <= std::min<std::size_t>(n, 5); ++k) {
    for (Matroid& m : AllMatroids(k)) {
      cases.push_back(CommutationCase(FamilyKind::kMatroidIndependents, m, limits));
    }
  }
  return cases;
}

std::vector<Case> BaseCases(std::size_t n, const Limits& limits) {
  std::vector<Case> cases;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Poset& p : AllPosets(k)) {
      if (p.IsConnected()) {
        cases.push_back(AlternatingCase(FamilyKind::kOrderIdeals, p, false));
        cases.push_back(AlternatingCase(FamilyKind::kAntichains, p, false));
      }
      if (!p.IsOrdinalSum()) {
        cases.push_back(AlternatingCase(FamilyKind::kChains, p, false));
      }
      if (p.IsStronglyExtremalAtomicFree(limits)) {
        cases.push_back(AlternatingCase(FamilyKind::kIntervalClosed, p, false));
      }
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Graph& g : AllGraphs(k)) {
      if (!g.IsConnected()) continue;
      cases.push_back(AlternatingCase(FamilyKind::kIndependentSets, g, false));
      cases.push_back(AlternatingCase(FamilyKind::kVertexCovers, g, false));
    }
  }
  return cases;
}

std::vector<Case> TheoremRowCases(std::size_t n, const Limits& limits) {
  std::vector<Case> cases;
  for (std::size_t k = 0; k <= std::min<std::size_t>(n, 4); ++k) {
    for (const ClosureSystem& s : AllClosureSystems(k)) {
      cases.push_back(TheoremRowCase("closure-systems", s, limits, false));
      cases.push_back(
          TheoremRowCase("closure-systems separated", s, limits, true));
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Poset& p : AllPosets(k)) {
      cases.push_back(TheoremRowCase(
          "order-ideals", ClosureSystem::OfOrderIdeals(p), limits, false));
    }
  }
  return cases;
}

std::vector<Case> EquivarianceCases(std::size_t n) {
  std::vector<Case> cases;
  const std::vector<std::size_t> identity = {0, 1, 2, 3, 4, 5};
  cases.push_back(EquivarianceCase("chain-example", ChainExamplePoset(),
                                   FamilyKind::kChains,
                                   BlockCondition::kComparable, identity));
  cases.push_back(EquivarianceCase("antichain-example", AntichainExamplePoset(),
                                   FamilyKind::kAntichains,
                                   BlockCondition::kIncomparable, identity));
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Poset& p : AllPosets(k)) {
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), 0);
      do {
        if (SingletonHypothesis(p, order, BlockCondition::kComparable)) {
          cases.push_back(EquivarianceCase("chains", p, FamilyKind::kChains,
                                           BlockCondition::kComparable, order));
        }
        if (SingletonHypothesis(p, order, BlockCondition::kIncomparable)) {
          cases.push_back(EquivarianceCase("antichains", p,
                                           FamilyKind::kAntichains,
                                           BlockCondition::kIncomparable, order));
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  return cases;
}

std::vector<Case> IcRelaxedCases(std::size_t n) {
  std::vector<Case> cases;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Poset& p : AllPosets(k)) {
      if (!p.IsExtremalAtomicFree()) continue;
      cases.push_back(AlternatingCase(FamilyKind::kIntervalClosed, p, true));
    }
  }
  return cases;
}

std::vector<CaseOutcome> RunCases(const std::vector<Case>& cases,
                                  std::size_t workers) {
  std::vector<CaseOutcome> results(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        results[i] = cases[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(workers, cases.size()));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

std::string ToString(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::kCommutation:
      return "commutation";
    case VerifySuite::kBaseCases:
      return "base-cases";
    case VerifySuite::kTheoremRow:
      return "theorem-row";
    case VerifySuite::kEquivariance:
      return "equivariance";
    case VerifySuite::kIcRelaxed:
      return "ic-relaxed";
  }
  return "commutation";
}

VerifySuite ParseVerifySuite(std::string_view name) {
  for (VerifySuite s : AllVerifySuites()) {
    if (ToString(s) == name) return s;
  }
  throw ParseError("unknown verify suite '" + std::string(name) + "'");
}

std::vector<VerifySuite> AllVerifySuites() {
  return {VerifySuite::kCommutation, VerifySuite::kBaseCases,
          VerifySuite::kTheoremRow, VerifySuite::kEquivariance,
          VerifySuite::kIcRelaxed};
}

std::size_t DefaultMaxSize(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::kCommutation:
    case VerifySuite::kEquivariance:
      return 5;
    case VerifySuite::kBaseCases:
    case VerifySuite::kTheoremRow:
    case VerifySuite::kIcRelaxed:
      return 4;
  }
  return 4;
}

SuiteResult RunVerifySuite(VerifySuite suite, const VerifyOptions& options) {
  SuiteResult result;
  result.suite = suite;
  result.max_size = options.max_size.value_or(DefaultMaxSize(suite));
  result.report_only = suite == VerifySuite::kIcRelaxed;
  const std::size_t n = result.max_size;
  std::vector<Case> cases;
  switch (suite) {
    case VerifySuite::kCommutation:
      cases = CommutationCases(n, options.limits);
      break;
    case VerifySuite::kBaseCases:
      cases = BaseCases(n, options.limits);
      break;
    case VerifySuite::kTheoremRow:
      cases = TheoremRowCases(n, options.limits);
      break;
    case VerifySuite::kEquivariance:
      cases = EquivarianceCases(n);
      break;
    case VerifySuite::kIcRelaxed:
      cases = IcRelaxedCases(n);
      break;
  }
  for (CaseOutcome& c : RunCases(cases, options.workers)) {
    auto it = std::find_if(result.tallies.begin(), result.tallies.end(),
                           [&](const CategoryTally& t) { return t.category == c.category; });
    if (it == result.tallies.end()) {
      result.tallies.push_back({c.category, 0, 0});
      it = result.tallies.end() - 1;
    }
    ++it->cases;
    ++result.cases;
    if (c.passed) continue;
    ++it->failures;
    ++result.failures;
    result.counterexamples.push_back(
        {std::move(c.category), std::move(c.object), std::move(c.detail)});
  }
  return result;
}

}  // namespace togglekit
