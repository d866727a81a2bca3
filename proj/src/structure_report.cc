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


#include "togglekit/structure_report.h"

#include "togglekit/decompose.h"
#include "togglekit/errors.h"
#include "togglekit/essential.h"

namespace togglekit {
namespace {

class ReportBuilder {
 public:
  ReportBuilder(const StructureOptions& options, StructureReport& report)
      : options_(options), report_(report) {}

  void Visit(const SubsetFamily& family, const std::string& path) {
    if (auto sum = DetectToggleDisjointSum(family)) {
      report_.trace.push_back(path + ": sum of " +
                              std::to_string(sum->first.size()) + " + " +
                              std::to_string(sum->second.size()) +
                              " members");
      Visit(sum->first, path + "/sum[0]");
      Visit(sum->second, path + "/sum[1]");
      return;
    }
    if (auto product = DetectToggleDisjointProduct(family)) {
      std::string sizes;
      for (const SubsetFamily& f : product->factors) {
        sizes += (sizes.empty() ? "" : " x ") + std::to_string(f.size());
      }
      report_.trace.push_back(path + ": product of " + sizes + " members");
      for (std::size_t k = 0; k < product->factors.size(); ++k) {
        Visit(product->factors[k],
              path + "/product[" + std::to_string(k) + "]");
      }
      return;
    }
    Leaf(family, path);
  }

 private:
  void Leaf(const SubsetFamily& family, const std::string& path) {
    FactorReport f;
    f.family = family;
    f.path = path;
    f.degree = family.size();
    f.essential_size = Essentialize(family).family.ground_size();
    if (f.degree <= options_.limits.classify_degree) {
      const PermutationGroup g = GroupFromToggles(family);
      f.order = g.order();
      f.classification = g.Classify();
      f.contains_alternating = g.ContainsAlternating();
      f.justification = "direct Schreier-Sims";
    } else {
      f.justification = "order not computed (degree above limit)";
    }
    if (options_.ita) {
      try {
        f.ita = CheckInductivelyToggleAlternating(family, options_.limits);
        if (!f.order && f.ita->verdict == ItaVerdict::kCertified) {
          f.contains_alternating = true;
          f.justification = "inductive certificate";
        }
      } catch (const ResourceLimitError& e) {
        f.justification += "; inductive search infeasible: ";
        f.justification += e.what();
      }
    }
    report_.factors.push_back(std::move(f));
  }

  const StructureOptions& options_;
  StructureReport& report_;
};

}  // namespace

StructureReport BuildStructureReport(const SubsetFamily& family,
                                     const StructureOptions& options) {
  StructureReport report;
  ReportBuilder(options, report).Visit(family, "root");
  BigInt product = 1;
  bool all_known = true;
  for (const FactorReport& f : report.factors) {
    if (f.order) {
      product *= *f.order;
    } else {
      all_known = false;
    }
  }
  if (all_known) report.factor_order_product = product;
  if (family.size() <= options.limits.classify_degree) {
    const PermutationGroup g = GroupFromToggles(family);
    report.whole_order = g.order();
    report.whole_classification = g.Classify();
  }
  if (report.whole_order && report.factor_order_product) {
    report.consistent = *report.whole_order == *report.factor_order_product;
  }
  return report;
}

}  // namespace togglekit
