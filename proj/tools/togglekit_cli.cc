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


// Command-line front end: gen, toggles, group, structure, poset, cc, verify.
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
// limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "togglekit/closure_system.h"
#include "togglekit/commutation.h"
#include "togglekit/dot.h"
#include "togglekit/errors.h"
#include "togglekit/ita.h"
#include "togglekit/json_io.h"
#include "togglekit/limits.h"
#include "togglekit/perm_group.h"
#include "togglekit/structure_report.h"
#include "togglekit/toggles.h"
#include "togglekit/verify_suites.h"

namespace togglekit {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

void WriteFile(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot write file");
  out << text;
}

void PrintJson(const Json& j) { std::cout << FormatJson(j) << "\n"; }

int Run(int argc, char** argv) {
  CLI::App app{"Toggle groups of subset families"};
  app.require_subcommand(1);
  std::string limits_spec;
  app.add_option("--limits", limits_spec,
                 "Limit overrides, e.g. iso=16,edges=20 (on top of $" +
                     std::string(kLimitsEnvVar) + ")");

  std::string in_path;
  std::string kind_name;
  bool lines = false;
  bool ita = false;
  bool orbits = false;
  std::string poset_dot = "-";
  std::string cc_dot;
  std::string suite_name;
  std::optional<std::size_t> max_size;
  std::size_t workers = 1;

  CLI::App* gen = app.add_subcommand("gen", "Generate a family from a poset, graph or matroid");
  gen->add_option("--kind", kind_name, "Family kind")->required();
  gen->add_option("--in", in_path, "Source object JSON")->required();

  CLI::App* toggles = app.add_subcommand("toggles", "Print toggles in cycle notation");
  toggles->add_option("--in", in_path, "Family JSON")->required();
  toggles->add_flag("--lines", lines, "One cycle string per line");

  CLI::App* group = app.add_subcommand("group", "Order and classification of T(L)");
  group->add_option("--in", in_path, "Family JSON")->required();

  CLI::App* structure = app.add_subcommand("structure", "Structure report");
  structure->add_option("--in", in_path, "Family JSON")->required();
  structure->add_flag("--ita", ita, "Add inductive certificates");

  CLI::App* poset = app.add_subcommand("poset", "Toggle poset as DOT");
  poset->add_option("--in", in_path, "Family JSON")->required();
  poset->add_option("--dot", poset_dot, "Output DOT file ('-' for stdout)");

  CLI::App* cc = app.add_subcommand("cc", "Cover-closure of a closure system");
  cc->add_option("--in", in_path, "Closure system JSON")->required();
  cc->add_flag("--orbits", orbits, "Include trajectories");
  cc->add_option("--dot", cc_dot, "Also write ξ as DOT ('-' for stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("--suite", suite_name,
                     "commutation, base-cases, theorem-row, equivariance or "
                     "ic-relaxed")
      ->required();
  verify->add_option("--max-size", max_size, "Size bound for the sweep");
  verify->add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Limits limits = Limits::FromEnvironment();
  if (!limits_spec.empty()) limits = Limits::Parse(limits_spec, limits);

  if (gen->parsed()) {
    const FamilyKind kind = ParseFamilyKind(kind_name);
    const Source source = SourceFromJson(ReadJsonFile(in_path));
    PrintJson(ToJson(GenerateFamily(kind, source)));
    return kExitOk;
  }
  if (toggles->parsed()) {
    const SubsetFamily family = FamilyFromJson(ReadJsonFile(in_path));
    const auto cycles = ToggleCycleStrings(family);
    if (lines) {
      for (const std::string& c : cycles) std::cout << c << "\n";
    } else {
      std::cout << Json(cycles).dump() << "\n";
    }
    return kExitOk;
  }
  if (group->parsed()) {
    const SubsetFamily family = FamilyFromJson(ReadJsonFile(in_path));
    if (family.size() > limits.classify_degree) {
      throw ResourceLimitError("family has " + std::to_string(family.size()) +
                               " members, above the classify limit of " +
                               std::to_string(limits.classify_degree));
    }
    PrintJson(ToJson(GroupFromToggles(family)));
    return kExitOk;
  }
  if (structure->parsed()) {
    const SubsetFamily family = FamilyFromJson(ReadJsonFile(in_path));
    StructureOptions options;
    options.ita = ita;
    options.limits = limits;
    const StructureReport report = BuildStructureReport(family, options);
    std::optional<ItaCertificate> whole;
    if (ita) whole = CheckInductivelyToggleAlternating(family, limits);
    const Json commutation = CommutationToJson(CommutationGraph(family), family);
    PrintJson(ToJson(report, whole, commutation));
    return kExitOk;
  }
  if (poset->parsed()) {
    const SubsetFamily family = FamilyFromJson(ReadJsonFile(in_path));
    WriteFile(poset_dot, TogglePosetDot(family));
    return kExitOk;
  }
  if (cc->parsed()) {
    const ClosureSystem system = ClosureSystemFromJson(ReadJsonFile(in_path));
    PrintJson(CoverClosureToJson(system, orbits));
    if (!cc_dot.empty()) WriteFile(cc_dot, CoverClosureDot(system));
    return kExitOk;
  }
  // verify
  VerifyOptions options;
  options.max_size = max_size;
  options.workers = workers;
  options.limits = limits;
  const SuiteResult result = RunVerifySuite(ParseVerifySuite(suite_name), options);
  PrintJson(ToJson(result));
  std::cerr << ToString(result.suite) << ": " << result.cases << " cases, "
            << result.failures << " failures"
            << (result.report_only ? " (report only)" : "") << "\n";
  return result.passed() ? kExitOk : kExitVerificationFailure;
}

}  // namespace
}  // namespace togglekit

int main(int argc, char** argv) {
  using namespace togglekit;
  try {
    return Run(argc, argv);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}
