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


// Extension module togglekit._togglekit. Structured values cross the
// boundary as JSON text in the formats of the command-line tool; the Python
// package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "togglekit/closure_system.h"
#include "togglekit/commutation.h"
#include "togglekit/dot.h"
#include "togglekit/errors.h"
#include "togglekit/ita.h"
#include "togglekit/json_io.h"
#include "togglekit/perm_group.h"
#include "togglekit/structure_report.h"
#include "togglekit/toggles.h"
#include "togglekit/verify_suites.h"

namespace py = pybind11;

namespace togglekit {
namespace {

SubsetFamily Family(const std::string& text) {
  return FamilyFromJson(ParseJsonText(text, "family"));
}

ClosureSystem Closure(const std::string& text) {
  return ClosureSystemFromJson(ParseJsonText(text, "closure system"));
}

std::vector<std::string> Toggles(const std::string& family) {
  return ToggleCycleStrings(Family(family));
}

std::string Group(const std::string& family) {
  return ToJson(GroupFromToggles(Family(family))).dump();
}

std::string Generate(const std::string& kind, const std::string& source) {
  return ToJson(GenerateFamily(ParseFamilyKind(kind),
                               SourceFromJson(ParseJsonText(source, "source"))))
      .dump();
}

std::string Structure(const std::string& text, bool ita) {
  const SubsetFamily family = Family(text);
  StructureOptions options;
  options.ita = ita;
  options.limits = Limits::FromEnvironment();
  std::optional<ItaCertificate> whole;
  if (ita) whole = CheckInductivelyToggleAlternating(family, options.limits);
  return ToJson(BuildStructureReport(family, options), whole,
                CommutationToJson(CommutationGraph(family), family))
      .dump();
}

std::string CoverClosure(const std::string& system, bool orbits) {
  return CoverClosureToJson(Closure(system), orbits).dump();
}

std::string TheoremRowJson(const std::string& system) {
  const TheoremRow row = VerifyTheoremRow(Closure(system));
  Json out;
  out["bijective"] = row.bijective;
  out["distributive"] = row.distributive;
  out["separated"] = row.separated;
  out["extracted_poset"] =
      row.extracted_poset ? ToJson(*row.extracted_poset) : Json(nullptr);
  out["round_trip"] = row.round_trip;
  out["holds"] = row.holds;
  out["holds_separated"] = row.holds_separated;
  return out.dump();
}

std::string Verify(const std::string& suite, std::optional<std::size_t> max_size,
                   std::size_t workers) {
  VerifyOptions options;
  options.max_size = max_size;
  options.workers = workers;
  options.limits = Limits::FromEnvironment();
  SuiteResult result;
  {
    py::gil_scoped_release release;
    result = RunVerifySuite(ParseVerifySuite(suite), options);
  }
  return ToJson(result).dump();
}

}  // namespace
}  // namespace togglekit

PYBIND11_MODULE(_togglekit, m) {
  using namespace togglekit;
  m.doc() = "Toggle groups of subset families";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                             PyExc_RuntimeError);

  m.def("toggles", &Toggles, py::arg("family"),
        "Cycle strings of every toggle of a family given as JSON text.");
  m.def("group", &Group, py::arg("family"),
        "Toggle group as JSON text: degree, generators, order, "
        "classification.");
  m.def("generate", &Generate, py::arg("kind"), py::arg("source"),
        "Family of the given kind built from a poset, graph or matroid.");
  m.def("structure", &Structure, py::arg("family"), py::arg("ita") = false,
        "Structure report as JSON text.");
  m.def("cover_closure", &CoverClosure, py::arg("system"),
        py::arg("orbits") = false, "Cover-closure table as JSON text.");
  m.def("theorem_row", &TheoremRowJson, py::arg("system"),
        "Bijectivity and distributivity of a closure system.");
  m.def("toggle_poset_dot",
        [](const std::string& family) { return TogglePosetDot(Family(family)); },
        py::arg("family"));
  m.def("cover_closure_dot",
        [](const std::string& system) { return CoverClosureDot(Closure(system)); },
        py::arg("system"));
  m.def("verify", &Verify, py::arg("suite"), py::arg("max_size") = py::none(),
        py::arg("workers") = 1, "Runs a verification suite.");
}
