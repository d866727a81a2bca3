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


#include "togglekit/json_io.h"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "togglekit/errors.h"
#include "togglekit/toggles.h"

namespace togglekit {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& why) {
  throw ParseError(path + ": " + why);
}

std::string Key(const std::string& path, std::string_view key) {
  return path + "." + std::string(key);
}

std::string At(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& Field(const Json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) Fail(path, "expected an object");
  auto it = j.find(std::string(key));
  if (it == j.end()) Fail(path, "missing key \"" + std::string(key) + "\"");
  return *it;
}

const Json& Array(const Json& j, const std::string& path) {
  if (!j.is_array()) Fail(path, "expected an array");
  return j;
}

std::string String(const Json& j, const std::string& path) {
  if (!j.is_string()) Fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> Strings(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& a = Array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(String(a[i], At(path, i)));
  return out;
}

std::size_t Label(const GroundSet& ground, const Json& j,
                  const std::string& path) {
  const std::string label = String(j, path);
  const auto index = ground.Find(label);
  if (!index) Fail(path, "unknown element '" + label + "'");
  return *index;
}

std::pair<std::string, std::string> LabelPair(const Json& j,
                                              const std::string& path) {
  const Json& a = Array(j, path);
  if (a.size() != 2) Fail(path, "expected a pair");
  return {String(a[0], At(path, 0)), String(a[1], At(path, 1))};
}

// Runs `build`, turning domain and validation errors into ParseErrors at
// `path`.
template <typename F>
auto Validated(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const DomainError& e) {
    Fail(path, e.what());
  } catch (const ValidationError& e) {
    Fail(path, e.what());
  }
}

GroundSet GroundFromJson(const Json& j, const std::string& path) {
  std::vector<std::string> labels = Strings(j, path);
  return Validated(path, [&] { return GroundSet(std::move(labels)); });
}

std::vector<Subset> SetsFromJson(const GroundSet& ground, const Json& j,
                                 const std::string& path) {
  std::vector<Subset> out;
  const Json& a = Array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string member_path = At(path, i);
    const Json& m = Array(a[i], member_path);
    Subset s(ground.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
      const std::size_t e = Label(ground, m[k], At(member_path, k));
      if (s.test(e)) Fail(At(member_path, k), "element repeated");
      s.set(e);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Json SetJson(const GroundSet& ground, const Subset& s) {
  Json out = Json::array();
  for (const std::string& l : ground.Labels(s)) out.push_back(l);
  return out;
}

Json SetsJson(const SubsetFamily& family) {
  Json out = Json::array();
  for (const Subset& m : family.members()) out.push_back(SetJson(family.ground(), m));
  return out;
}

Json OptionalOrder(const std::optional<BigInt>& order) {
  return order ? Json(order->str()) : Json(nullptr);
}

Graph GraphFields(const Json& j, const std::string& path) {
  std::vector<std::string> vertices = Strings(Field(j, "vertices", path),
                                              Key(path, "vertices"));
  const GroundSet ground = GroundFromJson(Json(vertices), Key(path, "vertices"));
  const std::string edges_path = Key(path, "edges");
  const Json& edges = Array(Field(j, "edges", path), edges_path);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = At(edges_path, i);
    const Json& e = Array(edges[i], p);
    if (e.size() != 2) Fail(p, "expected a pair");
    pairs.emplace_back(Label(ground, e[0], At(p, 0)), Label(ground, e[1], At(p, 1)));
  }
  std::vector<std::string> edge_labels;
  if (j.contains("edge_labels")) {
    edge_labels = Strings(j["edge_labels"], Key(path, "edge_labels"));
    if (edge_labels.size() != pairs.size()) {
      Fail(Key(path, "edge_labels"), "expected one label per edge");
    }
  }
  return Validated(path, [&] {
    return Graph(std::move(vertices), std::move(pairs), std::move(edge_labels));
  });
}

Json FactorJson(const FactorReport& f) {
  Json out;
  out["path"] = f.path;
  out["ground"] = f.family.ground().labels();
  out["members"] = SetsJson(f.family);
  out["degree"] = f.degree;
  out["essential_size"] = f.essential_size;
  out["order"] = OptionalOrder(f.order);
  out["class"] = f.classification ? Json(ToString(*f.classification)) : Json(nullptr);
  out["contains_alternating"] =
      f.contains_alternating ? Json(*f.contains_alternating) : Json(nullptr);
  out["justification"] = f.justification;
  if (f.ita) out["ita"] = ToJson(*f.ita);
  return out;
}

bool HoldsObject(const Json& j) {
  if (j.is_object()) return true;
  if (!j.is_array()) return false;
  for (const Json& x : j) {
    if (HoldsObject(x)) return true;
  }
  return false;
}

void Format(const Json& j, std::size_t indent, std::string& out) {
  if (!HoldsObject(j)) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool object = j.is_object();
  out += object ? "{" : "[";
  if (j.empty()) {
    out += object ? "}" : "]";
    return;
  }
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out += first ? "\n" : ",\n";
    first = false;
    out += pad;
    if (object) out += Json(it.key()).dump() + ": ";
    Format(it.value(), indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (object ? "}" : "]");
}

}  // namespace

std::string FormatJson(const Json& j) {
  std::string out;
  Format(j, 0, out);
  return out;
}

Json ParseJsonText(std::string_view text, std::string_view name) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string why = e.what();
    if (auto pos = why.find("syntax error"); pos != std::string::npos) {
      why = why.substr(pos);
    }
    throw ParseError(std::string(name) + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": " + why);
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseJsonText(buffer.str(), path);
}

SubsetFamily FamilyFromJson(const Json& j) {
  const std::string path = "$";
  const GroundSet ground = GroundFromJson(Field(j, "ground", path), "$.ground");
  std::vector<Subset> members =
      SetsFromJson(ground, Field(j, "members", path), "$.members");
  MemberOrder order = MemberOrder::kGiven;
  if (j.contains("order")) {
    const std::string o = String(j["order"], "$.order");
    if (o == "canonical") {
      order = MemberOrder::kCanonical;
    } else if (o != "given") {
      Fail("$.order", "expected \"given\" or \"canonical\"");
    }
  }
  return Validated("$.members", [&] {
    return SubsetFamily(ground, std::move(members), order);
  });
}

Json ToJson(const SubsetFamily& family) {
  Json out;
  out["ground"] = family.ground().labels();
  out["members"] = SetsJson(family);
  out["order"] = "given";
  return out;
}

Poset PosetFromJson(const Json& j) {
  std::vector<std::string> elements =
      Strings(Field(j, "elements", "$"), "$.elements");
  const Json& covers = Array(Field(j, "covers", "$"), "$.covers");
  std::vector<std::pair<std::string, std::string>> pairs;
  const GroundSet ground = GroundFromJson(Json(elements), "$.elements");
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const std::string p = At("$.covers", i);
    auto pair = LabelPair(covers[i], p);
    Label(ground, Json(pair.first), At(p, 0));
    Label(ground, Json(pair.second), At(p, 1));
    pairs.push_back(std::move(pair));
  }
  return Validated("$.covers", [&] {
    return Poset::FromLabels(std::move(elements), pairs);
  });
}

Json ToJson(const Poset& poset) {
  Json out;
  out["elements"] = poset.labels();
  Json covers = Json::array();
  for (const auto& [a, b] : poset.covers()) {
    covers.push_back({poset.ground().label(a), poset.ground().label(b)});
  }
  out["covers"] = std::move(covers);
  return out;
}

Graph GraphFromJson(const Json& j) { return GraphFields(j, "$"); }

Json ToJson(const Graph& graph) {
  Json out;
  out["vertices"] = graph.vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges()) {
    edges.push_back({graph.vertex_ground().label(u), graph.vertex_ground().label(v)});
  }
  out["edges"] = std::move(edges);
  out["edge_labels"] = graph.edge_labels();
  return out;
}

Matroid MatroidFromJson(const Json& j) {
  const std::string kind = String(Field(j, "kind", "$"), "$.kind");
  if (kind == "explicit") {
    const GroundSet ground = GroundFromJson(Field(j, "ground", "$"), "$.ground");
    std::vector<Subset> sets =
        SetsFromJson(ground, Field(j, "independents", "$"), "$.independents");
    return Validated("$.independents", [&] {
      return Matroid::Explicit(
          SubsetFamily(ground, std::move(sets), MemberOrder::kCanonical));
    });
  }
  if (kind == "graphic") return Matroid::Graphic(GraphFields(j, "$"));
  if (kind == "cographic") return Matroid::Cographic(GraphFields(j, "$"));
  Fail("$.kind", "expected \"explicit\", \"graphic\" or \"cographic\"");
}

Json ToJson(const Matroid& matroid) {
  Json out;
  out["kind"] = ToString(matroid.kind());
  if (matroid.kind() != MatroidKind::kExplicit && matroid.graph()) {
    const Json graph = ToJson(*matroid.graph());
    for (auto& [k, v] : graph.items()) out[k] = v;
    return out;
  }
  out["ground"] = matroid.ground().labels();
  out["independents"] = SetsJson(matroid.independents());
  return out;
}

Source SourceFromJson(const Json& j) {
  if (!j.is_object()) Fail("$", "expected an object");
  if (j.contains("kind")) return MatroidFromJson(j);
  if (j.contains("elements")) return PosetFromJson(j);
  if (j.contains("vertices")) return GraphFromJson(j);
  Fail("$", "expected a poset, graph or matroid object");
}

ClosureSystem ClosureSystemFromJson(const Json& j) {
  const GroundSet ground = GroundFromJson(Field(j, "ground", "$"), "$.ground");
  std::vector<Subset> sets =
      SetsFromJson(ground, Field(j, "closed_sets", "$"), "$.closed_sets");
  return Validated("$.closed_sets", [&] {
    return ClosureSystem(
        SubsetFamily(ground, std::move(sets), MemberOrder::kGiven));
  });
}

Json ToJson(const ClosureSystem& system) {
  Json out;
  out["ground"] = system.ground().labels();
  out["closed_sets"] = SetsJson(system.closed_sets());
  return out;
}

Json ToJson(const PermutationGroup& group) {
  Json out;
  out["degree"] = group.degree();
  Json gens = Json::array();
  for (const Permutation& g : group.generators()) gens.push_back(g.ToCycleString());
  out["generators"] = std::move(gens);
  out["order"] = group.order().str();
  out["classification"] = ToString(group.Classify());
  return out;
}

Json ToJson(const ItaCertificate& certificate) {
  Json out;
  out["verdict"] = ToString(certificate.verdict);
  Json witness = Json::array();
  for (const ItaStep& s : certificate.witness) {
    Json step;
    step["element"] = s.label;
    step["branch"] = s.branch == ItaBranch::kContaining ? "containing" : "avoiding";
    step["family_size"] = s.family_size;
    step["essential_size"] = s.essential_size;
    witness.push_back(std::move(step));
  }
  out["witness"] = std::move(witness);
  if (certificate.verdict == ItaVerdict::kCertified) {
    out["base"] = {{"degree", certificate.base_degree},
                   {"essential_size", certificate.base_essential_size},
                   {"order", certificate.base_order.str()}};
  } else {
    Json trace = Json::array();
    for (const ItaTraceEntry& t : certificate.trace) {
      trace.push_back({{"depth", t.depth},
                       {"family_size", t.family_size},
                       {"essential_size", t.essential_size},
                       {"note", t.note}});
    }
    out["trace"] = std::move(trace);
  }
  return out;
}

Json CommutationToJson(const CommutationReport& report,
                       const SubsetFamily& family) {
  const GroundSet& g = family.ground();
  Json out;
  Json noncommuting = Json::array();
  for (std::size_t e = 0; e < report.actual.size(); ++e) {
    for (std::size_t f = e + 1; f < report.actual.size(); ++f) {
      if (!report.actual[e][f]) noncommuting.push_back({g.label(e), g.label(f)});
    }
  }
  out["noncommuting"] = std::move(noncommuting);
  out["predicted"] = report.predicted.has_value();
  Json mismatches = Json::array();
  for (const auto& [e, f] : report.mismatches) {
    mismatches.push_back({g.label(e), g.label(f)});
  }
  out["mismatches"] = std::move(mismatches);
  return out;
}

Json ToJson(const StructureReport& report,
            const std::optional<ItaCertificate>& ita,
            const std::optional<Json>& commutation) {
  Json out;
  Json factors = Json::array();
  for (const FactorReport& f : report.factors) factors.push_back(FactorJson(f));
  out["factors"] = std::move(factors);
  out["trace"] = report.trace;
  out["factor_order_product"] = OptionalOrder(report.factor_order_product);
  out["whole_order"] = OptionalOrder(report.whole_order);
  out["whole_classification"] =
      report.whole_classification ? Json(ToString(*report.whole_classification))
                                  : Json(nullptr);
  out["consistent"] = report.consistent;
  if (ita) out["ita"] = ToJson(*ita);
  if (commutation) out["commutation"] = *commutation;
  return out;
}

Json CoverClosureToJson(const ClosureSystem& system, bool with_orbits) {
  const SubsetFamily& sets = system.closed_sets();
  const OrbitDecomposition orbits = CoverClosureOrbits(system);
  auto set_at = [&](std::uint32_t i) { return SetJson(sets.ground(), sets.member(i)); };
  Json out;
  Json table = Json::array();
  for (std::size_t i = 0; i < orbits.map.size(); ++i) {
    table.push_back({{"set", set_at(static_cast<std::uint32_t>(i))},
                     {"image", set_at(orbits.map[i])}});
  }
  out["xi"] = std::move(table);
  out["bijective"] = orbits.bijective;
  if (with_orbits) {
    Json list = Json::array();
    for (const Trajectory& t : orbits.orbits) {
      Json entry;
      Json tail = Json::array();
      for (std::uint32_t i : t.tail) tail.push_back(set_at(i));
      Json cycle = Json::array();
      for (std::uint32_t i : t.cycle) cycle.push_back(set_at(i));
      entry["tail"] = std::move(tail);
      entry["cycle"] = std::move(cycle);
      entry["joins"] = t.joins ? set_at(*t.joins) : Json(nullptr);
      list.push_back(std::move(entry));
    }
    out["orbits"] = std::move(list);
  }
  return out;
}

Json ToJson(const SuiteResult& result) {
  Json out;
  out["suite"] = ToString(result.suite);
  out["max_size"] = result.max_size;
  out["report_only"] = result.report_only;
  out["cases"] = result.cases;
  out["failures"] = result.failures;
  out["passed"] = result.passed();
  Json tallies = Json::array();
  for (const CategoryTally& t : result.tallies) {
    tallies.push_back(
        {{"category", t.category}, {"cases", t.cases}, {"failures", t.failures}});
  }
  out["tallies"] = std::move(tallies);
  Json ces = Json::array();
  for (const Counterexample& c : result.counterexamples) {
    ces.push_back(
        {{"category", c.category}, {"object", c.object}, {"detail", c.detail}});
  }
  out["counterexamples"] = std::move(ces);
  return out;
}

}  // namespace togglekit
