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


#include "togglekit/dot.h"

#include <cstdint>
#include <sstream>
#include <vector>

#include "togglekit/toggle_poset.h"

namespace togglekit {
namespace {

// DOT string literal with quotes and backslashes escaped.
std::string Quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void MemberNodes(std::ostringstream& out, const SubsetFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    out << "  m" << i << " [label=" << Quoted(family.ground().Format(family.member(i)))
        << "];\n";
  }
}

}  // namespace

std::string TogglePosetDot(const SubsetFamily& family) {
  const TogglePoset poset(family);
  std::ostringstream out;
  out << "digraph toggle_poset {\n  rankdir=BT;\n  node [shape=box];\n";
  MemberNodes(out, family);
  for (const CoverEdge& e : poset.edges()) {
    out << "  m" << e.lower << " -> m" << e.upper
        << " [label=" << Quoted(family.ground().label(e.element)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string PosetDot(const Poset& poset) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    out << "  p" << i << " [label=" << Quoted(poset.ground().label(i)) << "];\n";
  }
  for (const auto& [a, b] : poset.covers()) {
    out << "  p" << a << " -> p" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string CoverClosureDot(const ClosureSystem& system) {
  const std::vector<std::uint32_t> xi = system.CoverClosureTable();
  std::ostringstream out;
  out << "digraph cover_closure {\n  node [shape=box];\n";
  MemberNodes(out, system.closed_sets());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    out << "  m" << i << " -> m" << xi[i] << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace togglekit
