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

#include "togglekit/limits.h"

#include <charconv>
#include <cstdlib>
#include <string>

#include "togglekit/errors.h"

namespace togglekit {

Limits Limits::Parse(std::string_view spec) { return Parse(spec, Limits()); }

Limits Limits::Parse(std::string_view spec, Limits base) {
  Limits out = base;
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view()
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("limits: expected key=value, got '" +
                       std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    std::size_t parsed = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw ParseError("limits: bad value for '" + std::string(key) + "'");
    }
    if (key == "iso") {
      out.isomorphism_elements = parsed;
    } else if (key == "edges") {
      out.graph_edges = parsed;
    } else if (key == "poset") {
      out.poset_elements = parsed;
    } else if (key == "matroid") {
      out.matroid_elements = parsed;
    } else if (key == "degree") {
      out.classify_degree = parsed;
    } else if (key == "depth") {
      out.ita_depth = parsed;
    } else {
      throw ParseError("limits: unknown key '" + std::string(key) + "'");
    }
  }
  return out;
}

Limits Limits::FromEnvironment() {
  const char* env = std::getenv(kLimitsEnvVar);
  if (env == nullptr) return Limits();
  return Parse(env);
}

}  // namespace togglekit
