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

#include "togglekit/permutation.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "togglekit/errors.h"

namespace togglekit {

BigInt Factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw DomainError("image list is not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::FromCycleString(std::string_view text,
                                         std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& why) {
    throw ParseError("cycle notation at offset " + std::to_string(pos) +
                     ": " + why);
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    skip_space();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()" is the identity
      skip_space();
      continue;
    }
    while (true) {
      skip_space();
      std::size_t value = 0;
      const std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      if (pos == start) fail("expected a point");
      if (value == 0 || value > degree) fail("point out of range");
      if (used[value - 1]) fail("point repeated");
      used[value - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(value - 1));
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::Transposition(std::size_t degree, std::size_t a,
                                       std::size_t b) {
  Permutation p(degree);
  std::swap(p.images_.at(a), p.images_.at(b));
  return p;
}

bool Permutation::IsIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  Permutation inv(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return inv;
}

std::size_t Permutation::FirstMovedPoint() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return images_.size();
}

std::vector<std::size_t> Permutation::CycleType() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t Permutation::CycleCount() const { return CycleType().size(); }

Parity Permutation::parity() const {
  return (degree() - CycleCount()) % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

BigInt Permutation::Order() const {
  BigInt order = 1;
  for (std::size_t len : CycleType()) {
    BigInt l = len;
    order = order / boost::multiprecision::gcd(order, l) * l;
  }
  return order;
}

std::string Permutation::ToCycleString() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("composing permutations of different degrees");
  }
  Permutation c(a.degree());
  for (std::size_t i = 0; i < b.degree(); ++i) c.images_[i] = a.images_[b.images_[i]];
  return c;
}

bool SameCycleType(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("cycle-type comparison across different degrees");
  }
  return a.CycleType() == b.CycleType();
}

}  // namespace togglekit
