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

#include "togglekit/subset.h"

#include <string>

#include "togglekit/errors.h"

namespace togglekit {
namespace {

std::size_t WordsFor(std::size_t width) {
  return width == 0 ? 1 : (width + 63) / 64;
}

std::uint64_t TopMask(std::size_t width) {
  const std::size_t r = width & 63;
  return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

}  // namespace

Subset::Subset(std::size_t width)
    : width_(static_cast<std::uint32_t>(width)),
      tail_(WordsFor(width) - 1, 0) {}

Subset Subset::Full(std::size_t width) {
  Subset s(width);
  if (width == 0) return s;
  for (std::size_t k = 0; k < s.word_count(); ++k) {
    s.mutable_word(k) = ~std::uint64_t{0};
  }
  s.mutable_word(s.word_count() - 1) &= TopMask(width);
  return s;
}

Subset Subset::FromIndices(std::size_t width,
                           std::span<const std::size_t> indices) {
  Subset s(width);
  for (std::size_t i : indices) {
    if (i >= width) {
      throw DomainError("element index " + std::to_string(i) +
                        " out of range for width " + std::to_string(width));
    }
    s.set(i);
  }
  return s;
}

Subset Subset::FromIndices(std::size_t width,
                           std::initializer_list<std::size_t> indices) {
  return FromIndices(width, std::span<const std::size_t>(indices.begin(),
                                                         indices.size()));
}

Subset Subset::FromWord(std::size_t width, std::uint64_t bits) {
  if (width > 64) throw DomainError("FromWord requires width <= 64");
  Subset s(width);
  s.head_ = width == 0 ? 0 : (bits & TopMask(width));
  return s;
}

std::size_t Subset::count() const {
  std::size_t c = static_cast<std::size_t>(std::popcount(head_));
  for (std::uint64_t w : tail_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Subset::none() const {
  if (head_ != 0) return false;
  for (std::uint64_t w : tail_) {
    if (w != 0) return false;
  }
  return true;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  RequireSameWidth(other);
  for (std::size_t k = 0; k < word_count(); ++k) {
    if ((word(k) & ~other.word(k)) != 0) return false;
  }
  return true;
}

bool Subset::Intersects(const Subset& other) const {
  RequireSameWidth(other);
  for (std::size_t k = 0; k < word_count(); ++k) {
    if ((word(k) & other.word(k)) != 0) return true;
  }
  return false;
}

std::vector<std::size_t> Subset::Elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  ForEach([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Subset::First() const {
  for (std::size_t k = 0; k < word_count(); ++k) {
    if (word(k) != 0) {
      return k * 64 + static_cast<std::size_t>(std::countr_zero(word(k)));
    }
  }
  return width_;
}

Subset& Subset::operator|=(const Subset& other) {
  RequireSameWidth(other);
  head_ |= other.head_;
  for (std::size_t k = 0; k < tail_.size(); ++k) tail_[k] |= other.tail_[k];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  RequireSameWidth(other);
  head_ &= other.head_;
  for (std::size_t k = 0; k < tail_.size(); ++k) tail_[k] &= other.tail_[k];
  return *this;
}

Subset& Subset::operator^=(const Subset& other) {
  RequireSameWidth(other);
  head_ ^= other.head_;
  for (std::size_t k = 0; k < tail_.size(); ++k) tail_[k] ^= other.tail_[k];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  RequireSameWidth(other);
  head_ &= ~other.head_;
  for (std::size_t k = 0; k < tail_.size(); ++k) tail_[k] &= ~other.tail_[k];
  return *this;
}

Subset Subset::Complement() const { return Full(width_) - *this; }

bool Subset::ValueLess(const Subset& a, const Subset& b) {
  a.RequireSameWidth(b);
  for (std::size_t k = a.word_count(); k-- > 0;) {
    if (a.word(k) != b.word(k)) return a.word(k) < b.word(k);
  }
  return false;
}

bool Subset::CanonicalLess(const Subset& a, const Subset& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  return ValueLess(a, b);
}

std::size_t Subset::Hash() const {
  // splitmix64 folded over the words.
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
  for (std::size_t k = 0; k < word_count(); ++k) {
    std::uint64_t z = h + word(k) + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

void Subset::RequireSameWidth(const Subset& other) const {
  if (width_ != other.width_) {
    throw DomainError("subset width mismatch: " + std::to_string(width_) +
                      " vs " + std::to_string(other.width_));
  }
}

}  // namespace togglekit
