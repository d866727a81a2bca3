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

#ifndef TOGGLEKIT_SUBSET_H_
#define TOGGLEKIT_SUBSET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace togglekit {

// A subset of {0, ..., width-1} stored as a bit-vector. Widths up to 64 use a
// single inline word; wider sets spill the remaining words to the heap.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t width);

  static Subset Full(std::size_t width);
  static Subset FromIndices(std::size_t width,
                            std::span<const std::size_t> indices);
  static Subset FromIndices(std::size_t width,
                            std::initializer_list<std::size_t> indices);
  // Low `width` bits of `bits`; requires width <= 64.
  static Subset FromWord(std::size_t width, std::uint64_t bits);

  std::size_t width() const { return width_; }
  std::size_t word_count() const { return 1 + tail_.size(); }
  std::uint64_t word(std::size_t k) const {
    return k == 0 ? head_ : tail_[k - 1];
  }

  bool test(std::size_t i) const {
    return (word(i >> 6) >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { mutable_word(i >> 6) |= bit(i); }
  void reset(std::size_t i) { mutable_word(i >> 6) &= ~bit(i); }
  void flip(std::size_t i) { mutable_word(i >> 6) ^= bit(i); }
  Subset Toggled(std::size_t i) const {
    Subset s = *this;
    s.flip(i);
    return s;
  }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  bool IsSubsetOf(const Subset& other) const;
  bool Intersects(const Subset& other) const;

  // Elements in increasing order.
  std::vector<std::size_t> Elements() const;
  // Smallest element, or width() when empty.
  std::size_t First() const;

  template <typename F>
  void ForEach(F&& f) const {
    for (std::size_t k = 0; k < word_count(); ++k) {
      std::uint64_t w = word(k);
      while (w != 0) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator^=(const Subset& other);
  // Set difference.
  Subset& operator-=(const Subset& other);
  Subset Complement() const;

  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator^(Subset a, const Subset& b) { return a ^= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  bool operator==(const Subset& other) const = default;

  // Numeric order of the masks (most significant word first).
  static bool ValueLess(const Subset& a, const Subset& b);
  // Cardinality first, then numeric mask value.
  static bool CanonicalLess(const Subset& a, const Subset& b);

  std::size_t Hash() const;

 private:
  static std::uint64_t bit(std::size_t i) {
    return std::uint64_t{1} << (i & 63);
  }
  std::uint64_t& mutable_word(std::size_t k) {
    return k == 0 ? head_ : tail_[k - 1];
  }
  void RequireSameWidth(const Subset& other) const;

  std::uint32_t width_ = 0;
  std::uint64_t head_ = 0;
  std::vector<std::uint64_t> tail_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.Hash(); }
};

}  // namespace togglekit

#endif  // TOGGLEKIT_SUBSET_H_
