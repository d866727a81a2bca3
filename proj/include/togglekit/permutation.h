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

#ifndef TOGGLEKIT_PERMUTATION_H_
#define TOGGLEKIT_PERMUTATION_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace togglekit {

using BigInt = boost::multiprecision::cpp_int;

BigInt Factorial(std::size_t n);

enum class Parity { kEven, kOdd };

// A permutation of {0, ..., degree-1}. Printed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  // Identity of the given degree.
  explicit Permutation(std::size_t degree);
  // Throws DomainError unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  // Parses "(1,2)(5,6)" or "()" over the given degree.
  static Permutation FromCycleString(std::string_view text,
                                     std::size_t degree);
  static Permutation Transposition(std::size_t degree, std::size_t a,
                                   std::size_t b);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool IsIdentity() const;
  Permutation Inverse() const;
  // Smallest moved point, or degree() for the identity.
  std::size_t FirstMovedPoint() const;

  // Cycle lengths in decreasing order, fixed points included; sums to degree.
  std::vector<std::size_t> CycleType() const;
  std::size_t CycleCount() const;
  Parity parity() const;
  bool IsEven() const { return parity() == Parity::kEven; }
  BigInt Order() const;

  // Nontrivial cycles, smallest point first in each, cycles ordered by their
  // smallest point; 1-based. The identity prints as "()".
  std::string ToCycleString() const;

  bool operator==(const Permutation& other) const = default;

  // (a * b)(x) = a(b(x)): b is applied first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

 private:
  std::vector<std::uint32_t> images_;
};

// Equal cycle types, i.e. conjugate in the full symmetric group. Throws
// DomainError on degree mismatch.
bool SameCycleType(const Permutation& a, const Permutation& b);

}  // namespace togglekit

#endif  // TOGGLEKIT_PERMUTATION_H_
