// Copyright 2026 The distill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace distill {

/// Fixed-length vector over GF(2), packed into a single machine word.
///
/// Position 0 is the leftmost character of the text form and the most
/// significant bit of `word()`, so `word()` is the integer value of the bit
/// string. Bell/Pauli labels of length 2n keep the phase (Z) half in
/// positions [0, n) and the parity (X) half in positions [n, 2n).
///
/// Ordering is lexicographic on the text form, which coincides with integer
/// order of `word()` for vectors of equal length.
class BitVector {
 public:
  static constexpr std::size_t kMaxBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector from_word(std::size_t size, std::uint64_t word);
  static BitVector from_string(std::string_view text);
  static BitVector unit(std::size_t size, std::size_t position);

  std::size_t size() const { return size_; }
  std::uint64_t word() const { return word_; }
  bool empty() const { return size_ == 0; }

  bool operator[](std::size_t position) const {
    return (word_ >> shift(position)) & 1U;
  }
  bool test(std::size_t position) const;
  void set(std::size_t position, bool value = true);
  void flip(std::size_t position);

  bool is_zero() const { return word_ == 0; }
  int weight() const { return std::popcount(word_); }

  /// Standard GF(2) dot product (parity of the bitwise AND).
  bool dot(const BitVector& other) const;

  /// Sub-vector of `length` positions starting at `first`.
  BitVector slice(std::size_t first, std::size_t length) const;
  BitVector concat(const BitVector& tail) const;

  /// Exchanges the two halves of an even-length vector; `a.swap_halves()`
  /// dotted with `b` is the symplectic form aᵀPb.
  BitVector swap_halves() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs) {
    if (auto c = lhs.size_ <=> rhs.size_; c != 0) return c;
    return lhs.word_ <=> rhs.word_;
  }

 private:
  std::size_t shift(std::size_t position) const { return size_ - 1 - position; }
  void require_same_size(const BitVector& other, const char* op) const;

  std::uint64_t word_ = 0;
  std::size_t size_ = 0;
};

/// Mask with the low `bits` bits set.
constexpr std::uint64_t low_mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace distill
