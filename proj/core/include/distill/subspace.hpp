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
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "distill/bit_vector.hpp"

namespace distill {

/// Linear subspace of GF(2)^ambient, held as a canonical (reduced echelon)
/// basis so equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace.
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const BitVector> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dimension() const { return basis_.size(); }
  std::span<const BitVector> basis() const { return basis_; }

  bool contains(const BitVector& v) const;
  /// Smallest element of v + this subspace.
  BitVector reduce(const BitVector& v) const;
  bool contains(const Subspace& other) const;

  /// Calls `fn(v)` for all 2^dim elements of `offset + *this`, in Gray-code
  /// order starting from `offset`.
  template <class Fn>
  void for_each(const BitVector& offset, Fn&& fn) const {
    BitVector v = offset;
    fn(std::as_const(v));
    const std::uint64_t count = std::uint64_t{1} << basis_.size();
    for (std::uint64_t i = 1; i < count; ++i) {
      v ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
      fn(std::as_const(v));
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each(BitVector(ambient_), std::forward<Fn>(fn));
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<BitVector> basis_;
};

/// Affine coset `offset + subspace`; the stored offset is the canonical
/// (smallest) representative.
class Coset {
 public:
  Coset(Subspace subspace, const BitVector& offset);

  const Subspace& subspace() const { return subspace_; }
  const BitVector& representative() const { return offset_; }
  std::uint64_t size() const { return std::uint64_t{1} << subspace_.dimension(); }
  bool contains(const BitVector& v) const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    subspace_.for_each(offset_, std::forward<Fn>(fn));
  }

  friend bool operator==(const Coset&, const Coset&) = default;

 private:
  Subspace subspace_;
  BitVector offset_;
};

/// Basis of a complement of `inner` inside `outer` (inner must be contained
/// in outer). The cosets of `inner` in `outer` are `inner + Σ c_j q_j`.
std::vector<BitVector> quotient_basis(const Subspace& outer, const Subspace& inner);

/// Exact sum of `probs[x.word()]` over the elements x of `coset`.
double coset_sum(std::span<const double> probs, const Coset& coset);

}  // namespace distill
