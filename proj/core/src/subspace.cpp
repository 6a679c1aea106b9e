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

#include "distill/subspace.hpp"

#include <string>

#include "distill/bit_matrix.hpp"

namespace distill {

Subspace Subspace::span(std::size_t ambient_dim, std::span<const BitVector> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) {
      throw std::invalid_argument("Subspace: vector length " + std::to_string(v.size()) +
                                  " does not match ambient dimension " +
                                  std::to_string(ambient_dim));
    }
  }
  Subspace out(ambient_dim);
  out.basis_ = gf2::reduced_echelon(vectors);
  return out;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<BitVector> units;
  units.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(BitVector::unit(ambient_dim, i));
  return span(ambient_dim, units);
}

bool Subspace::contains(const BitVector& v) const { return reduce(v).is_zero(); }

BitVector Subspace::reduce(const BitVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector length mismatch");
  return gf2::reduce(v, basis_);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

Coset::Coset(Subspace subspace, const BitVector& offset)
    : subspace_(std::move(subspace)), offset_(subspace_.reduce(offset)) {}

bool Coset::contains(const BitVector& v) const { return subspace_.reduce(v) == offset_; }

std::vector<BitVector> quotient_basis(const Subspace& outer, const Subspace& inner) {
  if (!outer.contains(inner)) {
    throw std::invalid_argument("quotient_basis: inner subspace is not contained in outer");
  }
  std::vector<BitVector> spanning(inner.basis().begin(), inner.basis().end());
  std::vector<BitVector> out;
  for (const auto& b : outer.basis()) {
    spanning.push_back(b);
    if (gf2::rank(spanning) == inner.dimension() + out.size() + 1) {
      out.push_back(b);
    } else {
      spanning.pop_back();
    }
  }
  return out;
}

double coset_sum(std::span<const double> probs, const Coset& coset) {
  const std::size_t bits = coset.representative().size();
  if (bits >= 64 || probs.size() != (std::size_t{1} << bits)) {
    throw std::invalid_argument("coset_sum: distribution size does not match coset dimension");
  }
  double total = 0.0;
  coset.for_each([&](const BitVector& x) { total += probs[x.word()]; });
  return total;
}

}  // namespace distill
