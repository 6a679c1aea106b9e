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

#include <cstddef>
#include <span>
#include <vector>

#include "distill/bit_matrix.hpp"
#include "distill/bit_vector.hpp"
#include "distill/subspace.hpp"

namespace distill {

/// Largest supported pair count; the dense label space has 4^n entries.
inline constexpr std::size_t kMaxPairs = 14;

/// aᵀPb for the form P = [[0, I], [I, 0]]. Zero iff σ_a and σ_b commute.
bool sympl_inner(const BitVector& a, const BitVector& b);

/// The 2n×2n matrix P = [[0, I], [I, 0]].
BitMatrix symplectic_form(std::size_t n);

/// True iff every pair of vectors has zero symplectic inner product.
bool is_isotropic(std::span<const BitVector> vectors);

/// True iff AᵀPA = P. Throws for non-square or odd-sized input.
bool is_symplectic(const BitMatrix& a);

/// PAᵀP, the inverse of a symplectic matrix.
BitMatrix symplectic_inverse(const BitMatrix& a);

/// {v : sympl_inner(v, s) = 0 for all s in S}.
Subspace orthogonal_complement(const Subspace& s);

/// Lexicographically smallest v with sympl_inner(v, gens[i]) = syndrome[i].
BitVector solve_commutation(std::span<const BitVector> gens, const BitVector& syndrome);

/// Completes n−m independent, pairwise commuting generators to a symplectic
/// matrix B whose columns m..n−1 are the generators. Column n+m+i is the
/// symplectic partner of generator i and is orthogonal to every other column.
///
/// Uses symplectic Gram–Schmidt. The remaining hyperbolic pairs are drawn
/// from unit vectors taken in `candidate_order` (a permutation of 0..2n−1;
/// empty means ascending), so different orders give different completions.
BitMatrix complete_to_symplectic(std::span<const BitVector> gens, std::size_t n, std::size_t m,
                                 std::span<const std::size_t> candidate_order = {});

}  // namespace distill
