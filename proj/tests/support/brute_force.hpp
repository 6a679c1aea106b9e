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
#include <cstdint>
#include <map>
#include <vector>

#include "distill/bell_state.hpp"
#include "distill/bit_matrix.hpp"
#include "distill/bit_vector.hpp"

// Reference computations that avoid the library's elimination, coset and
// Gray-code machinery: plain bit lists, explicit loops, full enumeration.
namespace distill::testing {

using Bits = std::vector<int>;

Bits bits_of(const BitVector& v);
BitVector vec_of(const Bits& bits);
std::uint64_t index_of(const Bits& bits);
Bits bits_from_index(std::uint64_t index, std::size_t size);

/// Σ_i a_i b_{n+i} + a_{n+i} b_i mod 2.
int naive_sympl(const Bits& a, const Bits& b);

/// A·x + b with A read entry by entry.
Bits naive_apply(const BitMatrix& a, const Bits& x, const Bits& b);

/// AᵀPA == P, entry by entry.
bool naive_is_symplectic(const BitMatrix& a);

/// Every GF(2) combination of `gens`, duplicates removed, sorted by index.
std::vector<Bits> naive_span(const std::vector<Bits>& gens, std::size_t size);

struct NaiveBranch {
  double probability = 0.0;
  /// Normalized weights of the kept pairs, indexed by (phase | parity) bits.
  std::vector<double> output;
};

/// Relabels every label through x -> Ax + b, reads t from the parity bits of
/// the last n−m pairs and marginalizes onto the first m pairs.
std::map<std::uint64_t, NaiveBranch> naive_parity_branches(const BellDiagonalState& state,
                                                           const BitMatrix& a, const BitVector& b,
                                                           std::size_t m);

/// Pr(s) from the syndrome of every label, indexed by s.
std::vector<double> naive_syndrome_distribution(const BellDiagonalState& state,
                                                const std::vector<BitVector>& gens);

/// max over labels e with syndrome s of Σ_{c ∈ span(gens)} p[e + c].
double naive_best_coset_weight(const BellDiagonalState& state, const std::vector<BitVector>& gens,
                               std::uint64_t s);

/// Largest weight reachable at label 0 by any Pauli shift: the maximum entry.
double naive_best_shift(const std::vector<double>& dist);

/// Weights after σ_a: entry x moves to x + a.
std::vector<double> naive_shift(const std::vector<double>& dist, std::uint64_t a);

}  // namespace distill::testing
