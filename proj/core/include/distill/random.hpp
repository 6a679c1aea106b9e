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
#include <random>
#include <vector>

#include "distill/bell_state.hpp"
#include "distill/bit_matrix.hpp"
#include "distill/bit_vector.hpp"

namespace distill {

using Rng = std::mt19937_64;

/// Independent generator for instance `index` of a run seeded with `seed`.
/// Streams for different indices do not depend on evaluation order.
Rng stream(std::uint64_t seed, std::uint64_t index);

BitVector random_vector(std::size_t size, Rng& rng);

/// Product of random symplectic transvections x -> x + <x, v> v.
BitMatrix random_symplectic(std::size_t n, Rng& rng);

/// `count` independent, pairwise commuting labels on n pairs (count <= n).
std::vector<BitVector> random_isotropic(std::size_t n, std::size_t count, Rng& rng);

/// Random normalized distribution over the 4^n labels (exponential weights).
BellDiagonalState random_state(std::size_t n, Rng& rng);

PairDistribution random_pair(Rng& rng);

/// Uniform random permutation of 0..size−1.
std::vector<std::size_t> random_order(std::size_t size, Rng& rng);

}  // namespace distill
