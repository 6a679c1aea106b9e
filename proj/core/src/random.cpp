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

#include "distill/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "distill/symplectic.hpp"

namespace distill {

Rng stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

BitVector random_vector(std::size_t size, Rng& rng) {
  return BitVector::from_word(size, rng() & low_mask(size));
}

BitMatrix random_symplectic(std::size_t n, Rng& rng) {
  const std::size_t dim = 2 * n;
  BitMatrix out = BitMatrix::identity(dim);
  for (std::size_t step = 0; step < 3 * dim + 2; ++step) {
    const BitVector v = random_vector(dim, rng);
    if (v.is_zero()) continue;
    // Row i of the transvection is e_i + v_i (Pv)ᵀ.
    BitMatrix t = BitMatrix::identity(dim);
    const BitVector pv = v.swap_halves();
    for (std::size_t i = 0; i < dim; ++i) {
      if (v[i]) t.set_row(i, t.row(i) ^ pv);
    }
    out = t * out;
  }
  return out;
}

std::vector<BitVector> random_isotropic(std::size_t n, std::size_t count, Rng& rng) {
  if (count > n) throw std::invalid_argument("random_isotropic: at most n commuting independent labels");
  const BitMatrix a = random_symplectic(n, rng);
  std::vector<BitVector> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(a.column(j));
  return out;
}

BellDiagonalState random_state(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> weight(1.0);
  std::vector<double> probs(std::size_t{1} << (2 * n));
  for (double& p : probs) p = weight(rng);
  return BellDiagonalState::normalized(n, std::move(probs));
}

PairDistribution random_pair(Rng& rng) {
  std::exponential_distribution<double> weight(1.0);
  PairDistribution out;
  double total = 0.0;
  for (double& w : out.weights) total += (w = weight(rng));
  for (double& w : out.weights) w /= total;
  return out;
}

std::vector<std::size_t> random_order(std::size_t size, Rng& rng) {
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace distill
