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

#include "distill/bell_state.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "distill/symplectic.hpp"

namespace distill {
namespace {

std::size_t label_count(std::size_t n) {
  if (n > kMaxPairs) {
    throw std::invalid_argument("BellDiagonalState: " + std::to_string(n) +
                                " pairs exceeds the limit of " + std::to_string(kMaxPairs));
  }
  return std::size_t{1} << (2 * n);
}

void check_weights(std::span<const double> weights, const char* what) {
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument(std::string(what) + ": weights must be finite and nonnegative");
    }
  }
}

}  // namespace

void PairDistribution::validate() const {
  check_weights(weights, "PairDistribution");
  const double total = weights[0] + weights[1] + weights[2] + weights[3];
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("PairDistribution: weights sum to " + std::to_string(total));
  }
}

PairDistribution werner(double fidelity) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw std::invalid_argument("werner: fidelity must lie in [0, 1]");
  }
  const double other = (1.0 - fidelity) / 3.0;
  return PairDistribution{{fidelity, other, other, other}};
}

BellDiagonalState::BellDiagonalState(std::size_t n, std::vector<double> probs)
    : n_(n), probs_(std::move(probs)) {
  if (probs_.size() != label_count(n)) {
    throw std::invalid_argument("BellDiagonalState: expected " + std::to_string(label_count(n)) +
                                " weights for " + std::to_string(n) + " pairs, got " +
                                std::to_string(probs_.size()));
  }
  check_weights(probs_, "BellDiagonalState");
  const double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw std::invalid_argument("BellDiagonalState: weights sum to " + std::to_string(total) +
                                ", not 1");
  }
  for (double& p : probs_) p /= total;
}

BellDiagonalState BellDiagonalState::normalized(std::size_t n, std::vector<double> weights) {
  check_weights(weights, "BellDiagonalState::normalized");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw std::invalid_argument("BellDiagonalState::normalized: zero total weight");
  for (double& w : weights) w /= total;
  return BellDiagonalState(n, std::move(weights));
}

BellDiagonalState BellDiagonalState::from_pairs(std::span<const PairDistribution> pairs) {
  if (pairs.empty()) throw std::invalid_argument("from_pairs: no pair distributions given");
  for (const auto& p : pairs) p.validate();
  const std::size_t n = pairs.size();
  const std::size_t count = label_count(n);
  std::vector<double> probs(count);
  for (std::size_t x = 0; x < count; ++x) {
    const auto label = BitVector::from_word(2 * n, x);
    double w = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      w *= pairs[i].weights[(label[i] << 1) | label[n + i]];
    }
    probs[x] = w;
  }
  return BellDiagonalState(n, std::move(probs));
}

BellDiagonalState BellDiagonalState::basis_state(const BitVector& label) {
  if (label.size() % 2 != 0) throw std::invalid_argument("basis_state: odd label length");
  const std::size_t n = label.size() / 2;
  std::vector<double> probs(label_count(n), 0.0);
  probs[label.word()] = 1.0;
  return BellDiagonalState(n, std::move(probs));
}

double BellDiagonalState::probability(const BitVector& label) const {
  if (label.size() != label_bits()) throw std::invalid_argument("probability: label length mismatch");
  return probs_[label.word()];
}

PairDistribution BellDiagonalState::pair_marginal(std::size_t pair) const {
  if (pair >= n_) throw std::out_of_range("pair_marginal: pair index out of range");
  PairDistribution out{{0.0, 0.0, 0.0, 0.0}};
  const std::size_t phase_shift = 2 * n_ - 1 - pair;
  const std::size_t parity_shift = n_ - 1 - pair;
  for (std::size_t x = 0; x < probs_.size(); ++x) {
    out.weights[(((x >> phase_shift) & 1U) << 1) | ((x >> parity_shift) & 1U)] += probs_[x];
  }
  return out;
}

double BellDiagonalState::pair_fidelity(std::size_t pair) const { return pair_marginal(pair).weights[0]; }

BellDiagonalState BellDiagonalState::pauli_shift(const BitVector& a) const {
  if (a.size() != label_bits()) throw std::invalid_argument("pauli_shift: label length mismatch");
  std::vector<double> out(probs_.size());
  const std::uint64_t shift = a.word();
  for (std::size_t x = 0; x < probs_.size(); ++x) out[x] = probs_[x ^ shift];
  return BellDiagonalState(Relabeled{}, n_, std::move(out));
}

BellDiagonalState BellDiagonalState::permute(const BitMatrix& a, const BitVector& b) const {
  if (a.rows() != label_bits() || a.cols() != label_bits() || b.size() != label_bits()) {
    throw std::invalid_argument("permute: matrix or offset does not match 2n = " +
                                std::to_string(label_bits()));
  }
  if (!is_symplectic(a)) {
    throw std::invalid_argument(
        "permute: matrix violates AᵀPA = P and is not realizable by local unitaries");
  }
  const std::size_t bits = label_bits();
  // Word bit j of x is string position bits-1-j, which selects column bits-1-j of A.
  std::vector<std::uint64_t> column_words(bits);
  for (std::size_t j = 0; j < bits; ++j) column_words[j] = a.column(bits - 1 - j).word();

  std::vector<double> out(probs_.size());
  std::uint64_t x = 0;
  std::uint64_t image = b.word();
  out[image] = probs_[0];
  for (std::uint64_t i = 1; i < probs_.size(); ++i) {
    const auto j = static_cast<std::size_t>(std::countr_zero(i));
    x ^= std::uint64_t{1} << j;
    image ^= column_words[j];
    out[image] = probs_[x];
  }
  return BellDiagonalState(Relabeled{}, n_, std::move(out));
}

double coset_sum(const BellDiagonalState& state, const Coset& coset) {
  if (coset.representative().size() != state.label_bits()) {
    throw std::invalid_argument("coset_sum: coset dimension does not match the state");
  }
  return coset_sum(state.probs(), coset);
}

}  // namespace distill
