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

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "distill/bit_matrix.hpp"
#include "distill/bit_vector.hpp"
#include "distill/subspace.hpp"

namespace distill {

/// Tolerance on Σ p_x when a distribution is accepted from outside.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Weights of a single Bell pair, indexed by (phase << 1) | parity:
/// Φ⁺ = 00, Ψ⁺ = 01, Φ⁻ = 10, Ψ⁻ = 11.
struct PairDistribution {
  std::array<double, 4> weights{1.0, 0.0, 0.0, 0.0};

  double fidelity() const { return weights[0]; }
  /// Throws unless the weights are nonnegative and sum to one.
  void validate() const;

  friend bool operator==(const PairDistribution&, const PairDistribution&) = default;
};

/// Werner pair: weight F on Φ⁺ and (1−F)/3 on each other Bell state.
PairDistribution werner(double fidelity);

/// Mixture Σ p_x |B_x⟩⟨B_x| over n Bell pairs, stored densely with the
/// weight of label x at index x.word().
class BellDiagonalState {
 public:
  /// Takes ownership of 4^n weights; they must be nonnegative and sum to one
  /// within kNormalizationTolerance. The stored copy is renormalized exactly.
  BellDiagonalState(std::size_t n, std::vector<double> probs);

  /// Builds a state from unnormalized nonnegative weights (positive total).
  static BellDiagonalState normalized(std::size_t n, std::vector<double> weights);
  static BellDiagonalState from_pairs(std::span<const PairDistribution> pairs);
  static BellDiagonalState basis_state(const BitVector& label);

  std::size_t pairs() const { return n_; }
  std::size_t label_bits() const { return 2 * n_; }
  std::span<const double> probs() const { return probs_; }
  double probability(const BitVector& label) const;
  double fidelity() const { return probs_[0]; }

  /// Fidelity of pair i alone (marginal weight of Φ⁺ on that pair).
  double pair_fidelity(std::size_t pair) const;
  /// Marginal distribution of pair i.
  PairDistribution pair_marginal(std::size_t pair) const;

  /// p'_x = p_{x+a}: the state after σ_a on one side.
  BellDiagonalState pauli_shift(const BitVector& a) const;
  /// p'_{Ax+b} = p_x. Throws unless A is symplectic.
  BellDiagonalState permute(const BitMatrix& a, const BitVector& b) const;

  friend bool operator==(const BellDiagonalState&, const BellDiagonalState&) = default;

 private:
  struct Relabeled {};
  // Weights already normalized up to a relabeling; kept bit for bit.
  BellDiagonalState(Relabeled, std::size_t n, std::vector<double> probs) : n_(n), probs_(std::move(probs)) {}

  std::size_t n_;
  std::vector<double> probs_;
};

double coset_sum(const BellDiagonalState& state, const Coset& coset);

}  // namespace distill
