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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "distill/bell_state.hpp"
#include "distill/bit_vector.hpp"

/// Brute-force state-vector and density-matrix simulation for a few pairs.
///
/// Qubit order is Alice's qubits 1..n followed by Bob's qubits 1..n; qubit 0
/// is the most significant bit of a computational basis index. Bell pair i
/// couples Alice's qubit i with Bob's qubit i.
namespace distill::oracle {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Density-matrix mode is capped at this many pairs (256×256 matrices).
inline constexpr std::size_t kMaxOraclePairs = 4;

/// Branches lighter than this are treated as impossible (rounding residue).
inline constexpr double kNegligibleProbability = 1e-14;

/// ⊗_i σ_{(a_i, a_{k+i})} on k qubits, with σ_00 = I, σ_01 = X, σ_10 = Z, σ_11 = Y.
Matrix pauli_matrix(const BitVector& a);

/// |B_x⟩ = (σ_x ⊗ I)|Φ⁺⟩^{⊗n} on 2n qubits.
Vector bell_vector(const BitVector& x);

/// Σ_x p_x |B_x⟩⟨B_x|.
Matrix density_matrix(const BellDiagonalState& state);

struct ParityBranch {
  BitVector t;
  double probability = 0.0;
  /// ⟨B_y|ρ_kept|B_y⟩ of the normalized post-measurement state, indexed by y.
  std::vector<double> distribution;
  /// Largest |⟨B_y|ρ_kept|B_y'⟩| with y ≠ y'.
  double max_off_diagonal = 0.0;
};

/// Measures both qubits of the last n−m pairs in the computational basis,
/// groups outcomes by the parity pattern t, and re-expands the first m pairs
/// in their Bell basis. Branches below kNegligibleProbability are omitted.
std::vector<ParityBranch> simulate_parity_measurement(const BellDiagonalState& state, std::size_t kept);

struct SyndromeJoint {
  std::size_t generators = 0;
  /// Pr(a, b) at index (a.word() << generators) | b.word().
  std::vector<double> joint;

  double probability(const BitVector& a, const BitVector& b) const;
  /// Distribution of s = a + b, indexed by s.word().
  std::vector<double> difference_distribution() const;
  /// Marginal distribution of Alice's outcomes a.
  std::vector<double> alice_marginal() const;
};

/// Alice measures σ*_{g_i} on her half, Bob measures σ_{g_i} on his; outcome
/// (−1)^{a_i}, (−1)^{b_i}. Returns the exact joint outcome distribution.
SyndromeJoint simulate_syndrome_measurement(const BellDiagonalState& state,
                                            std::span<const BitVector> gens);

/// (σ*_g on Alice) ⊗ (σ_g on Bob) for a label g on n pairs.
Matrix bilateral_observable(const BitVector& g);

}  // namespace distill::oracle
