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
#include <optional>
#include <vector>

#include "distill/bell_state.hpp"
#include "distill/bit_matrix.hpp"
#include "distill/bit_vector.hpp"
#include "distill/subspace.hpp"

namespace distill {

/// Probabilities closer than this to the maximum count as ties when picking
/// a correction; ties resolve to the lexicographically smallest candidate.
inline constexpr double kTieTolerance = 1e-12;

/// Permutation-based distillation: relabel x -> Ax + b with symplectic A,
/// measure the parity of the last n−m pairs, keep the first m. m = n is
/// the degenerate protocol that measures nothing.
struct PermProtocol {
  std::size_t n = 0;
  std::size_t m = 0;
  BitMatrix a;
  BitVector b;

  /// Throws unless 0 <= m <= n, A is 2n×2n symplectic and |b| = 2n.
  void validate() const;
  static PermProtocol linear(std::size_t n, std::size_t m, BitMatrix a);
};

/// One measurement branch t of a permutation protocol run.
struct ProtocolOutcome {
  BitVector t;
  double probability = 0.0;
  /// Conditional state of the kept pairs before correction.
  BellDiagonalState output;
  BitVector correction;
  /// `output` after σ_correction; its weight at 0 is `fidelity`.
  BellDiagonalState corrected;
  double fidelity = 0.0;
  /// 2^{n−m} · (coset sum at the correction) / (branch coset sum) without
  /// renormalization. Equals fidelity · 2^{n−m}.
  double scaled_fidelity = 0.0;
  bool accepted = false;
};

/// Bilateral CNOT on two pairs (pair 1 control, pair 2 target).
BitMatrix bilateral_cnot();

/// Span of rows n+m..2n−1 (0-based) of A·P; always isotropic.
Subspace subspace_S(const PermProtocol& proto);

/// ȳ = (y_phase, 0^{n−m}, y_parity, t) in GF(2)^{2n}.
BitVector embed_ybar(const BitVector& y, const BitVector& t, std::size_t n, std::size_t m);

/// Smallest label carrying (within kTieTolerance) the largest weight.
BitVector optimal_correction(const BellDiagonalState& conditional);

/// Runs every measurement branch with nonzero probability, ordered by t.
/// Branches are accepted when the corrected fidelity reaches `threshold`;
/// without one, the smallest single-pair fidelity of the input is used.
std::vector<ProtocolOutcome> run_permutation_protocol(const BellDiagonalState& state,
                                                      const PermProtocol& proto,
                                                      std::optional<double> threshold = {});

/// Unrenormalized 2^{n−m} · Σ_{S + A⁻¹ā} p / Σ_{S⊥ + A⁻¹0̄} p for branch t, with the
/// correction a chosen as in the run. Throws std::domain_error when the
/// branch has probability zero.
double scaled_fidelity(const BellDiagonalState& state, const PermProtocol& proto, const BitVector& t);

/// Default acceptance threshold: the smallest single-pair fidelity of the input.
double default_threshold(const BellDiagonalState& state);

struct RecurrenceRound {
  std::size_t round = 0;
  double input_fidelity = 0.0;
  double accept_probability = 0.0;
  double fidelity = 0.0;
  double yield = 0.0;
  PairDistribution output;
};

/// Iterated n -> 1 distillation: each round feeds n copies of the current
/// pair through the protocol and keeps the accepted branches' corrected
/// output. Requires m = 1. A round in which no branch is accepted ends the
/// sweep; it is recorded with accept probability and yield 0 and the
/// fidelity and output of its best branch.
std::vector<RecurrenceRound> recurrence_sweep(const PairDistribution& pair, const PermProtocol& proto,
                                              std::size_t rounds, std::optional<double> threshold = {});

}  // namespace distill
