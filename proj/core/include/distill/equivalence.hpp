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
#include <span>
#include <vector>

#include "distill/bell_state.hpp"
#include "distill/bit_matrix.hpp"
#include "distill/code_protocol.hpp"
#include "distill/perm_protocol.hpp"

namespace distill {

/// Largest allowed disagreement between the two engines.
inline constexpr double kEquivalenceTolerance = 1e-12;

struct StabilizerPermutation {
  PermProtocol protocol;
  /// Symplectic B with B e_{m+i} = g_i; protocol.a = B⁻¹.
  BitMatrix completion;
};

/// Completes the generators to B and returns the permutation A = PBᵀP, b = 0.
/// The last n−m rows of A·P are the generators, so subspace_S(A) = C.
StabilizerPermutation permutation_from_stabilizer(const StabilizerProtocol& proto,
                                                  std::span<const std::size_t> candidate_order = {});

/// Generators read from rows n+m..2n−1 of A·P.
StabilizerProtocol stabilizer_from_permutation(const PermProtocol& proto);

struct BranchComparison {
  BitVector label;  // t for the permutation engine, s for the code engine
  bool in_perm = false;
  bool in_code = false;
  double perm_probability = 0.0;
  double code_probability = 0.0;
  double perm_fidelity = 0.0;
  double code_fidelity = 0.0;
  double output_discrepancy = 0.0;
  /// C + Bā equals C + u, or the two cosets carry the same weight (tie).
  bool coset_match = false;
  /// Bȳ ∈ C⊥ + B0̄ for every y, and (B0̄)ᵀPg_i = s_i.
  bool completion_consistent = false;
};

struct EquivalenceReport {
  bool subspaces_match = false;
  bool branches_match = false;
  bool coset_match = false;
  bool completion_consistent = false;
  double max_discrepancy = 0.0;
  std::vector<BranchComparison> branches;

  bool holds(double tolerance = kEquivalenceTolerance) const {
    return subspaces_match && branches_match && coset_match && completion_consistent &&
           max_discrepancy <= tolerance;
  }
};

/// Runs both engines on one instance and compares branch t with syndrome
/// s = t entry by entry. Mismatches are reported, never thrown.
EquivalenceReport verify_equivalence(const BellDiagonalState& state, const StabilizerProtocol& proto,
                                     std::optional<double> threshold = {},
                                     std::span<const std::size_t> candidate_order = {});

}  // namespace distill
