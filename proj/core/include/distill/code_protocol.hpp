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
#include "distill/bit_vector.hpp"
#include "distill/subspace.hpp"

namespace distill {

/// Code-based distillation from a stabilizer with n−m independent,
/// pairwise commuting generators σ_{g_i} on n pairs.
struct StabilizerProtocol {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<BitVector> generators;

  void validate() const;
  /// C = span(generators).
  Subspace code_subspace() const;
};

struct SyndromeBranch {
  BitVector s;
  double probability = 0.0;
  /// Smallest v with vᵀPg_i = s_i.
  BitVector v;
  /// Canonical representative of the heaviest coset of C inside C⊥ + v.
  BitVector u;
  /// Logical distribution of the kept pairs before recovery; coset C + Bȳ
  /// carries label y for the completion B in use.
  BellDiagonalState output;
  /// Logical label of the recovery coset C + u.
  BitVector correction;
  BellDiagonalState corrected;
  double fidelity = 0.0;
  /// 2^{n−m} · Σ_{C+u} p / Σ_{C⊥+v} p, the unrenormalized ratio.
  double scaled_fidelity = 0.0;
  bool accepted = false;
};

/// s_i = sympl_inner(e, g_i).
BitVector syndrome_of_error(std::span<const BitVector> gens, const BitVector& e);

/// Pr(s) = Σ_{x ∈ C⊥ + v(s)} p_x, indexed by s.word().
std::vector<double> syndrome_distribution(const BellDiagonalState& state, const StabilizerProtocol& proto);

/// Recovery u maximizing Σ_{C+u} p among the cosets of C in C⊥ + v(s); ties
/// go to the smallest canonical representative. Throws std::domain_error
/// for a zero-probability syndrome.
BitVector optimal_recovery(const BellDiagonalState& state, const StabilizerProtocol& proto,
                           const BitVector& s);

/// Logical label y of the coset containing `x`, read off B⁻¹x.
BitVector logical_label(const BitMatrix& completion, const BitVector& x, std::size_t n, std::size_t m);

/// Runs every syndrome with nonzero probability, ordered by s. `completion`
/// fixes the logical basis; without one the default symplectic completion
/// of the generators is used.
std::vector<SyndromeBranch> run_code_protocol(const BellDiagonalState& state,
                                              const StabilizerProtocol& proto,
                                              std::optional<double> threshold = {},
                                              const BitMatrix* completion = nullptr);

}  // namespace distill
