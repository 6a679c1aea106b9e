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

#include "distill/code_protocol.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "distill/perm_protocol.hpp"
#include "distill/symplectic.hpp"

namespace distill {
namespace {

// v(s): the smallest label with the requested commutation pattern.
BitVector syndrome_representative(const StabilizerProtocol& proto, const BitVector& s) {
  if (proto.generators.empty()) return BitVector(2 * proto.n);
  return solve_commutation(proto.generators, s);
}

struct CosetWeight {
  BitVector representative;  // canonical
  double weight = 0.0;
};

// All cosets of C inside C⊥ + v, with their probability mass.
std::vector<CosetWeight> cosets_in_branch(const BellDiagonalState& state, const Subspace& code,
                                          const std::vector<BitVector>& logical_basis,
                                          const BitVector& v) {
  std::vector<CosetWeight> out;
  const std::uint64_t count = std::uint64_t{1} << logical_basis.size();
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    BitVector rep = v;
    for (std::size_t j = 0; j < logical_basis.size(); ++j) {
      if ((c >> j) & 1U) rep ^= logical_basis[j];
    }
    Coset coset(code, rep);
    out.push_back({coset.representative(), coset_sum(state, coset)});
  }
  return out;
}

// Heaviest coset; near-ties go to the smallest representative.
const CosetWeight& heaviest(const std::vector<CosetWeight>& cosets, double branch) {
  double best = 0.0;
  for (const auto& c : cosets) best = std::max(best, c.weight / branch);
  const CosetWeight* pick = nullptr;
  for (const auto& c : cosets) {
    if (c.weight / branch < best - kTieTolerance) continue;
    if (pick == nullptr || c.representative < pick->representative) pick = &c;
  }
  return *pick;
}

void check_state(const BellDiagonalState& state, const StabilizerProtocol& proto) {
  proto.validate();
  if (state.pairs() != proto.n) {
    throw std::invalid_argument("stabilizer protocol expects " + std::to_string(proto.n) +
                                " pairs, state has " + std::to_string(state.pairs()));
  }
}

BitVector label_from_inverse(const BitMatrix& inverse, const BitVector& x, std::size_t n, std::size_t m) {
  const BitVector z = inverse * x;
  return z.slice(0, m).concat(z.slice(n, m));
}

}  // namespace

void StabilizerProtocol::validate() const {
  if (n == 0 || m > n) throw std::invalid_argument("StabilizerProtocol: need n >= 1 and 0 <= m <= n");
  if (n > kMaxPairs) throw std::invalid_argument("StabilizerProtocol: too many pairs");
  if (generators.size() != n - m) {
    throw std::invalid_argument("StabilizerProtocol: expected " + std::to_string(n - m) +
                                " generators, got " + std::to_string(generators.size()));
  }
  for (const auto& g : generators) {
    if (g.size() != 2 * n) {
      throw std::invalid_argument("StabilizerProtocol: generator " + g.to_string() +
                                  " does not have length 2n = " + std::to_string(2 * n));
    }
  }
  if (gf2::rank(generators) != generators.size()) {
    throw std::invalid_argument("StabilizerProtocol: generators are linearly dependent");
  }
  if (!is_isotropic(generators)) {
    throw std::invalid_argument("StabilizerProtocol: generators do not pairwise commute");
  }
}

Subspace StabilizerProtocol::code_subspace() const { return Subspace::span(2 * n, generators); }

BitVector syndrome_of_error(std::span<const BitVector> gens, const BitVector& e) {
  BitVector s(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) s.set(i, sympl_inner(e, gens[i]));
  return s;
}

std::vector<double> syndrome_distribution(const BellDiagonalState& state, const StabilizerProtocol& proto) {
  check_state(state, proto);
  const Subspace c_perp = orthogonal_complement(proto.code_subspace());
  const std::size_t k = proto.generators.size();
  std::vector<double> out(std::size_t{1} << k);
  for (std::uint64_t sw = 0; sw < out.size(); ++sw) {
    const auto v = syndrome_representative(proto, BitVector::from_word(k, sw));
    out[sw] = coset_sum(state, Coset(c_perp, v));
  }
  return out;
}

BitVector optimal_recovery(const BellDiagonalState& state, const StabilizerProtocol& proto,
                           const BitVector& s) {
  check_state(state, proto);
  if (s.size() != proto.generators.size()) {
    throw std::invalid_argument("optimal_recovery: syndrome length must be n - m");
  }
  const Subspace code = proto.code_subspace();
  const Subspace c_perp = orthogonal_complement(code);
  const BitVector v = syndrome_representative(proto, s);
  const double branch = coset_sum(state, Coset(c_perp, v));
  if (!(branch > 0.0)) {
    throw std::domain_error("optimal_recovery: syndrome " + s.to_string() + " has probability zero");
  }
  const auto cosets = cosets_in_branch(state, code, quotient_basis(c_perp, code), v);
  return heaviest(cosets, branch).representative;
}

BitVector logical_label(const BitMatrix& completion, const BitVector& x, std::size_t n, std::size_t m) {
  return label_from_inverse(symplectic_inverse(completion), x, n, m);
}

std::vector<SyndromeBranch> run_code_protocol(const BellDiagonalState& state,
                                              const StabilizerProtocol& proto,
                                              std::optional<double> threshold,
                                              const BitMatrix* completion) {
  check_state(state, proto);
  const std::size_t n = proto.n;
  const std::size_t m = proto.m;
  const std::size_t k = n - m;
  const BitMatrix basis = completion ? *completion : complete_to_symplectic(proto.generators, n, m);
  if (basis.rows() != 2 * n || basis.cols() != 2 * n || !is_symplectic(basis)) {
    throw std::invalid_argument("run_code_protocol: completion is not a 2n x 2n symplectic matrix");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (basis.column(m + i) != proto.generators[i]) {
      throw std::invalid_argument("run_code_protocol: completion column " + std::to_string(m + i) +
                                  " is not generator " + std::to_string(i));
    }
  }
  const BitMatrix inverse = symplectic_inverse(basis);
  const double accept_at = threshold.value_or(default_threshold(state));

  const Subspace code = proto.code_subspace();
  const Subspace c_perp = orthogonal_complement(code);
  const auto logical_basis = quotient_basis(c_perp, code);
  const double prefactor = static_cast<double>(std::uint64_t{1} << k);
  const std::size_t labels = std::size_t{1} << (2 * m);

  std::vector<SyndromeBranch> branches;
  for (std::uint64_t sw = 0; sw < (std::uint64_t{1} << k); ++sw) {
    const auto s = BitVector::from_word(k, sw);
    const BitVector v = syndrome_representative(proto, s);
    const double branch = coset_sum(state, Coset(c_perp, v));
    if (!(branch > 0.0)) continue;

    const auto cosets = cosets_in_branch(state, code, logical_basis, v);
    std::vector<double> logical(labels, 0.0);
    std::vector<bool> seen(labels, false);
    for (const auto& c : cosets) {
      const auto y = label_from_inverse(inverse, c.representative, n, m);
      if (seen[y.word()]) throw std::logic_error("run_code_protocol: logical labels are not a bijection");
      seen[y.word()] = true;
      logical[y.word()] = c.weight / branch;
    }
    const CosetWeight& best = heaviest(cosets, branch);
    BitVector correction = label_from_inverse(inverse, best.representative, n, m);
    BellDiagonalState output(m, std::move(logical));
    BellDiagonalState corrected = output.pauli_shift(correction);
    const double fidelity = best.weight / branch;
    branches.push_back(SyndromeBranch{s, branch, v, best.representative, std::move(output), correction,
                                      std::move(corrected), fidelity, prefactor * fidelity,
                                      fidelity >= accept_at});
  }
  return branches;
}

}  // namespace distill
