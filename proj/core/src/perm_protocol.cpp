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

#include "distill/perm_protocol.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "distill/symplectic.hpp"

namespace distill {
namespace {

struct BranchSums {
  double branch = 0.0;              // Σ over S⊥ + A⁻¹0̄
  std::vector<double> per_label;    // Σ over S + A⁻¹ȳ, indexed by y
};

// Coset sums for one measurement outcome t. `shifted` already has the
// affine offset absorbed, so only the linear part of the relabeling enters.
BranchSums branch_sums(const BellDiagonalState& shifted, const PermProtocol& proto,
                       const BitMatrix& inverse, const Subspace& s, const Subspace& s_perp,
                       const BitVector& t) {
  BranchSums out;
  const BitVector zero_y(2 * proto.m);
  out.branch = coset_sum(shifted, Coset(s_perp, inverse * embed_ybar(zero_y, t, proto.n, proto.m)));
  const std::size_t labels = std::size_t{1} << (2 * proto.m);
  out.per_label.resize(labels);
  for (std::size_t y = 0; y < labels; ++y) {
    const auto ybar = embed_ybar(BitVector::from_word(2 * proto.m, y), t, proto.n, proto.m);
    out.per_label[y] = coset_sum(shifted, Coset(s, inverse * ybar));
  }
  return out;
}

BellDiagonalState pre_shift(const BellDiagonalState& state, const PermProtocol& proto,
                            const BitMatrix& inverse) {
  if (proto.b.is_zero()) return state;
  return state.pauli_shift(inverse * proto.b);
}

void check_state(const BellDiagonalState& state, const PermProtocol& proto) {
  proto.validate();
  if (state.pairs() != proto.n) {
    throw std::invalid_argument("permutation protocol expects " + std::to_string(proto.n) +
                                " pairs, state has " + std::to_string(state.pairs()));
  }
}

}  // namespace

void PermProtocol::validate() const {
  if (n == 0 || m > n) throw std::invalid_argument("PermProtocol: need n >= 1 and 0 <= m <= n");
  if (n > kMaxPairs) throw std::invalid_argument("PermProtocol: too many pairs");
  if (a.rows() != 2 * n || a.cols() != 2 * n) {
    throw std::invalid_argument("PermProtocol: A must be " + std::to_string(2 * n) + "x" +
                                std::to_string(2 * n));
  }
  if (b.size() != 2 * n) throw std::invalid_argument("PermProtocol: offset b must have length 2n");
  if (!is_symplectic(a)) {
    throw std::invalid_argument("PermProtocol: A violates AᵀPA = P (not a local permutation)");
  }
}

PermProtocol PermProtocol::linear(std::size_t n, std::size_t m, BitMatrix a) {
  PermProtocol proto{n, m, std::move(a), BitVector(2 * n)};
  proto.validate();
  return proto;
}

BitMatrix bilateral_cnot() {
  const std::vector<std::string> rows{"1100", "0100", "0010", "0011"};
  return BitMatrix::from_strings(rows);
}

Subspace subspace_S(const PermProtocol& proto) {
  proto.validate();
  std::vector<BitVector> rows;
  for (std::size_t i = proto.n + proto.m; i < 2 * proto.n; ++i) {
    rows.push_back(proto.a.row(i).swap_halves());  // row i of A·P
  }
  return Subspace::span(2 * proto.n, rows);
}

BitVector embed_ybar(const BitVector& y, const BitVector& t, std::size_t n, std::size_t m) {
  if (m > n) throw std::invalid_argument("embed_ybar: m exceeds n");
  if (y.size() != 2 * m || t.size() != n - m) {
    throw std::invalid_argument("embed_ybar: expected |y| = 2m and |t| = n - m");
  }
  const BitVector zeros(n - m);
  return y.slice(0, m).concat(zeros).concat(y.slice(m, m)).concat(t);
}

BitVector optimal_correction(const BellDiagonalState& conditional) {
  const auto probs = conditional.probs();
  if (probs.empty()) throw std::invalid_argument("optimal_correction: empty distribution");
  const double best = *std::max_element(probs.begin(), probs.end());
  std::size_t index = 0;
  while (probs[index] < best - kTieTolerance) ++index;
  return BitVector::from_word(conditional.label_bits(), index);
}

double default_threshold(const BellDiagonalState& state) {
  double lowest = 1.0;
  for (std::size_t i = 0; i < state.pairs(); ++i) lowest = std::min(lowest, state.pair_fidelity(i));
  return lowest;
}

std::vector<ProtocolOutcome> run_permutation_protocol(const BellDiagonalState& state,
                                                      const PermProtocol& proto,
                                                      std::optional<double> threshold) {
  check_state(state, proto);
  const double accept_at = threshold.value_or(default_threshold(state));
  const BitMatrix inverse = symplectic_inverse(proto.a);
  const BellDiagonalState shifted = pre_shift(state, proto, inverse);
  const Subspace s = subspace_S(proto);
  const Subspace s_perp = orthogonal_complement(s);

  const std::size_t measured = proto.n - proto.m;
  const double prefactor = static_cast<double>(std::uint64_t{1} << measured);
  std::vector<ProtocolOutcome> outcomes;
  for (std::uint64_t tw = 0; tw < (std::uint64_t{1} << measured); ++tw) {
    const auto t = BitVector::from_word(measured, tw);
    auto sums = branch_sums(shifted, proto, inverse, s, s_perp, t);
    if (!(sums.branch > 0.0)) continue;

    std::vector<double> conditional(sums.per_label.size());
    for (std::size_t y = 0; y < conditional.size(); ++y) conditional[y] = sums.per_label[y] / sums.branch;
    BellDiagonalState output(proto.m, std::move(conditional));
    BitVector correction = optimal_correction(output);
    BellDiagonalState corrected = output.pauli_shift(correction);
    const double fidelity = corrected.fidelity();
    outcomes.push_back(ProtocolOutcome{
        t, sums.branch, std::move(output), correction, std::move(corrected), fidelity,
        prefactor * sums.per_label[correction.word()] / sums.branch, fidelity >= accept_at});
  }
  return outcomes;
}

double scaled_fidelity(const BellDiagonalState& state, const PermProtocol& proto, const BitVector& t) {
  check_state(state, proto);
  if (t.size() != proto.n - proto.m) throw std::invalid_argument("scaled_fidelity: |t| must be n - m");
  const BitMatrix inverse = symplectic_inverse(proto.a);
  const Subspace s = subspace_S(proto);
  const auto sums = branch_sums(pre_shift(state, proto, inverse), proto, inverse, s,
                                orthogonal_complement(s), t);
  if (!(sums.branch > 0.0)) {
    throw std::domain_error("scaled_fidelity: branch t = " + t.to_string() + " has probability zero");
  }
  const auto normalized = BellDiagonalState::normalized(proto.m, sums.per_label);
  const auto a = optimal_correction(normalized);
  const double prefactor = static_cast<double>(std::uint64_t{1} << (proto.n - proto.m));
  return prefactor * sums.per_label[a.word()] / sums.branch;
}

std::vector<RecurrenceRound> recurrence_sweep(const PairDistribution& pair, const PermProtocol& proto,
                                              std::size_t rounds, std::optional<double> threshold) {
  proto.validate();
  if (proto.m != 1) throw std::invalid_argument("recurrence_sweep: recurrence mode needs m = 1");
  if (rounds == 0) throw std::invalid_argument("recurrence_sweep: rounds must be at least 1");
  pair.validate();

  std::vector<RecurrenceRound> report;
  PairDistribution current = pair;
  double yield = 1.0;
  for (std::size_t r = 1; r <= rounds; ++r) {
    const std::vector<PairDistribution> copies(proto.n, current);
    const auto state = BellDiagonalState::from_pairs(copies);
    const auto outcomes = run_permutation_protocol(state, proto, threshold.value_or(current.fidelity()));

    double accept = 0.0;
    std::array<double, 4> mixed{0.0, 0.0, 0.0, 0.0};
    for (const auto& o : outcomes) {
      if (!o.accepted) continue;
      accept += o.probability;
      for (std::size_t y = 0; y < 4; ++y) mixed[y] += o.probability * o.corrected.probs()[y];
    }
    RecurrenceRound row;
    row.round = r;
    row.input_fidelity = current.fidelity();
    row.accept_probability = accept;
    if (!(accept > 0.0)) {
      // Nothing passes: report the best branch so the stall is visible.
      const ProtocolOutcome* best = nullptr;
      for (const auto& o : outcomes) {
        if (!best || o.fidelity > best->fidelity) best = &o;
      }
      const auto w = best->corrected.probs();
      row.output = PairDistribution{{w[0], w[1], w[2], w[3]}};
      row.fidelity = best->fidelity;
      row.yield = 0.0;
      report.push_back(row);
      break;
    }
    for (double& w : mixed) w /= accept;
    yield *= accept * static_cast<double>(proto.m) / static_cast<double>(proto.n);
    current = PairDistribution{mixed};
    row.output = current;
    row.fidelity = current.fidelity();
    row.yield = yield;
    report.push_back(row);
  }
  return report;
}

}  // namespace distill
