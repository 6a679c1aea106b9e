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

#include "distill/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "distill/symplectic.hpp"

namespace distill {
namespace {

double max_entry_gap(std::span<const double> lhs, std::span<const double> rhs) {
  if (lhs.size() != rhs.size()) return INFINITY;
  double gap = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) gap = std::max(gap, std::abs(lhs[i] - rhs[i]));
  return gap;
}

// Bȳ must lie in C⊥ + B0̄ for all y, and B0̄ must carry syndrome s.
bool completion_consistent(const BitMatrix& completion, const StabilizerProtocol& proto,
                           const Subspace& c_perp, const BitVector& s) {
  const std::size_t n = proto.n;
  const std::size_t m = proto.m;
  const BitVector base = completion * embed_ybar(BitVector(2 * m), s, n, m);
  if (syndrome_of_error(proto.generators, base) != s) return false;
  const Coset branch(c_perp, base);
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << (2 * m)); ++y) {
    const auto ybar = embed_ybar(BitVector::from_word(2 * m, y), s, n, m);
    if (!branch.contains(completion * ybar)) return false;
  }
  return true;
}

}  // namespace

StabilizerPermutation permutation_from_stabilizer(const StabilizerProtocol& proto,
                                                  std::span<const std::size_t> candidate_order) {
  proto.validate();
  BitMatrix completion = complete_to_symplectic(proto.generators, proto.n, proto.m, candidate_order);
  PermProtocol perm{proto.n, proto.m, symplectic_inverse(completion), BitVector(2 * proto.n)};
  perm.validate();
  return {std::move(perm), std::move(completion)};
}

StabilizerProtocol stabilizer_from_permutation(const PermProtocol& proto) {
  proto.validate();
  StabilizerProtocol out{proto.n, proto.m, {}};
  for (std::size_t i = proto.n + proto.m; i < 2 * proto.n; ++i) {
    out.generators.push_back(proto.a.row(i).swap_halves());
  }
  out.validate();
  return out;
}

EquivalenceReport verify_equivalence(const BellDiagonalState& state, const StabilizerProtocol& proto,
                                     std::optional<double> threshold,
                                     std::span<const std::size_t> candidate_order) {
  const auto [perm, completion] = permutation_from_stabilizer(proto, candidate_order);
  const auto perm_branches = run_permutation_protocol(state, perm, threshold);
  const auto code_branches = run_code_protocol(state, proto, threshold, &completion);

  EquivalenceReport report;
  const Subspace code = proto.code_subspace();
  const Subspace c_perp = orthogonal_complement(code);
  report.subspaces_match = subspace_S(perm) == code;
  report.branches_match = true;
  report.coset_match = true;
  report.completion_consistent = true;

  std::map<BitVector, BranchComparison> rows;
  for (const auto& p : perm_branches) {
    auto& row = rows[p.t];
    row.label = p.t;
    row.in_perm = true;
    row.perm_probability = p.probability;
    row.perm_fidelity = p.fidelity;
  }
  for (const auto& c : code_branches) {
    auto& row = rows[c.s];
    row.label = c.s;
    row.in_code = true;
    row.code_probability = c.probability;
    row.code_fidelity = c.fidelity;
  }

  for (auto& [label, row] : rows) {
    row.completion_consistent = completion_consistent(completion, proto, c_perp, label);
    report.completion_consistent &= row.completion_consistent;
    if (!(row.in_perm && row.in_code)) {
      report.branches_match = false;
      continue;
    }
    const auto& p = *std::find_if(perm_branches.begin(), perm_branches.end(),
                                  [&](const ProtocolOutcome& o) { return o.t == label; });
    const auto& c = *std::find_if(code_branches.begin(), code_branches.end(),
                                  [&](const SyndromeBranch& b) { return b.s == label; });
    row.output_discrepancy = max_entry_gap(p.output.probs(), c.output.probs());
    const double gap = std::max({std::abs(p.probability - c.probability),
                                 std::abs(p.fidelity - c.fidelity),
                                 std::abs(p.scaled_fidelity - c.scaled_fidelity), row.output_discrepancy});
    report.max_discrepancy = std::max(report.max_discrepancy, gap);

    const Coset from_perm(code, completion * embed_ybar(p.correction, label, proto.n, proto.m));
    const Coset from_code(code, c.u);
    row.coset_match = from_perm == from_code ||
                      std::abs(coset_sum(state, from_perm) - coset_sum(state, from_code)) / c.probability <=
                          kTieTolerance;
    report.coset_match &= row.coset_match;
  }
  for (auto& [label, row] : rows) report.branches.push_back(row);
  return report;
}

}  // namespace distill
