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

#include "support/brute_force.hpp"

#include <algorithm>
#include <set>

namespace distill::testing {

Bits bits_of(const BitVector& v) {
  Bits out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] ? 1 : 0;
  return out;
}

BitVector vec_of(const Bits& bits) {
  BitVector out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out.set(i, bits[i] != 0);
  return out;
}

std::uint64_t index_of(const Bits& bits) {
  std::uint64_t out = 0;
  for (int b : bits) out = (out << 1) | static_cast<std::uint64_t>(b & 1);
  return out;
}

Bits bits_from_index(std::uint64_t index, std::size_t size) {
  Bits out(size);
  for (std::size_t i = 0; i < size; ++i) out[size - 1 - i] = static_cast<int>((index >> i) & 1U);
  return out;
}

int naive_sympl(const Bits& a, const Bits& b) {
  const std::size_t n = a.size() / 2;
  int sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[n + i] + a[n + i] * b[i];
  return sum % 2;
}

Bits naive_apply(const BitMatrix& a, const Bits& x, const Bits& b) {
  Bits out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int sum = b.empty() ? 0 : b[i];
    for (std::size_t j = 0; j < a.cols(); ++j) sum += (a.get(i, j) ? 1 : 0) * x[j];
    out[i] = sum % 2;
  }
  return out;
}

bool naive_is_symplectic(const BitMatrix& a) {
  const std::size_t d = a.rows();
  if (d != a.cols() || d % 2 != 0) return false;
  const std::size_t n = d / 2;
  // (AᵀPA)_{ij} = sympl(column i, column j).
  for (std::size_t i = 0; i < d; ++i) {
    Bits ci(d);
    for (std::size_t r = 0; r < d; ++r) ci[r] = a.get(r, i) ? 1 : 0;
    for (std::size_t j = 0; j < d; ++j) {
      Bits cj(d);
      for (std::size_t r = 0; r < d; ++r) cj[r] = a.get(r, j) ? 1 : 0;
      const int want = (j == (i + n) % d) ? 1 : 0;
      if (naive_sympl(ci, cj) != want) return false;
    }
  }
  return true;
}

std::vector<Bits> naive_span(const std::vector<Bits>& gens, std::size_t size) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    Bits v(size, 0);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if ((mask >> k) & 1U) {
        for (std::size_t i = 0; i < size; ++i) v[i] ^= gens[k][i];
      }
    }
    seen.insert(index_of(v));
  }
  std::vector<Bits> out;
  for (auto idx : seen) out.push_back(bits_from_index(idx, size));
  return out;
}

std::map<std::uint64_t, NaiveBranch> naive_parity_branches(const BellDiagonalState& state,
                                                           const BitMatrix& a, const BitVector& b,
                                                           std::size_t m) {
  const std::size_t n = state.pairs();
  const Bits offset = bits_of(b);
  std::map<std::uint64_t, NaiveBranch> out;
  const auto probs = state.probs();
  for (std::uint64_t x = 0; x < probs.size(); ++x) {
    const Bits y = naive_apply(a, bits_from_index(x, 2 * n), offset);
    Bits kept;
    for (std::size_t i = 0; i < m; ++i) kept.push_back(y[i]);
    for (std::size_t i = 0; i < m; ++i) kept.push_back(y[n + i]);
    Bits t;
    for (std::size_t i = n + m; i < 2 * n; ++i) t.push_back(y[i]);
    auto& branch = out[index_of(t)];
    branch.output.resize(std::size_t{1} << (2 * m), 0.0);
    branch.output[index_of(kept)] += probs[x];
    branch.probability += probs[x];
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.probability <= 0.0) {
      it = out.erase(it);
      continue;
    }
    for (double& w : it->second.output) w /= it->second.probability;
    ++it;
  }
  return out;
}

std::vector<double> naive_syndrome_distribution(const BellDiagonalState& state,
                                                const std::vector<BitVector>& gens) {
  const std::size_t n = state.pairs();
  std::vector<double> out(std::size_t{1} << gens.size(), 0.0);
  std::vector<Bits> g;
  for (const auto& v : gens) g.push_back(bits_of(v));
  const auto probs = state.probs();
  for (std::uint64_t x = 0; x < probs.size(); ++x) {
    const Bits e = bits_from_index(x, 2 * n);
    Bits s;
    for (const auto& gi : g) s.push_back(naive_sympl(e, gi));
    out[index_of(s)] += probs[x];
  }
  return out;
}

double naive_best_coset_weight(const BellDiagonalState& state, const std::vector<BitVector>& gens,
                               std::uint64_t s) {
  const std::size_t n = state.pairs();
  std::vector<Bits> g;
  for (const auto& v : gens) g.push_back(bits_of(v));
  const auto code = naive_span(g, 2 * n);
  const auto probs = state.probs();
  double best = -1.0;
  for (std::uint64_t x = 0; x < probs.size(); ++x) {
    const Bits e = bits_from_index(x, 2 * n);
    Bits syn;
    for (const auto& gi : g) syn.push_back(naive_sympl(e, gi));
    if (index_of(syn) != s) continue;
    double sum = 0.0;
    for (const auto& c : code) {
      Bits ec = e;
      for (std::size_t i = 0; i < ec.size(); ++i) ec[i] ^= c[i];
      sum += probs[index_of(ec)];
    }
    best = std::max(best, sum);
  }
  return best;
}

double naive_best_shift(const std::vector<double>& dist) {
  double best = 0.0;
  for (std::uint64_t a = 0; a < dist.size(); ++a) best = std::max(best, naive_shift(dist, a)[0]);
  return best;
}

std::vector<double> naive_shift(const std::vector<double>& dist, std::uint64_t a) {
  std::vector<double> out(dist.size());
  for (std::uint64_t x = 0; x < dist.size(); ++x) out[x ^ a] = dist[x];
  return out;
}

}  // namespace distill::testing
