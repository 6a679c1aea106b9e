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

#include "distill/symplectic.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace distill {
namespace {

void require_even(const BitVector& v, const char* what) {
  if (v.size() % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": label length " + std::to_string(v.size()) +
                                " is odd");
  }
}

struct HyperbolicPair {
  BitVector e;
  BitVector f;
};

// Removes the components of x along each pair so the result is orthogonal
// to both members of every pair.
BitVector project_out(BitVector x, std::span<const HyperbolicPair> pairs) {
  for (const auto& p : pairs) {
    const bool along_e = sympl_inner(x, p.f);
    const bool along_f = sympl_inner(x, p.e);
    if (along_e) x ^= p.e;
    if (along_f) x ^= p.f;
  }
  return x;
}

}  // namespace

bool sympl_inner(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("sympl_inner: length mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  require_even(a, "sympl_inner");
  const std::size_t n = a.size() / 2;
  const std::uint64_t mask = low_mask(n);
  const std::uint64_t x = ((a.word() >> n) & b.word() & mask) ^ (a.word() & mask & (b.word() >> n));
  return std::popcount(x) & 1;
}

BitMatrix symplectic_form(std::size_t n) {
  BitMatrix p(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    p.set(i, n + i);
    p.set(n + i, i);
  }
  return p;
}

bool is_isotropic(std::span<const BitVector> vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      if (sympl_inner(vectors[i], vectors[j])) return false;
    }
  }
  return true;
}

bool is_symplectic(const BitMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("is_symplectic: matrix is not square");
  if (a.rows() % 2 != 0) throw std::invalid_argument("is_symplectic: dimension is odd");
  const std::size_t n = a.rows() / 2;
  // (AᵀPA)_{jk} is the symplectic product of columns j and k.
  std::vector<BitVector> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t k = j; k < cols.size(); ++k) {
      const bool expected = (k == j + n);
      if (sympl_inner(cols[j], cols[k]) != expected) return false;
    }
  }
  return true;
}

BitMatrix symplectic_inverse(const BitMatrix& a) {
  if (!is_symplectic(a)) {
    throw std::invalid_argument("symplectic_inverse: matrix does not satisfy AᵀPA = P");
  }
  const BitMatrix p = symplectic_form(a.rows() / 2);
  return p * a.transpose() * p;
}

Subspace orthogonal_complement(const Subspace& s) {
  if (s.ambient_dim() % 2 != 0) {
    throw std::invalid_argument("orthogonal_complement: ambient dimension is odd");
  }
  std::vector<BitVector> constraints;
  constraints.reserve(s.dimension());
  for (const auto& b : s.basis()) constraints.push_back(b.swap_halves());
  const auto kernel = gf2::null_space(constraints, s.ambient_dim());
  return Subspace::span(s.ambient_dim(), kernel);
}

BitVector solve_commutation(std::span<const BitVector> gens, const BitVector& syndrome) {
  if (syndrome.size() != gens.size()) {
    throw std::invalid_argument("solve_commutation: syndrome length " +
                                std::to_string(syndrome.size()) + " does not match " +
                                std::to_string(gens.size()) + " generators");
  }
  if (gens.empty()) {
    throw std::invalid_argument("solve_commutation: no generators to fix the label length");
  }
  const std::size_t len = gens.front().size();
  std::vector<BitVector> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.size() != len) throw std::invalid_argument("solve_commutation: generator length mismatch");
    require_even(g, "solve_commutation");
    rows.push_back(g.swap_halves());
  }
  auto solution = gf2::solve(rows, syndrome, len);
  if (!solution) {
    throw std::invalid_argument("solve_commutation: inconsistent system (generators dependent)");
  }
  return *solution;
}

BitMatrix complete_to_symplectic(std::span<const BitVector> gens, std::size_t n, std::size_t m,
                                 std::span<const std::size_t> candidate_order) {
  if (m > n) throw std::invalid_argument("complete_to_symplectic: m exceeds n");
  const std::size_t k = n - m;
  const std::size_t dim = 2 * n;
  if (gens.size() != k) {
    throw std::invalid_argument("complete_to_symplectic: expected " + std::to_string(k) +
                                " generators, got " + std::to_string(gens.size()));
  }
  for (const auto& g : gens) {
    if (g.size() != dim) {
      throw std::invalid_argument("complete_to_symplectic: generator length " +
                                  std::to_string(g.size()) + " is not 2n = " + std::to_string(dim));
    }
  }
  if (gf2::rank(gens) != k) {
    throw std::invalid_argument("complete_to_symplectic: generators are linearly dependent");
  }
  if (!is_isotropic(gens)) {
    throw std::invalid_argument("complete_to_symplectic: generators do not pairwise commute");
  }

  std::vector<std::size_t> order(candidate_order.begin(), candidate_order.end());
  if (order.empty()) {
    order.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) order[i] = i;
  } else {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted.size() != dim || sorted[i] != i) {
        throw std::invalid_argument("complete_to_symplectic: candidate order is not a permutation of 0..2n-1");
      }
    }
  }

  // Partners: sympl_inner(h_i, g_j) = δ_ij, then make the h mutually orthogonal.
  std::vector<HyperbolicPair> stabilizer_pairs;
  stabilizer_pairs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    BitVector h = solve_commutation(gens, BitVector::unit(k, i));
    for (std::size_t j = 0; j < i; ++j) {
      if (sympl_inner(h, stabilizer_pairs[j].f)) h ^= gens[j];
    }
    stabilizer_pairs.push_back({gens[i], h});
  }

  // Symplectic basis of the complement of span{g, h}.
  std::vector<BitVector> pool;
  pool.reserve(dim);
  for (std::size_t c : order) pool.push_back(project_out(BitVector::unit(dim, c), stabilizer_pairs));

  std::vector<HyperbolicPair> logical_pairs;
  logical_pairs.reserve(m);
  while (logical_pairs.size() < m) {
    auto e = std::find_if(pool.begin(), pool.end(), [](const BitVector& v) { return !v.is_zero(); });
    if (e == pool.end()) throw std::logic_error("complete_to_symplectic: complement exhausted");
    auto f = std::find_if(pool.begin(), pool.end(),
                          [&](const BitVector& v) { return sympl_inner(*e, v); });
    if (f == pool.end()) throw std::logic_error("complete_to_symplectic: complement is degenerate");
    HyperbolicPair pair{*e, *f};
    logical_pairs.push_back(pair);
    for (auto& v : pool) v = project_out(v, std::span(&pair, 1));
  }

  BitMatrix b(dim, dim);
  for (std::size_t j = 0; j < m; ++j) {
    b.set_column(j, logical_pairs[j].e);
    b.set_column(n + j, logical_pairs[j].f);
  }
  for (std::size_t i = 0; i < k; ++i) {
    b.set_column(m + i, stabilizer_pairs[i].e);
    b.set_column(n + m + i, stabilizer_pairs[i].f);
  }
  return b;
}

}  // namespace distill
