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

#include <gtest/gtest.h>

#include <set>

#include "distill/perm_protocol.hpp"
#include "distill/random.hpp"
#include "distill/symplectic.hpp"
#include "support/brute_force.hpp"

namespace distill {
namespace {

using testing::bits_of;
using testing::naive_sympl;

BitVector bv(const char* s) { return BitVector::from_string(s); }

TEST(SymplInner, Examples) {
  EXPECT_TRUE(sympl_inner(bv("10"), bv("01")));
  EXPECT_TRUE(sympl_inner(bv("1100"), bv("0010")));
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_vector(8, rng);
    EXPECT_FALSE(sympl_inner(a, a));
  }
}

TEST(SymplInner, MatchesExplicitForm) {
  Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 6;
    const auto a = random_vector(2 * n, rng);
    const auto b = random_vector(2 * n, rng);
    EXPECT_EQ(sympl_inner(a, b), naive_sympl(bits_of(a), bits_of(b)) == 1);
  }
}

TEST(IsSymplectic, Examples) {
  EXPECT_TRUE(is_symplectic(BitMatrix::identity(4)));
  EXPECT_TRUE(is_symplectic(bilateral_cnot()));
  const std::vector<std::string> singular{"1100", "1100", "0010", "0001"};
  EXPECT_FALSE(is_symplectic(BitMatrix::from_strings(singular)));
  EXPECT_THROW(is_symplectic(BitMatrix(3, 3)), std::invalid_argument);
  EXPECT_THROW(is_symplectic(BitMatrix(2, 4)), std::invalid_argument);
}

TEST(IsSymplectic, AgreesWithEntrywiseCheck) {
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 3;
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < 2 * n; ++r) rows.push_back(random_vector(2 * n, rng));
    const auto a = BitMatrix::from_rows(rows, 2 * n);
    EXPECT_EQ(is_symplectic(a), testing::naive_is_symplectic(a));
    const auto s = random_symplectic(n, rng);
    EXPECT_TRUE(testing::naive_is_symplectic(s));
  }
}

TEST(SymplecticInverse, IdentityAndBcnot) {
  EXPECT_EQ(symplectic_inverse(BitMatrix::identity(6)), BitMatrix::identity(6));
  const auto a = bilateral_cnot();
  const auto p = symplectic_form(2);
  EXPECT_EQ(symplectic_inverse(a), p * a.transpose() * p);
  EXPECT_EQ(a * symplectic_inverse(a), BitMatrix::identity(4));
  const std::vector<std::string> bad{"1100", "0100", "0010", "0010"};
  EXPECT_THROW(symplectic_inverse(BitMatrix::from_strings(bad)), std::invalid_argument);
}

TEST(SymplecticInverse, RandomProperty) {
  Rng rng(34);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_symplectic(1 + i % 5, rng);
    EXPECT_EQ(a * symplectic_inverse(a), BitMatrix::identity(a.rows()));
    EXPECT_EQ(symplectic_inverse(a) * a, BitMatrix::identity(a.rows()));
  }
}

TEST(OrthogonalComplement, Examples) {
  EXPECT_EQ(orthogonal_complement(Subspace(4)), Subspace::full(4));
  const std::vector<BitVector> zz{bv("1100")};
  const auto s = Subspace::span(4, zz);
  const auto perp = orthogonal_complement(s);
  EXPECT_EQ(perp.dimension(), 3u);
  EXPECT_TRUE(perp.contains(s));
  for (std::uint64_t x = 0; x < 16; ++x) {
    const auto v = BitVector::from_word(4, x);
    EXPECT_EQ(perp.contains(v), !sympl_inner(v, zz[0]));
  }
}

TEST(OrthogonalComplement, IsotropicInsideComplement) {
  Rng rng(35);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + i % 4;
    const auto gens = random_isotropic(n, rng() % (n + 1), rng);
    const auto s = Subspace::span(2 * n, gens);
    const auto perp = orthogonal_complement(s);
    EXPECT_TRUE(perp.contains(s));
    EXPECT_EQ(s.dimension() + perp.dimension(), 2 * n);
    EXPECT_EQ(orthogonal_complement(perp), s);
  }
}

TEST(SolveCommutation, Examples) {
  const std::vector<BitVector> zz{bv("1100")};
  EXPECT_EQ(solve_commutation(zz, bv("0")), bv("0000"));
  const auto v = solve_commutation(zz, bv("1"));
  EXPECT_TRUE(sympl_inner(v, zz[0]));
  EXPECT_TRUE(sympl_inner(bv("0010"), zz[0]));
  // Smallest solution in text order.
  EXPECT_EQ(v, bv("0001"));
  EXPECT_THROW(solve_commutation(std::vector<BitVector>{}, BitVector(0)), std::invalid_argument);
}

TEST(SolveCommutation, SmallestSolutionByEnumeration) {
  Rng rng(36);
  for (int i = 0; i < 80; ++i) {
    const std::size_t n = 2 + i % 2;
    const std::size_t k = 1 + rng() % n;
    const auto gens = random_isotropic(n, k, rng);
    const auto s = random_vector(k, rng);
    const auto v = solve_commutation(gens, s);
    std::uint64_t smallest = ~0ULL;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << (2 * n)) && smallest == ~0ULL; ++x) {
      bool ok = true;
      for (std::size_t j = 0; j < k; ++j) {
        ok = ok && (naive_sympl(testing::bits_from_index(x, 2 * n), bits_of(gens[j])) == (s[j] ? 1 : 0));
      }
      if (ok) smallest = x;
    }
    EXPECT_EQ(v.word(), smallest);
  }
}

void expect_completion(const std::vector<BitVector>& gens, std::size_t n, std::size_t m, const BitMatrix& b) {
  ASSERT_EQ(b.rows(), 2 * n);
  EXPECT_TRUE(testing::naive_is_symplectic(b));
  for (std::size_t i = 0; i < gens.size(); ++i) EXPECT_EQ(b.column(m + i), gens[i]);
}

TEST(CompleteToSymplectic, Examples) {
  EXPECT_EQ(complete_to_symplectic({}, 3, 3), BitMatrix::identity(6));
  const std::vector<BitVector> zz{bv("1100")};
  expect_completion(zz, 2, 1, complete_to_symplectic(zz, 2, 1));
}

TEST(CompleteToSymplectic, RandomIsotropicInputs) {
  Rng rng(37);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 1 + i % 5;
    const std::size_t m = rng() % (n + 1);
    const auto gens = random_isotropic(n, n - m, rng);
    expect_completion(gens, n, m, complete_to_symplectic(gens, n, m));
    const auto order = random_order(2 * n, rng);
    expect_completion(gens, n, m, complete_to_symplectic(gens, n, m, order));
  }
}

TEST(CompleteToSymplectic, OrdersGiveDifferentCompletions) {
  const std::vector<BitVector> zz{bv("110000"), bv("011000")};
  Rng rng(38);
  std::set<std::vector<std::string>> seen;
  for (int i = 0; i < 40; ++i) {
    const auto order = random_order(6, rng);
    seen.insert(complete_to_symplectic(zz, 3, 1, order).to_strings());
  }
  EXPECT_GE(seen.size(), 2u);
}

TEST(CompleteToSymplectic, RejectsBadInput) {
  EXPECT_THROW(complete_to_symplectic(std::vector<BitVector>{bv("1000"), bv("0010")}, 2, 0),
               std::invalid_argument);  // anticommuting
  EXPECT_THROW(complete_to_symplectic(std::vector<BitVector>{bv("1100"), bv("1100")}, 2, 0),
               std::invalid_argument);  // dependent
  EXPECT_THROW(complete_to_symplectic(std::vector<BitVector>{bv("1100")}, 2, 0), std::invalid_argument);
  const std::vector<std::size_t> not_permutation{0, 0, 1, 2};
  EXPECT_THROW(complete_to_symplectic(std::vector<BitVector>{bv("1100")}, 2, 1, not_permutation),
               std::invalid_argument);
}

}  // namespace
}  // namespace distill
