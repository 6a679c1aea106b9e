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

#include <cmath>

#include "distill/equivalence.hpp"
#include "distill/random.hpp"
#include "distill/symplectic.hpp"

namespace distill {
namespace {

constexpr double kTol = 1e-12;

BitVector bv(const char* s) { return BitVector::from_string(s); }

BellDiagonalState werner_pairs(std::size_t n, double f) {
  const std::vector<PairDistribution> pairs(n, werner(f));
  return BellDiagonalState::from_pairs(pairs);
}

TEST(PermutationFromStabilizer, ZZ) {
  const StabilizerProtocol zz{2, 1, {bv("1100")}};
  const auto sp = permutation_from_stabilizer(zz);
  EXPECT_TRUE(is_symplectic(sp.protocol.a));
  EXPECT_TRUE(sp.protocol.b.is_zero());
  EXPECT_EQ(subspace_S(sp.protocol), zz.code_subspace());
  EXPECT_EQ(sp.protocol.a * sp.completion, BitMatrix::identity(4));
}

TEST(PermutationFromStabilizer, EmptyGeneratorsGiveIdentity) {
  const auto sp = permutation_from_stabilizer(StabilizerProtocol{3, 3, {}});
  EXPECT_EQ(sp.protocol.a, BitMatrix::identity(6));
}

TEST(PermutationFromStabilizer, RoundTripKeepsCode) {
  Rng rng(71);
  for (int i = 0; i < 80; ++i) {
    const std::size_t n = 1 + i % 5;
    const std::size_t m = rng() % (n + 1);
    const StabilizerProtocol proto{n, m, random_isotropic(n, n - m, rng)};
    const auto order = random_order(2 * n, rng);
    const auto back = stabilizer_from_permutation(permutation_from_stabilizer(proto, order).protocol);
    EXPECT_EQ(back.code_subspace(), proto.code_subspace());
  }
}

TEST(StabilizerFromPermutation, Examples) {
  const auto from_bcnot = stabilizer_from_permutation(PermProtocol::linear(2, 1, bilateral_cnot()));
  EXPECT_EQ(from_bcnot.generators, (std::vector<BitVector>{bv("1100")}));
  const auto from_identity = stabilizer_from_permutation(PermProtocol::linear(2, 1, BitMatrix::identity(4)));
  EXPECT_EQ(from_identity.generators, (std::vector<BitVector>{bv("0100")}));
}

TEST(StabilizerFromPermutation, AlwaysValid) {
  Rng rng(72);
  for (int i = 0; i < 80; ++i) {
    const std::size_t n = 1 + i % 5;
    const auto proto = stabilizer_from_permutation(PermProtocol::linear(n, rng() % (n + 1), random_symplectic(n, rng)));
    EXPECT_NO_THROW(proto.validate());
  }
}

TEST(VerifyEquivalence, PureInput) {
  const auto r = verify_equivalence(BellDiagonalState::basis_state(BitVector(4)), StabilizerProtocol{2, 1, {bv("1100")}});
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.max_discrepancy, 0.0);
}

TEST(VerifyEquivalence, WernerZZ) {
  const auto r = verify_equivalence(werner_pairs(2, 0.75), StabilizerProtocol{2, 1, {bv("1100")}});
  EXPECT_TRUE(r.holds());
  ASSERT_EQ(r.branches.size(), 2u);
  EXPECT_NEAR(r.branches[0].perm_fidelity, 41.0 / 52.0, kTol);
  EXPECT_NEAR(r.branches[0].code_fidelity, 41.0 / 52.0, kTol);
  EXPECT_NEAR(r.branches[1].perm_fidelity, 0.25, kTol);
  EXPECT_NEAR(r.branches[1].code_fidelity, 0.25, kTol);
}

TEST(VerifyEquivalence, RandomInstances) {
  Rng rng(73);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + i % 3;
    const std::size_t m = rng() % n;
    const StabilizerProtocol proto{n, m, random_isotropic(n, n - m, rng)};
    const auto r = verify_equivalence(random_state(n, rng), proto);
    EXPECT_TRUE(r.holds()) << "instance " << i << " discrepancy " << r.max_discrepancy;
  }
}

TEST(VerifyEquivalence, DetectsWrongPermutation) {
  // The identity permutation measures IZ, not ZZ: the syndrome
  // distributions differ, so a report built from it must not hold.
  const auto state = werner_pairs(2, 0.75);
  const auto code = run_code_protocol(state, StabilizerProtocol{2, 1, {bv("1100")}});
  const auto perm = run_permutation_protocol(state, PermProtocol::linear(2, 1, BitMatrix::identity(4)));
  EXPECT_GT(std::abs(code[0].probability - perm[0].probability), 1e-3);
}

}  // namespace
}  // namespace distill
