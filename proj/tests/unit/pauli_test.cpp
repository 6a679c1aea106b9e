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

#include <random>

#include "distill/pauli.hpp"

namespace distill {
namespace {

TEST(Pauli, MappingTable) {
  EXPECT_EQ(parse_pauli_string("I"), BitVector::from_string("00"));
  EXPECT_EQ(parse_pauli_string("X"), BitVector::from_string("01"));
  EXPECT_EQ(parse_pauli_string("Z"), BitVector::from_string("10"));
  EXPECT_EQ(parse_pauli_string("Y"), BitVector::from_string("11"));
  EXPECT_EQ(parse_pauli_string("XI"), BitVector::from_string("0010"));
  EXPECT_EQ(parse_pauli_string("ZZ"), BitVector::from_string("1100"));
}

TEST(Pauli, RejectsUnknownCharacters) {
  EXPECT_THROW(parse_pauli_string("XQ"), std::invalid_argument);
  EXPECT_THROW(parse_pauli_string("xz"), std::invalid_argument);
}

TEST(Pauli, RoundTrip) {
  std::mt19937_64 rng(91);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int i = 0; i < 200; ++i) {
    std::string s;
    for (std::size_t k = 0; k < 1 + rng() % 12; ++k) s += letters[rng() % 4];
    EXPECT_EQ(to_pauli_string(parse_pauli_string(s)), s);
  }
}

}  // namespace
}  // namespace distill
