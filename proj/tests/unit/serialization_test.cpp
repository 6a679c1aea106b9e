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

#include "distill/random.hpp"
#include "distill/serialization.hpp"

namespace distill {
namespace {

TEST(Serialization, ProbabilityFormat) {
  EXPECT_EQ(format_probability(41.0 / 52.0), "0.788461538461538");
  EXPECT_EQ(format_probability(0.25), "0.25");
  EXPECT_EQ(report_value(41.0 / 52.0), 0.788461538461538);
}

TEST(Serialization, StateRoundTrip) {
  Rng rng(101);
  const auto s = random_state(2, rng);
  const auto back = state_from_json(Json::parse(state_to_json(s).dump()));
  for (std::size_t x = 0; x < 16; ++x) EXPECT_NEAR(back.probs()[x], s.probs()[x], 1e-14);
  EXPECT_THROW(state_from_json(Json{{"n", 1}, {"probs", {0.5, 0.5}}}), std::invalid_argument);
  EXPECT_THROW(state_from_json(Json{{"probs", {1, 0, 0, 0}}}), std::invalid_argument);
}

TEST(Serialization, PermProtocolRoundTrip) {
  Rng rng(102);
  const PermProtocol p{3, 1, random_symplectic(3, rng), random_vector(6, rng)};
  const auto back = perm_protocol_from_json(perm_protocol_to_json(p));
  EXPECT_EQ(back.a, p.a);
  EXPECT_EQ(back.b, p.b);
  EXPECT_EQ(back.m, 1u);
  const Json bad{{"n", 2}, {"m", 1}, {"A", {"1100", "0100", "0010", "0010"}}};
  try {
    perm_protocol_from_json(bad);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("AᵀPA = P"), std::string::npos);
  }
}

TEST(Serialization, StabilizerInfersSizes) {
  const auto p = stabilizer_from_json(Json{{"generators", {"ZZI", "IZZ"}}});
  EXPECT_EQ(p.n, 3u);
  EXPECT_EQ(p.m, 1u);
  EXPECT_EQ(stabilizer_to_json(p)["generators"], Json({"ZZI", "IZZ"}));
  EXPECT_THROW(stabilizer_from_json(Json{{"generators", {"ZI", "XI"}}}), std::invalid_argument);
}

}  // namespace
}  // namespace distill
