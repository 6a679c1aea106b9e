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

#include <string>
#include <string_view>

#include "distill/bit_vector.hpp"

namespace distill {

/// "XIZ" -> label of length 2k with I=(0,0), X=(0,1), Z=(1,0), Y=(1,1) split
/// into (phase | parity) halves.
BitVector parse_pauli_string(std::string_view text);

/// Inverse of parse_pauli_string.
std::string to_pauli_string(const BitVector& label);

}  // namespace distill
