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

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "distill/bell_state.hpp"
#include "distill/bit_matrix.hpp"
#include "distill/code_protocol.hpp"
#include "distill/equivalence.hpp"
#include "distill/perm_protocol.hpp"

namespace distill {

using Json = nlohmann::json;

/// Rounds to 15 significant digits, the precision used in all reports.
double report_value(double value);

/// "%.15g" text form of a probability.
std::string format_probability(double value);

/// Matrix as a list of row bit strings.
Json matrix_to_json(const BitMatrix& matrix);
BitMatrix matrix_from_json(const Json& rows);

/// {"n": n, "probs": [... 4^n weights indexed by label value ...]}
Json state_to_json(const BellDiagonalState& state);
BellDiagonalState state_from_json(const Json& json);

/// {"n", "m", "A": [row bit strings], "b": bit string}; b defaults to zero.
Json perm_protocol_to_json(const PermProtocol& proto);
PermProtocol perm_protocol_from_json(const Json& json);

/// {"n", "m", "generators": ["ZZ", ...]}; n and m may be omitted when they
/// follow from the generators (n = string length, m = n − count).
Json stabilizer_to_json(const StabilizerProtocol& proto);
StabilizerProtocol stabilizer_from_json(const Json& json);

Json outcome_to_json(const ProtocolOutcome& outcome);
Json branch_to_json(const SyndromeBranch& branch);
Json report_to_json(const EquivalenceReport& report);
Json round_to_json(const RecurrenceRound& round);

}  // namespace distill
