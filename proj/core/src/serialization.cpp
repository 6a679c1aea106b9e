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

#include "distill/serialization.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "distill/pauli.hpp"

namespace distill {
namespace {

Json probs_to_json(std::span<const double> probs) {
  Json out = Json::array();
  for (double p : probs) out.push_back(report_value(p));
  return out;
}

std::size_t require_count(const Json& json, const char* key) {
  if (!json.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  const auto& value = json.at(key);
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw std::invalid_argument(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

std::string format_probability(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return buffer;
}

double report_value(double value) { return std::strtod(format_probability(value).c_str(), nullptr); }

Json matrix_to_json(const BitMatrix& matrix) { return matrix.to_strings(); }

BitMatrix matrix_from_json(const Json& rows) {
  if (!rows.is_array()) throw std::invalid_argument("matrix must be a list of row bit strings");
  return BitMatrix::from_strings(rows.get<std::vector<std::string>>());
}

Json state_to_json(const BellDiagonalState& state) {
  return Json{{"n", state.pairs()}, {"probs", probs_to_json(state.probs())}};
}

BellDiagonalState state_from_json(const Json& json) {
  const std::size_t n = require_count(json, "n");
  if (!json.contains("probs") || !json.at("probs").is_array()) {
    throw std::invalid_argument("state needs a \"probs\" array");
  }
  return BellDiagonalState(n, json.at("probs").get<std::vector<double>>());
}

Json perm_protocol_to_json(const PermProtocol& proto) {
  return Json{{"n", proto.n}, {"m", proto.m}, {"A", matrix_to_json(proto.a)}, {"b", proto.b.to_string()}};
}

PermProtocol perm_protocol_from_json(const Json& json) {
  PermProtocol proto;
  proto.n = require_count(json, "n");
  proto.m = require_count(json, "m");
  if (!json.contains("A")) throw std::invalid_argument("permutation protocol needs a matrix \"A\"");
  proto.a = matrix_from_json(json.at("A"));
  proto.b = json.contains("b") ? BitVector::from_string(json.at("b").get<std::string>()) : BitVector(2 * proto.n);
  proto.validate();
  return proto;
}

Json stabilizer_to_json(const StabilizerProtocol& proto) {
  Json gens = Json::array();
  for (const auto& g : proto.generators) gens.push_back(to_pauli_string(g));
  return Json{{"n", proto.n}, {"m", proto.m}, {"generators", gens}};
}

StabilizerProtocol stabilizer_from_json(const Json& json) {
  if (!json.contains("generators") || !json.at("generators").is_array()) {
    throw std::invalid_argument("stabilizer protocol needs a \"generators\" list");
  }
  StabilizerProtocol proto;
  for (const auto& g : json.at("generators")) proto.generators.push_back(parse_pauli_string(g.get<std::string>()));
  if (json.contains("n")) {
    proto.n = require_count(json, "n");
  } else if (!proto.generators.empty()) {
    proto.n = proto.generators.front().size() / 2;
  } else {
    throw std::invalid_argument("stabilizer protocol without generators needs \"n\"");
  }
  proto.m = json.contains("m") ? require_count(json, "m") : proto.n - std::min(proto.n, proto.generators.size());
  proto.validate();
  return proto;
}

Json outcome_to_json(const ProtocolOutcome& o) {
  return Json{{"t", o.t.to_string()},
              {"probability", report_value(o.probability)},
              {"fidelity", report_value(o.fidelity)},
              {"scaled_fidelity", report_value(o.scaled_fidelity)},
              {"correction", o.correction.to_string()},
              {"accepted", o.accepted},
              {"output", probs_to_json(o.output.probs())}};
}

Json branch_to_json(const SyndromeBranch& b) {
  return Json{{"s", b.s.to_string()},
              {"probability", report_value(b.probability)},
              {"fidelity", report_value(b.fidelity)},
              {"scaled_fidelity", report_value(b.scaled_fidelity)},
              {"v", b.v.to_string()},
              {"u", b.u.to_string()},
              {"correction", b.correction.to_string()},
              {"accepted", b.accepted},
              {"output", probs_to_json(b.output.probs())}};
}

Json report_to_json(const EquivalenceReport& report) {
  Json branches = Json::array();
  for (const auto& b : report.branches) {
    branches.push_back(Json{{"label", b.label.to_string()},
                            {"in_perm", b.in_perm},
                            {"in_code", b.in_code},
                            {"perm_probability", report_value(b.perm_probability)},
                            {"code_probability", report_value(b.code_probability)},
                            {"perm_fidelity", report_value(b.perm_fidelity)},
                            {"code_fidelity", report_value(b.code_fidelity)},
                            {"output_discrepancy", report_value(b.output_discrepancy)},
                            {"coset_match", b.coset_match},
                            {"completion_consistent", b.completion_consistent}});
  }
  return Json{{"holds", report.holds()},
              {"subspaces_match", report.subspaces_match},
              {"branches_match", report.branches_match},
              {"coset_match", report.coset_match},
              {"completion_consistent", report.completion_consistent},
              {"max_discrepancy", report_value(report.max_discrepancy)},
              {"branches", branches}};
}

Json round_to_json(const RecurrenceRound& r) {
  return Json{{"round", r.round},
              {"input_fidelity", report_value(r.input_fidelity)},
              {"accept_probability", report_value(r.accept_probability)},
              {"fidelity", report_value(r.fidelity)},
              {"yield", report_value(r.yield)},
              {"output", probs_to_json(r.output.weights)}};
}

}  // namespace distill
