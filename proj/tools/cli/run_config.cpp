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

#include "cli/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "distill/dense_oracle.hpp"
#include "distill/equivalence.hpp"
#include "distill/pauli.hpp"

namespace distill::cli {
namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

template <typename F>
auto wrap(const char* what, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
}

void set_protocol_from_json(RunConfig& cfg, const Json& p) {
  if (p.contains("generators")) {
    cfg.stabilizer = wrap("protocol", [&] { return stabilizer_from_json(p); });
  } else if (p.contains("A")) {
    cfg.permutation = wrap("protocol", [&] { return perm_protocol_from_json(p); });
  } else {
    throw ConfigError("protocol needs either \"generators\" or \"A\"");
  }
}

}  // namespace

std::vector<double> SweepGrid::points() const {
  if (!(f_step > 0.0) || f_max < f_min) throw ConfigError("sweep grid needs f_step > 0 and f_min <= f_max");
  std::vector<double> out;
  // Index-based so the grid does not drift with accumulated rounding.
  const auto count = static_cast<std::size_t>(std::floor((f_max - f_min) / f_step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) out.push_back(report_value(f_min + static_cast<double>(i) * f_step));
  return out;
}

PairDistribution parse_pair(const std::string& text) {
  std::stringstream in(text);
  PairDistribution out;
  std::string item;
  std::size_t i = 0;
  while (std::getline(in, item, ',')) {
    if (i == 4) throw ConfigError("--pair takes exactly 4 weights");
    try {
      std::size_t used = 0;
      out.weights[i++] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("--pair: not a number: " + item);
    }
  }
  if (i != 4) throw ConfigError("--pair takes exactly 4 weights");
  wrap("pair", [&] { out.validate(); });
  return out;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  throw ConfigError("unknown format '" + text + "' (json or csv)");
}

RunConfig config_from_json(const Json& json) {
  if (!json.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  try {
    if (json.contains("input")) {
      const Json& in = json.at("input");
      if (in.contains("werner")) cfg.werner = in.at("werner").get<double>();
      if (in.contains("pair")) {
        PairDistribution pd;
        const auto w = in.at("pair").get<std::vector<double>>();
        if (w.size() != 4) throw ConfigError("input.pair takes exactly 4 weights");
        std::copy(w.begin(), w.end(), pd.weights.begin());
        wrap("pair", [&] { pd.validate(); });
        cfg.pair = pd;
      }
      if (in.contains("state")) cfg.state = wrap("state", [&] { return state_from_json(in.at("state")); });
    }
    if (json.contains("protocol")) set_protocol_from_json(cfg, json.at("protocol"));
    if (json.contains("rounds")) cfg.rounds = json.at("rounds").get<std::size_t>();
    if (json.contains("threshold")) cfg.threshold = json.at("threshold").get<double>();
    if (json.contains("format")) cfg.format = parse_format(json.at("format").get<std::string>());
    if (json.contains("seed")) cfg.seed = json.at("seed").get<std::uint64_t>();
    if (json.contains("instances")) cfg.instances = json.at("instances").get<std::size_t>();
    if (json.contains("output")) cfg.output = json.at("output").get<std::string>();
    if (json.contains("sweep")) {
      const Json& s = json.at("sweep");
      cfg.grid.f_min = s.value("f_min", cfg.grid.f_min);
      cfg.grid.f_max = s.value("f_max", cfg.grid.f_max);
      cfg.grid.f_step = s.value("f_step", cfg.grid.f_step);
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

RunConfig resolve_config(const InlineOptions& o) {
  RunConfig cfg = o.config_path ? load_config(*o.config_path) : RunConfig{};

  const bool inline_input = o.werner || o.pair || o.state_path;
  if (inline_input) {
    cfg.werner.reset();
    cfg.pair.reset();
    cfg.state.reset();
  }
  if (o.werner) cfg.werner = *o.werner;
  if (o.pair) cfg.pair = parse_pair(*o.pair);
  if (o.state_path) cfg.state = wrap("state", [&] { return state_from_json(read_json_file(*o.state_path)); });

  const bool inline_protocol = o.protocol_path || !o.generators.empty() || !o.matrix.empty();
  if (inline_protocol) {
    cfg.stabilizer.reset();
    cfg.permutation.reset();
  }
  if (o.protocol_path) set_protocol_from_json(cfg, read_json_file(*o.protocol_path));
  if (!o.generators.empty()) {
    StabilizerProtocol proto;
    for (const auto& g : o.generators) proto.generators.push_back(wrap("generator", [&] { return parse_pauli_string(g); }));
    proto.n = o.n.value_or(proto.generators.front().size() / 2);
    proto.m = o.m.value_or(proto.n - std::min(proto.n, proto.generators.size()));
    wrap("protocol", [&] { proto.validate(); });
    cfg.stabilizer = std::move(proto);
  } else if (!o.matrix.empty()) {
    if (!o.m) throw ConfigError("--matrix needs --m");
    PermProtocol proto;
    proto.a = wrap("matrix", [&] { return BitMatrix::from_strings(o.matrix); });
    proto.n = o.n.value_or(proto.a.rows() / 2);
    proto.m = *o.m;
    proto.b = o.offset ? wrap("offset", [&] { return BitVector::from_string(*o.offset); }) : BitVector(2 * proto.n);
    wrap("protocol", [&] { proto.validate(); });
    cfg.permutation = std::move(proto);
  }

  if (o.rounds) cfg.rounds = *o.rounds;
  if (o.threshold) cfg.threshold = *o.threshold;
  if (o.format) cfg.format = parse_format(*o.format);
  if (o.seed) cfg.seed = *o.seed;
  if (o.f_min) cfg.grid.f_min = *o.f_min;
  if (o.f_max) cfg.grid.f_max = *o.f_max;
  if (o.f_step) cfg.grid.f_step = *o.f_step;
  if (o.instances) cfg.instances = *o.instances;
  if (o.output) cfg.output = *o.output;
  return cfg;
}

void RunConfig::validate(Command command) const {
  const int inputs = int(werner.has_value()) + int(pair.has_value()) + int(state.has_value());
  const int protocols = int(stabilizer.has_value()) + int(permutation.has_value());
  if (inputs > 1) throw ConfigError("give exactly one input (werner, pair or state)");
  if (protocols > 1) throw ConfigError("give exactly one protocol (generators or matrix)");
  if (werner && !(*werner >= 0.0 && *werner <= 1.0)) throw ConfigError("werner fidelity must lie in [0, 1]");
  if (threshold && !(*threshold >= 0.0 && *threshold <= 1.0)) throw ConfigError("threshold must lie in [0, 1]");

  const bool random_mode = (command == Command::kVerify || command == Command::kOracleCheck) && protocols == 0;
  if (random_mode) {
    if (inputs != 0) throw ConfigError("an input state needs a protocol");
    return;
  }
  if (protocols == 0) throw ConfigError("missing protocol (--generators, --matrix or --protocol)");
  if (command == Command::kSweep) {
    if (state) throw ConfigError("sweep takes a single-pair input or the F grid");
    if (pairs() < 1) throw ConfigError("sweep needs a protocol on at least one pair");
    const std::size_t m = stabilizer ? stabilizer->m : permutation->m;
    if (m != 1) throw ConfigError("sweep needs a protocol keeping m = 1 pair");
    if (rounds == 0) throw ConfigError("rounds must be at least 1");
    (void)grid.points();
    return;
  }
  if (inputs == 0) throw ConfigError("missing input (--werner, --pair or --state)");
  if (state && state->pairs() != pairs()) {
    throw ConfigError("state has " + std::to_string(state->pairs()) + " pairs but the protocol acts on " +
                      std::to_string(pairs()));
  }
  if (command == Command::kOracleCheck && pairs() > oracle::kMaxOraclePairs) {
    throw ConfigError("oracle-check is limited to " + std::to_string(oracle::kMaxOraclePairs) + " pairs");
  }
}

std::size_t RunConfig::pairs() const {
  if (stabilizer) return stabilizer->n;
  if (permutation) return permutation->n;
  if (state) return state->pairs();
  throw ConfigError("cannot tell the number of pairs without a protocol");
}

BellDiagonalState RunConfig::input_state() const {
  if (state) return *state;
  PairDistribution one;
  if (werner) {
    one = distill::werner(*werner);
  } else if (pair) {
    one = *pair;
  } else {
    throw ConfigError("missing input");
  }
  const std::vector<PairDistribution> copies(pairs(), one);
  return BellDiagonalState::from_pairs(copies);
}

PermProtocol RunConfig::permutation_protocol() const {
  if (permutation) return *permutation;
  if (stabilizer) return permutation_from_stabilizer(*stabilizer).protocol;
  throw ConfigError("missing protocol");
}

StabilizerProtocol RunConfig::stabilizer_protocol() const {
  if (stabilizer) return *stabilizer;
  if (permutation) return stabilizer_from_permutation(*permutation);
  throw ConfigError("missing protocol");
}

}  // namespace distill::cli
