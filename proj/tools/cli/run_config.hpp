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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distill/bell_state.hpp"
#include "distill/code_protocol.hpp"
#include "distill/perm_protocol.hpp"
#include "distill/serialization.hpp"

namespace distill::cli {

/// Raised for any configuration problem; maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kRunPerm, kRunCode, kVerify, kSweep, kOracleCheck };
enum class OutputFormat { kJson, kCsv };

/// Environment variable naming the directory for relative --output paths.
inline constexpr const char* kOutputDirEnv = "DISTILL_OUTPUT_DIR";

struct SweepGrid {
  double f_min = 0.55;
  double f_max = 0.95;
  double f_step = 0.05;

  std::vector<double> points() const;
};

struct RunConfig {
  // Input: exactly one of these.
  std::optional<double> werner;
  std::optional<PairDistribution> pair;
  std::optional<BellDiagonalState> state;

  // Protocol: exactly one of these.
  std::optional<StabilizerProtocol> stabilizer;
  std::optional<PermProtocol> permutation;

  std::size_t rounds = 1;
  std::optional<double> threshold;
  OutputFormat format = OutputFormat::kJson;
  std::uint64_t seed = 0;
  SweepGrid grid;
  /// Random instances for verify / oracle-check when no protocol is given.
  std::size_t instances = 0;
  std::string output;

  /// Throws ConfigError when the combination is not valid for `command`.
  void validate(Command command) const;

  std::size_t pairs() const;
  /// Input state on the protocol's pair count.
  BellDiagonalState input_state() const;
  PermProtocol permutation_protocol() const;
  StabilizerProtocol stabilizer_protocol() const;
};

/// Reads a JSON config file (see README for the schema).
RunConfig load_config(const std::string& path);
RunConfig config_from_json(const Json& json);

/// Fields that inline flags may override. Unset members leave the config alone.
struct InlineOptions {
  std::optional<std::string> config_path;
  std::optional<double> werner;
  std::optional<std::string> pair;
  std::optional<std::string> state_path;
  std::optional<std::string> protocol_path;
  std::vector<std::string> generators;
  std::vector<std::string> matrix;
  std::optional<std::string> offset;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::size_t> rounds;
  std::optional<double> threshold;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<double> f_min;
  std::optional<double> f_max;
  std::optional<double> f_step;
  std::optional<std::size_t> instances;
  std::optional<std::string> output;
};

/// Config file (when given) with inline flags applied on top.
RunConfig resolve_config(const InlineOptions& options);

PairDistribution parse_pair(const std::string& text);
OutputFormat parse_format(const std::string& text);

}  // namespace distill::cli
