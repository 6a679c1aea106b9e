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

#include <iosfwd>
#include <string>
#include <vector>

#include "cli/run_config.hpp"

namespace distill::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMismatch = 2;

/// Entrywise agreement required between the engines and the dense simulation.
inline constexpr double kOracleTolerance = 1e-10;

/// Random instances used by verify / oracle-check when none are requested.
inline constexpr std::size_t kDefaultVerifyInstances = 200;
inline constexpr std::size_t kDefaultOracleInstances = 50;

struct CommandResult {
  int exit_code = kExitOk;
  std::string text;
  std::vector<std::string> warnings;
};

CommandResult cmd_run_perm(const RunConfig& cfg);
CommandResult cmd_run_code(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_oracle_check(const RunConfig& cfg);

/// Validates `cfg` and dispatches. Configuration errors become exit code 1
/// with the message in `warnings`.
CommandResult run_command(Command command, const RunConfig& cfg);

const char* command_name(Command command);

/// Where the report goes: --output (relative paths land in $DISTILL_OUTPUT_DIR
/// when it is set), else $DISTILL_OUTPUT_DIR/<command>.<format>, else "" for stdout.
std::string output_path(Command command, const RunConfig& cfg);

/// Runs the command and writes the report; diagnostics go to `err`.
int execute(Command command, const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace distill::cli
