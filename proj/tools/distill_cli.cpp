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

#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using distill::cli::Command;
using distill::cli::InlineOptions;

void add_shared_options(CLI::App* sub, InlineOptions& o) {
  sub->add_option("-c,--config", o.config_path, "JSON config file; inline flags override it");
  sub->add_option("--werner", o.werner, "Werner fidelity F of every input pair");
  sub->add_option("--pair", o.pair, "Weights of every input pair: p00,p01,p10,p11");
  sub->add_option("--state", o.state_path, "JSON file with the full distribution {n, probs}");
  sub->add_option("--protocol", o.protocol_path, "JSON protocol file (generators or matrix A)");
  sub->add_option("-g,--generators", o.generators, "Stabilizer generators as Pauli strings")->delimiter(',');
  sub->add_option("--matrix", o.matrix, "Symplectic matrix rows as bit strings")->delimiter(',');
  sub->add_option("--offset", o.offset, "Offset b for --matrix");
  sub->add_option("--n", o.n, "Number of input pairs");
  sub->add_option("--m", o.m, "Number of kept pairs");
  sub->add_option("--rounds", o.rounds, "Recurrence rounds");
  sub->add_option("--threshold", o.threshold, "Acceptance threshold on the corrected fidelity");
  sub->add_option("--format", o.format, "json or csv");
  sub->add_option("--seed", o.seed, "Seed for random instances");
  sub->add_option("--f-min", o.f_min, "Sweep grid start");
  sub->add_option("--f-max", o.f_max, "Sweep grid end");
  sub->add_option("--f-step", o.f_step, "Sweep grid step");
  sub->add_option("--instances", o.instances, "Random instances for verify / oracle-check");
  sub->add_option("-o,--output", o.output, "Output file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-diagonal entanglement distillation: permutation and stabilizer protocols"};
  app.require_subcommand(1);

  InlineOptions options;
  Command command = Command::kRunPerm;
  const std::pair<const char*, Command> commands[] = {
      {"run-perm", Command::kRunPerm},
      {"run-code", Command::kRunCode},
      {"verify", Command::kVerify},
      {"sweep", Command::kSweep},
      {"oracle-check", Command::kOracleCheck},
  };
  const char* help[] = {
      "Run a permutation protocol and report every parity branch",
      "Run a stabilizer protocol and report every syndrome",
      "Check that both engines agree on an instance or on random instances",
      "Iterate recurrence rounds over a grid of Werner inputs",
      "Compare the engines against dense density-matrix simulation",
  };
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, help[i]);
    add_shared_options(sub, options);
    const Command c = commands[i].second;
    sub->callback([&command, c] { command = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : distill::cli::kExitInvalid;
  }

  try {
    const auto cfg = distill::cli::resolve_config(options);
    return distill::cli::execute(command, cfg, std::cout, std::cerr);
  } catch (const distill::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return distill::cli::kExitInvalid;
  }
}
