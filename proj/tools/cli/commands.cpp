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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "distill/dense_oracle.hpp"
#include "distill/equivalence.hpp"
#include "distill/pauli.hpp"
#include "distill/random.hpp"

namespace distill::cli {
namespace {

// Key order is kept so CSV columns follow the record layout.
using OJson = nlohmann::ordered_json;

OJson probs_json(std::span<const double> probs) {
  OJson out = OJson::array();
  for (double p : probs) out.push_back(report_value(p));
  return out;
}

OJson reorder(const Json& j) { return OJson::parse(j.dump()); }

std::string csv_cell(const OJson& v) {
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return format_probability(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ' ';
      out += csv_cell(e);
    }
    return out;
  }
  return v.dump();
}

std::string render(const RunConfig& cfg, OJson meta, const std::vector<OJson>& records) {
  if (cfg.format == OutputFormat::kJson) {
    meta["records"] = records;
    return meta.dump(2) + "\n";
  }
  std::string out;
  if (records.empty()) return out;
  bool first = true;
  for (const auto& [key, _] : records.front().items()) {
    if (!first) out += ',';
    out += key;
    first = false;
  }
  out += '\n';
  for (const auto& r : records) {
    first = true;
    for (const auto& [key, value] : r.items()) {
      if (!first) out += ',';
      out += csv_cell(value);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string joined_generators(std::span<const BitVector> gens) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ' ';
    out += to_pauli_string(g);
  }
  return out;
}

double threshold_for(const RunConfig& cfg, const BellDiagonalState& state) {
  return cfg.threshold.value_or(default_threshold(state));
}

void warn_low_input(const BellDiagonalState& state, std::vector<std::string>& warnings) {
  if (state.fidelity() < 0.25 && state.pairs() > 0) {
    warnings.push_back("input fidelity " + format_probability(state.fidelity()) +
                       " is below 1/4 (worse than a random Bell pair)");
  }
}

struct OracleComparison {
  double parity_discrepancy = 0.0;
  double syndrome_discrepancy = 0.0;
};

OracleComparison compare_with_oracle(const BellDiagonalState& state, const PermProtocol& proto) {
  OracleComparison out;
  const auto outcomes = run_permutation_protocol(state, proto);
  const auto dense = oracle::simulate_parity_measurement(state.permute(proto.a, proto.b), proto.m);
  std::map<std::uint64_t, const ProtocolOutcome*> by_t;
  for (const auto& o : outcomes) by_t[o.t.word()] = &o;
  std::map<std::uint64_t, const oracle::ParityBranch*> dense_by_t;
  for (const auto& b : dense) dense_by_t[b.t.word()] = &b;

  const std::uint64_t branches = std::uint64_t{1} << (proto.n - proto.m);
  for (std::uint64_t t = 0; t < branches; ++t) {
    const auto* engine = by_t.count(t) ? by_t[t] : nullptr;
    const auto* sim = dense_by_t.count(t) ? dense_by_t[t] : nullptr;
    const double p_engine = engine ? engine->probability : 0.0;
    const double p_sim = sim ? sim->probability : 0.0;
    out.parity_discrepancy = std::max(out.parity_discrepancy, std::abs(p_engine - p_sim));
    if (engine && sim) {
      const auto probs = engine->output.probs();
      if (probs.size() != sim->distribution.size()) {
        out.parity_discrepancy = std::max(out.parity_discrepancy, 1.0);
        continue;
      }
      for (std::size_t y = 0; y < probs.size(); ++y) {
        out.parity_discrepancy = std::max(out.parity_discrepancy, std::abs(probs[y] - sim->distribution[y]));
      }
      out.parity_discrepancy = std::max(out.parity_discrepancy, sim->max_off_diagonal);
    }
  }

  const StabilizerProtocol code = stabilizer_from_permutation(proto);
  const auto engine_syndromes = syndrome_distribution(state, code);
  const auto dense_syndromes =
      oracle::simulate_syndrome_measurement(state, code.generators).difference_distribution();
  if (engine_syndromes.size() != dense_syndromes.size()) {
    out.syndrome_discrepancy = 1.0;
  } else {
    for (std::size_t s = 0; s < engine_syndromes.size(); ++s) {
      out.syndrome_discrepancy = std::max(out.syndrome_discrepancy, std::abs(engine_syndromes[s] - dense_syndromes[s]));
    }
  }
  return out;
}

}  // namespace

const char* command_name(Command command) {
  switch (command) {
    case Command::kRunPerm: return "run-perm";
    case Command::kRunCode: return "run-code";
    case Command::kVerify: return "verify";
    case Command::kSweep: return "sweep";
    case Command::kOracleCheck: return "oracle-check";
  }
  return "unknown";
}

CommandResult cmd_run_perm(const RunConfig& cfg) {
  CommandResult result;
  const BellDiagonalState state = cfg.input_state();
  const PermProtocol proto = cfg.permutation_protocol();
  const double threshold = threshold_for(cfg, state);
  warn_low_input(state, result.warnings);

  std::vector<OJson> records;
  for (const auto& o : run_permutation_protocol(state, proto, threshold)) {
    OJson r;
    r["t"] = o.t.to_string();
    r["probability"] = report_value(o.probability);
    r["fidelity"] = report_value(o.fidelity);
    r["scaled_fidelity"] = report_value(o.scaled_fidelity);
    r["correction"] = o.correction.to_string();
    r["accepted"] = o.accepted;
    r["output"] = probs_json(o.output.probs());
    records.push_back(std::move(r));
  }
  OJson meta;
  meta["command"] = "run-perm";
  meta["n"] = proto.n;
  meta["m"] = proto.m;
  meta["threshold"] = report_value(threshold);
  meta["input_fidelity"] = report_value(state.fidelity());
  meta["protocol"] = reorder(perm_protocol_to_json(proto));
  result.text = render(cfg, std::move(meta), records);
  return result;
}

CommandResult cmd_run_code(const RunConfig& cfg) {
  CommandResult result;
  const BellDiagonalState state = cfg.input_state();
  const StabilizerProtocol proto = cfg.stabilizer_protocol();
  const double threshold = threshold_for(cfg, state);
  warn_low_input(state, result.warnings);

  std::vector<OJson> records;
  for (const auto& b : run_code_protocol(state, proto, threshold)) {
    OJson r;
    r["s"] = b.s.to_string();
    r["probability"] = report_value(b.probability);
    r["fidelity"] = report_value(b.fidelity);
    r["scaled_fidelity"] = report_value(b.scaled_fidelity);
    r["v"] = b.v.to_string();
    r["u"] = b.u.to_string();
    r["correction"] = b.correction.to_string();
    r["accepted"] = b.accepted;
    r["output"] = probs_json(b.output.probs());
    records.push_back(std::move(r));
  }
  OJson meta;
  meta["command"] = "run-code";
  meta["n"] = proto.n;
  meta["m"] = proto.m;
  meta["threshold"] = report_value(threshold);
  meta["input_fidelity"] = report_value(state.fidelity());
  meta["protocol"] = reorder(stabilizer_to_json(proto));
  result.text = render(cfg, std::move(meta), records);
  return result;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  CommandResult result;
  std::vector<OJson> records;
  OJson meta;
  meta["command"] = "verify";

  if (cfg.stabilizer || cfg.permutation) {
    const BellDiagonalState state = cfg.input_state();
    const StabilizerProtocol proto = cfg.stabilizer_protocol();
    const auto report = verify_equivalence(state, proto, cfg.threshold);
    for (const auto& b : report.branches) {
      OJson r;
      r["label"] = b.label.to_string();
      r["in_perm"] = b.in_perm;
      r["in_code"] = b.in_code;
      r["perm_probability"] = report_value(b.perm_probability);
      r["code_probability"] = report_value(b.code_probability);
      r["perm_fidelity"] = report_value(b.perm_fidelity);
      r["code_fidelity"] = report_value(b.code_fidelity);
      r["output_discrepancy"] = report_value(b.output_discrepancy);
      r["coset_match"] = b.coset_match;
      r["completion_consistent"] = b.completion_consistent;
      records.push_back(std::move(r));
    }
    meta["protocol"] = reorder(stabilizer_to_json(proto));
    meta["holds"] = report.holds();
    meta["subspaces_match"] = report.subspaces_match;
    meta["branches_match"] = report.branches_match;
    meta["coset_match"] = report.coset_match;
    meta["completion_consistent"] = report.completion_consistent;
    meta["max_discrepancy"] = report_value(report.max_discrepancy);
    if (!report.holds()) result.exit_code = kExitMismatch;
  } else {
    const std::size_t count = cfg.instances ? cfg.instances : kDefaultVerifyInstances;
    std::size_t passed = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng = stream(cfg.seed, i);
      const std::size_t n = 2 + rng() % 3;
      const std::size_t m = rng() % n;
      StabilizerProtocol proto{n, m, random_isotropic(n, n - m, rng)};
      const BellDiagonalState state = random_state(n, rng);
      const auto report = verify_equivalence(state, proto);
      passed += report.holds() ? 1 : 0;
      worst = std::max(worst, report.max_discrepancy);
      OJson r;
      r["instance"] = i;
      r["n"] = n;
      r["m"] = m;
      r["generators"] = joined_generators(proto.generators);
      r["holds"] = report.holds();
      r["max_discrepancy"] = report_value(report.max_discrepancy);
      records.push_back(std::move(r));
    }
    meta["seed"] = cfg.seed;
    meta["instances"] = count;
    meta["passed"] = passed;
    meta["max_discrepancy"] = report_value(worst);
    if (passed != count) result.exit_code = kExitMismatch;
  }
  result.text = render(cfg, std::move(meta), records);
  return result;
}

CommandResult cmd_sweep(const RunConfig& cfg) {
  CommandResult result;
  const PermProtocol proto = cfg.permutation_protocol();
  std::vector<PairDistribution> inputs;
  if (cfg.pair) {
    inputs.push_back(*cfg.pair);
  } else if (cfg.werner) {
    inputs.push_back(werner(*cfg.werner));
  } else {
    for (double f : cfg.grid.points()) inputs.push_back(werner(std::min(f, 1.0)));
  }

  std::vector<OJson> records;
  for (const auto& pair : inputs) {
    const double f_in = pair.fidelity();
    if (f_in < 0.25) {
      result.warnings.push_back("F_in = " + format_probability(f_in) + " is below 1/4");
    }
    const auto rounds = recurrence_sweep(pair, proto, cfg.rounds, cfg.threshold);
    if (rounds.size() < cfg.rounds) {
      result.warnings.push_back("F_in = " + format_probability(f_in) + ": no branch accepted in round " +
                                std::to_string(rounds.size()) + ", sweep stopped");
    }
    for (const auto& r : rounds) {
      OJson row;
      row["f_in"] = report_value(f_in);
      row["round"] = r.round;
      row["f_out"] = report_value(r.fidelity);
      row["yield"] = report_value(r.yield);
      row["accept_probability"] = report_value(r.accept_probability);
      records.push_back(std::move(row));
    }
  }
  OJson meta;
  meta["command"] = "sweep";
  meta["n"] = proto.n;
  meta["rounds"] = cfg.rounds;
  meta["protocol"] = reorder(perm_protocol_to_json(proto));
  result.text = render(cfg, std::move(meta), records);
  return result;
}

CommandResult cmd_oracle_check(const RunConfig& cfg) {
  CommandResult result;
  std::vector<OJson> records;
  double worst = 0.0;

  auto record = [&](std::size_t index, const BellDiagonalState& state, const PermProtocol& proto) {
    const OracleComparison c = compare_with_oracle(state, proto);
    const bool match = c.parity_discrepancy <= kOracleTolerance && c.syndrome_discrepancy <= kOracleTolerance;
    worst = std::max({worst, c.parity_discrepancy, c.syndrome_discrepancy});
    OJson r;
    r["instance"] = index;
    r["n"] = proto.n;
    r["m"] = proto.m;
    r["parity_discrepancy"] = report_value(c.parity_discrepancy);
    r["syndrome_discrepancy"] = report_value(c.syndrome_discrepancy);
    r["match"] = match;
    records.push_back(std::move(r));
    return match;
  };

  std::size_t passed = 0;
  std::size_t count = 0;
  if (cfg.stabilizer || cfg.permutation) {
    count = 1;
    passed += record(0, cfg.input_state(), cfg.permutation_protocol()) ? 1 : 0;
  } else {
    count = cfg.instances ? cfg.instances : kDefaultOracleInstances;
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng = stream(cfg.seed, i);
      PermProtocol proto;
      proto.n = 2 + rng() % 2;
      proto.m = rng() % proto.n;
      proto.a = random_symplectic(proto.n, rng);
      proto.b = random_vector(2 * proto.n, rng);
      const BellDiagonalState state = random_state(proto.n, rng);
      passed += record(i, state, proto) ? 1 : 0;
    }
  }
  OJson meta;
  meta["command"] = "oracle-check";
  meta["seed"] = cfg.seed;
  meta["instances"] = count;
  meta["passed"] = passed;
  meta["tolerance"] = kOracleTolerance;
  meta["max_discrepancy"] = report_value(worst);
  if (passed != count) result.exit_code = kExitMismatch;
  result.text = render(cfg, std::move(meta), records);
  return result;
}

CommandResult run_command(Command command, const RunConfig& cfg) {
  try {
    cfg.validate(command);
    switch (command) {
      case Command::kRunPerm: return cmd_run_perm(cfg);
      case Command::kRunCode: return cmd_run_code(cfg);
      case Command::kVerify: return cmd_verify(cfg);
      case Command::kSweep: return cmd_sweep(cfg);
      case Command::kOracleCheck: return cmd_oracle_check(cfg);
    }
  } catch (const ConfigError& e) {
    return CommandResult{kExitInvalid, "", {e.what()}};
  } catch (const std::invalid_argument& e) {
    return CommandResult{kExitInvalid, "", {e.what()}};
  }
  return CommandResult{kExitInvalid, "", {"unknown command"}};
}

std::string output_path(Command command, const RunConfig& cfg) {
  const char* env = std::getenv(kOutputDirEnv);
  const std::filesystem::path dir = (env && *env) ? env : "";
  if (!cfg.output.empty()) {
    const std::filesystem::path p(cfg.output);
    return (p.is_relative() && !dir.empty() ? dir / p : p).string();
  }
  if (dir.empty()) return "";
  const char* ext = cfg.format == OutputFormat::kJson ? ".json" : ".csv";
  return (dir / (std::string(command_name(command)) + ext)).string();
}

int execute(Command command, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CommandResult result = run_command(command, cfg);
  const char* prefix = result.exit_code == kExitInvalid ? "error: " : "warning: ";
  for (const auto& w : result.warnings) err << prefix << w << '\n';
  if (result.exit_code == kExitInvalid) return result.exit_code;

  const std::string path = output_path(command, cfg);
  if (path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << path << '\n';
      return kExitInvalid;
    }
    file << result.text;
  }
  if (result.exit_code == kExitMismatch) err << command_name(command) << ": mismatch detected\n";
  return result.exit_code;
}

}  // namespace distill::cli
