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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/run_config.hpp"

namespace distill::cli {
namespace {

RunConfig resolved(InlineOptions o) { return resolve_config(o); }

InlineOptions bcnot_werner() {
  InlineOptions o;
  o.werner = 0.75;
  o.matrix = {"1100", "0100", "0010", "0011"};
  o.m = 1;
  return o;
}

InlineOptions zz_werner() {
  InlineOptions o;
  o.werner = 0.75;
  o.generators = {"ZZ"};
  return o;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// Every CSV cell equals the JSON record field it came from.
void expect_same_records(const std::string& json_text, const std::string& csv_text) {
  const auto json = Json::parse(json_text);
  const auto rows = parse_csv(csv_text);
  const auto& records = json.at("records");
  ASSERT_EQ(rows.size(), records.size() + 1);
  const auto& header = rows[0];
  for (std::size_t r = 0; r < records.size(); ++r) {
    ASSERT_EQ(rows[r + 1].size(), header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      const Json& v = records[r].at(header[c]);
      const std::string& cell = rows[r + 1][c];
      if (v.is_boolean()) {
        EXPECT_EQ(cell, v.get<bool>() ? "true" : "false");
      } else if (v.is_string()) {
        EXPECT_EQ(cell, v.get<std::string>());
      } else if (v.is_number()) {
        EXPECT_EQ(std::stod(cell), v.get<double>()) << header[c];
      } else if (v.is_array()) {
        std::stringstream cs(cell);
        for (const auto& e : v) {
          double x = 0;
          cs >> x;
          EXPECT_EQ(x, e.get<double>());
        }
      }
    }
  }
}

TEST(Config, RequiresOneInputAndProtocol) {
  auto o = bcnot_werner();
  o.pair = "0.7,0.1,0.1,0.1";
  EXPECT_THROW(resolved(o).validate(Command::kRunPerm), ConfigError);

  InlineOptions missing;
  missing.werner = 0.8;
  EXPECT_THROW(resolved(missing).validate(Command::kRunPerm), ConfigError);

  auto no_input = bcnot_werner();
  no_input.werner.reset();
  EXPECT_THROW(resolved(no_input).validate(Command::kRunPerm), ConfigError);
}

TEST(Config, RejectsBadValues) {
  auto o = bcnot_werner();
  o.matrix = {"1100", "0100", "0010", "0010"};
  try {
    resolved(o);
    FAIL() << "expected rejection";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("AᵀPA = P"), std::string::npos);
  }
  EXPECT_THROW(parse_pair("0.5,0.5"), ConfigError);
  EXPECT_THROW(parse_pair("0.5,0.5,0.5,x"), ConfigError);
  EXPECT_THROW(parse_pair("0.5,0.5,0.5,0.5"), ConfigError);
  EXPECT_THROW(parse_format("xml"), ConfigError);
  auto g = zz_werner();
  g.generators = {"ZQ"};
  EXPECT_THROW(resolved(g), ConfigError);
  auto w = zz_werner();
  w.werner = 1.2;
  EXPECT_EQ(run_command(Command::kRunPerm, resolved(w)).exit_code, kExitInvalid);
}

TEST(Config, FileWithInlineOverride) {
  const auto path = std::filesystem::temp_directory_path() / "distill_cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"input": {"werner": 0.9}, "protocol": {"generators": ["ZZ"]}, "format": "csv", "threshold": 0.5})";
  }
  InlineOptions o;
  o.config_path = path.string();
  auto cfg = resolved(o);
  EXPECT_EQ(cfg.werner, 0.9);
  EXPECT_EQ(cfg.format, OutputFormat::kCsv);
  EXPECT_EQ(cfg.threshold, 0.5);
  ASSERT_TRUE(cfg.stabilizer.has_value());

  o.pair = "0.7,0.1,0.1,0.1";
  cfg = resolved(o);
  EXPECT_FALSE(cfg.werner.has_value());
  ASSERT_TRUE(cfg.pair.has_value());
  EXPECT_NO_THROW(cfg.validate(Command::kRunCode));
  std::filesystem::remove(path);
}

TEST(RunPerm, WernerBcnotRow) {
  const auto result = run_command(Command::kRunPerm, resolved(bcnot_werner()));
  ASSERT_EQ(result.exit_code, kExitOk);
  const auto json = Json::parse(result.text);
  const auto& t0 = json["records"][0];
  EXPECT_EQ(t0["t"], "0");
  EXPECT_NEAR(t0["fidelity"].get<double>(), 41.0 / 52.0, 1e-12);
  EXPECT_NEAR(t0["probability"].get<double>(), 13.0 / 18.0, 1e-12);
  EXPECT_EQ(t0["accepted"], true);
}

TEST(RunCode, AcceptsPermutationInput) {
  const auto result = run_command(Command::kRunCode, resolved(bcnot_werner()));
  ASSERT_EQ(result.exit_code, kExitOk);
  const auto json = Json::parse(result.text);
  EXPECT_EQ(json["protocol"]["generators"][0], "ZZ");
  EXPECT_NEAR(json["records"][0]["fidelity"].get<double>(), 41.0 / 52.0, 1e-12);
}

TEST(Verify, ZZHolds) {
  const auto result = run_command(Command::kVerify, resolved(zz_werner()));
  ASSERT_EQ(result.exit_code, kExitOk);
  const auto json = Json::parse(result.text);
  EXPECT_EQ(json["holds"], true);
  EXPECT_LE(json["max_discrepancy"].get<double>(), 1e-12);
}

TEST(Verify, RandomInstances) {
  InlineOptions o;
  o.instances = 30;
  o.seed = 9;
  const auto result = run_command(Command::kVerify, resolved(o));
  EXPECT_EQ(result.exit_code, kExitOk);
  EXPECT_EQ(Json::parse(result.text)["passed"], 30);
}

TEST(Sweep, DefaultGridImproves) {
  InlineOptions o;
  o.generators = {"ZZ"};
  const auto result = run_command(Command::kSweep, resolved(o));
  ASSERT_EQ(result.exit_code, kExitOk);
  const auto rows = Json::parse(result.text)["records"];
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_NEAR(rows[i]["f_in"].get<double>(), 0.55 + 0.05 * static_cast<double>(i), 1e-12);
    EXPECT_EQ(rows[i]["round"], 1);
    EXPECT_GT(rows[i]["f_out"].get<double>(), rows[i]["f_in"].get<double>());
  }
}

TEST(Sweep, NeedsSingleKeptPair) {
  InlineOptions o;
  o.generators = {"ZZI"};
  EXPECT_EQ(run_command(Command::kSweep, resolved(o)).exit_code, kExitInvalid);
}

TEST(OracleCheck, SizeCap) {
  InlineOptions o;
  o.werner = 0.9;
  o.generators = {"ZZIII", "IZZII", "IIZZI", "IIIZZ"};
  const auto result = run_command(Command::kOracleCheck, resolved(o));
  EXPECT_EQ(result.exit_code, kExitInvalid);
}

TEST(OracleCheck, SingleInstance) {
  const auto result = run_command(Command::kOracleCheck, resolved(zz_werner()));
  EXPECT_EQ(result.exit_code, kExitOk);
}

TEST(Output, DeterministicAcrossRuns) {
  const Command commands[] = {Command::kRunPerm, Command::kRunCode, Command::kVerify, Command::kSweep,
                              Command::kOracleCheck};
  for (auto format : {"json", "csv"}) {
    for (Command c : commands) {
      InlineOptions o = c == Command::kSweep ? InlineOptions{} : zz_werner();
      if (c == Command::kSweep) o.generators = {"ZZ"};
      o.format = format;
      o.rounds = 2;
      const auto a = run_command(c, resolved(o));
      const auto b = run_command(c, resolved(o));
      EXPECT_EQ(a.text, b.text) << command_name(c);
      EXPECT_FALSE(a.text.empty());
    }
    InlineOptions random;
    random.seed = 17;
    random.instances = 12;
    random.format = format;
    EXPECT_EQ(run_command(Command::kOracleCheck, resolved(random)).text,
              run_command(Command::kOracleCheck, resolved(random)).text);
    EXPECT_EQ(run_command(Command::kVerify, resolved(random)).text,
              run_command(Command::kVerify, resolved(random)).text);
  }
}

TEST(Output, CsvAndJsonCarrySameRecords) {
  std::vector<std::pair<Command, InlineOptions>> cases{
      {Command::kRunPerm, bcnot_werner()}, {Command::kRunCode, zz_werner()}, {Command::kVerify, zz_werner()}};
  InlineOptions sweep;
  sweep.generators = {"ZZ"};
  sweep.rounds = 2;
  cases.emplace_back(Command::kSweep, sweep);
  InlineOptions random;
  random.instances = 10;
  cases.emplace_back(Command::kVerify, random);
  cases.emplace_back(Command::kOracleCheck, random);
  for (auto [command, o] : cases) {
    o.format = "json";
    const auto json = run_command(command, resolved(o));
    o.format = "csv";
    const auto csv = run_command(command, resolved(o));
    expect_same_records(json.text, csv.text);
  }
}

TEST(Output, EnvironmentDirectory) {
  const auto dir = std::filesystem::temp_directory_path() / "distill_cli_out";
  std::filesystem::create_directories(dir);
  ::setenv(kOutputDirEnv, dir.string().c_str(), 1);
  auto cfg = resolved(zz_werner());
  EXPECT_EQ(output_path(Command::kRunCode, cfg), (dir / "run-code.json").string());
  cfg.output = "custom.json";
  EXPECT_EQ(output_path(Command::kRunCode, cfg), (dir / "custom.json").string());
  cfg.output = "/tmp/abs.json";
  EXPECT_EQ(output_path(Command::kRunCode, cfg), "/tmp/abs.json");

  cfg.output.clear();
  std::ostringstream out, err;
  EXPECT_EQ(execute(Command::kRunCode, cfg, out, err), kExitOk);
  EXPECT_TRUE(out.str().empty());
  std::ifstream written(dir / "run-code.json");
  std::stringstream content;
  content << written.rdbuf();
  EXPECT_EQ(content.str(), run_command(Command::kRunCode, cfg).text);

  ::unsetenv(kOutputDirEnv);
  EXPECT_EQ(output_path(Command::kRunCode, cfg), "");
  std::filesystem::remove_all(dir);
}

TEST(Output, LowFidelityWarning) {
  auto o = zz_werner();
  o.werner = 0.2;
  const auto result = run_command(Command::kRunPerm, resolved(o));
  EXPECT_EQ(result.exit_code, kExitOk);
  ASSERT_FALSE(result.warnings.empty());
}

}  // namespace
}  // namespace distill::cli
