// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The cellsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cellsim/cli.hpp"
#include "cellsim/config_io.hpp"

namespace cellsim::cli {
namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured run(const std::vector<std::string>& args, const char* env = nullptr) {
  std::ostringstream out, err;
  const int code = run_cli(args, env, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, FigureCommand) {
  const auto r = parse_args({"figure", "2", "--out", "out/"});
  ASSERT_TRUE(r.command);
  EXPECT_EQ(r.command->kind, Command::Kind::figure);
  EXPECT_EQ(r.command->figure_id, 2);
  EXPECT_EQ(r.command->out_dir, std::filesystem::path("out/"));
  EXPECT_EQ(r.command->scale, Scale::desk);
}

TEST(Cli, ValidateCommand) {
  const auto r = parse_args({"validate", "evt-cdf"});
  ASSERT_TRUE(r.command);
  EXPECT_EQ(r.command->kind, Command::Kind::validate);
  EXPECT_EQ(r.command->suite, validation::Suite::evt_cdf);
}

TEST(Cli, GlobalFlags) {
  const auto r = parse_args({"figure", "3", "--seed", "18446744073709551615", "--workers", "8", "--scale", "full"});
  ASSERT_TRUE(r.command);
  EXPECT_EQ(*r.command->seed, 18446744073709551615ULL);
  EXPECT_EQ(r.command->workers, 8u);
  EXPECT_EQ(r.command->scale, Scale::full);
}

TEST(Cli, UsageErrors) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{},
                                             {"figure", "5"},
                                             {"figure", "1", "--frobnicate"},
                                             {"validate", "everything"},
                                             {"run"},
                                             {"figure", "1", "--seed", "-4"},
                                             {"figure", "1", "--scale", "huge"}}) {
    const auto r = parse_args(args);
    EXPECT_FALSE(r.command);
    EXPECT_EQ(r.exit_code, kUsage);
    EXPECT_FALSE(r.message.empty());
  }
}

TEST(Cli, HelpIsNotAnError) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("validate"), std::string::npos);
}

TEST(Cli, MissingConfigFile) {
  const auto r = run({"run", "missing.cfg"});
  EXPECT_EQ(r.code, kConfig);
  EXPECT_NE(r.err.find("missing.cfg"), std::string::npos);
}

TEST(Cli, MalformedConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "cellsim_cli_bad.cfg";
  std::ofstream(path) << "[scenario]\ntrials_per_n = many\n";
  const auto r = run({"run", path.string()});
  EXPECT_EQ(r.code, kConfig);
  EXPECT_NE(r.err.find("trials_per_n"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, SeedPrecedence) {
  Command c;
  EXPECT_EQ(resolve_seed(c, nullptr, 5), 5u);
  EXPECT_EQ(resolve_seed(c, "17", 5), 17u);
  c.seed = 99;
  EXPECT_EQ(resolve_seed(c, "17", 5), 99u);
  c.seed.reset();
  EXPECT_THROW(resolve_seed(c, "seventeen", 5), ConfigError);
  EXPECT_EQ(run({"print-config"}, "x1").code, kConfig);
}

TEST(Cli, PrintConfigParsesBack) {
  const auto r = run({"print-config", "--figure", "4"}, "123");
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream in(r.out);
  const ScenarioConfig c = parse_config(in, "stdout");
  EXPECT_EQ(c.master_seed, 123u);
  EXPECT_EQ(c.model, ChannelModel::asymmetric);
}

TEST(Cli, RunWritesReproducibleOutputs) {
  const auto dir = std::filesystem::temp_directory_path() / "cellsim_cli_run";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ScenarioConfig c;
  c.name = "cli";
  c.n_grid = {2, 8};
  c.trials_per_n = 100;
  c.jp_enabled = true;
  {
    std::ofstream out(dir / "in.cfg");
    write_config(out, c);
  }
  const auto first = run({"run", (dir / "in.cfg").string(), "--out", (dir / "a").string(), "--seed", "31"}, "7");
  ASSERT_EQ(first.code, kOk) << first.err;
  EXPECT_EQ(read_config(dir / "a" / "cli.cfg").master_seed, 31u);
  const auto second = run({"run", (dir / "a" / "cli.cfg").string(), "--out", (dir / "b").string(), "--workers", "3"});
  ASSERT_EQ(second.code, kOk) << second.err;
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(dir / "a" / "cli.csv"), slurp(dir / "b" / "cli.csv"));
  EXPECT_NE(first.out.find("verdict delta_R"), std::string::npos);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace cellsim::cli
