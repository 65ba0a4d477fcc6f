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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cellsim/scenario.hpp"
#include "cellsim/validation.hpp"

namespace cellsim::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kUsage = 2,
  kConfig = 3,
  kRuntime = 4,
};

struct Command {
  enum class Kind { run, figure, validate, print_config };
  Kind kind = Kind::print_config;
  std::filesystem::path config_path;  ///< run
  int figure_id = 0;                  ///< figure; print-config with --figure
  validation::Suite suite = validation::Suite::evt_cdf;
  std::filesystem::path out_dir = "out";
  Scale scale = Scale::desk;
  std::optional<std::uint64_t> seed;
  unsigned workers = 0;
};

struct ParseResult {
  std::optional<Command> command;
  int exit_code = kOk;  ///< meaningful only when command is empty
  std::string message;  ///< help text or usage error
};

/// Parses the arguments after the program name. Never exits.
ParseResult parse_args(const std::vector<std::string>& args);

/// Seed precedence: --seed, then CELLSIM_SEED (\p env_seed, may be null),
/// then the configuration's own seed. A malformed CELLSIM_SEED is a
/// ConfigError.
std::uint64_t resolve_seed(const Command& command, const char* env_seed, std::uint64_t config_seed);

/// Runs a parsed command; returns the process exit code.
int execute(const Command& command, const char* env_seed, std::ostream& out, std::ostream& err);

/// parse_args + execute.
int run_cli(const std::vector<std::string>& args, const char* env_seed, std::ostream& out,
            std::ostream& err);

}  // namespace cellsim::cli
