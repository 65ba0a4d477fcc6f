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

#include "cellsim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include <CLI11.hpp>

#include "cellsim/config_io.hpp"
#include "cellsim/convergence.hpp"
#include "cellsim/csv_writer.hpp"
#include "cellsim/montecarlo.hpp"

namespace cellsim::cli {

namespace {

std::optional<std::uint64_t> parse_u64(const std::string& text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

void print_verdicts(const ScenarioConfig& config, std::span<const CurvePoint> curve, std::ostream& out) {
  std::vector<std::pair<CurveQuantity, QuantityScale>> quantities = {
      {CurveQuantity::delta_r(), QuantityScale::rate_gap}};
  for (SchedulerKind k : {SchedulerKind::max_sinr, SchedulerKind::max_gain}) {
    if (config.has_scheduler(k)) quantities.push_back({CurveQuantity::beta_norm(k), QuantityScale::interference});
  }
  for (const auto& [q, scale] : quantities) {
    out << "verdict " << q.name() << ": ";
    try {
      const auto v = convergence_verdict(extract_series(curve, q), scale, q.name());
      out << to_string(v.verdict) << " (limit " << v.limit_estimate.mean << " +- " << v.limit_estimate.ci
          << ")\n";
    } catch (const std::invalid_argument& e) {
      out << "n/a (" << e.what() << ")\n";
    }
  }
}

int run_and_write(const ScenarioConfig& config, const Command& command, std::ostream& out) {
  const auto curve = run_scenario(config, command.workers);
  const OutputPaths paths = write_scenario_outputs(command.out_dir, config, curve);
  out << "wrote " << paths.csv.string() << "\n"
      << "wrote " << paths.metadata.string() << "\n";
  print_verdicts(config, curve, out);
  return kOk;
}

}  // namespace

ParseResult parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Multicell downlink scheduling simulator", "cellsim"};
  app.set_version_flag("--version", CELLSIM_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Command cmd;
  std::string seed_text;
  std::string scale_text = "desk";
  app.add_option("--seed", seed_text, "Master seed (overrides CELLSIM_SEED and the config)");
  app.add_option("--workers", cmd.workers, "Worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  app.add_option("--scale", scale_text, "Problem size for figures")->check(CLI::IsMember({"desk", "full"}));

  auto* run = app.add_subcommand("run", "Run the scenario described by a config file");
  run->add_option("config", cmd.config_path, "Config file")->required();
  run->add_option("--out", cmd.out_dir, "Output directory");

  auto* figure = app.add_subcommand("figure", "Produce the data of figure 1-4");
  figure->add_option("id", cmd.figure_id, "Figure id")->required()->check(CLI::Range(1, 4));
  figure->add_option("--out", cmd.out_dir, "Output directory");

  std::string suite_text;
  auto* validate = app.add_subcommand("validate", "Run a validation suite");
  validate->add_option("suite", suite_text, "symmetric-bounds | asymmetric-limits | evt-cdf | jp-sanity")
      ->required()
      ->check(CLI::IsMember({"symmetric-bounds", "asymmetric-limits", "evt-cdf", "jp-sanity"}));

  auto* print = app.add_subcommand("print-config", "Print the default (or a figure's) scenario");
  print->add_option("--figure", cmd.figure_id, "Figure id")->check(CLI::Range(1, 4));

  ParseResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.message = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.message = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::CallForVersion&) {
    result.message = std::string(CELLSIM_VERSION) + "\n";
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kUsage;
    result.message = std::string("usage error: ") + e.what() + "\nRun with --help for more information.\n";
    return result;
  }

  if (!seed_text.empty()) {
    cmd.seed = parse_u64(seed_text);
    if (!cmd.seed) {
      result.exit_code = kUsage;
      result.message = "usage error: --seed expects an unsigned 64-bit integer, got '" + seed_text + "'\n";
      return result;
    }
  }
  cmd.scale = parse_scale(scale_text);
  if (run->parsed()) {
    cmd.kind = Command::Kind::run;
  } else if (figure->parsed()) {
    cmd.kind = Command::Kind::figure;
  } else if (validate->parsed()) {
    cmd.kind = Command::Kind::validate;
    cmd.suite = validation::parse_suite(suite_text);
  } else {
    cmd.kind = Command::Kind::print_config;
  }
  result.command = cmd;
  return result;
}

std::uint64_t resolve_seed(const Command& command, const char* env_seed, std::uint64_t config_seed) {
  if (command.seed) return *command.seed;
  if (env_seed != nullptr) {
    const auto v = parse_u64(env_seed);
    if (!v) throw ConfigError(std::string("CELLSIM_SEED must be an unsigned 64-bit integer, got '") + env_seed + "'");
    return *v;
  }
  return config_seed;
}

int execute(const Command& command, const char* env_seed, std::ostream& out, std::ostream& err) {
  try {
    switch (command.kind) {
      case Command::Kind::run: {
        ScenarioConfig config = read_config(command.config_path);
        config.master_seed = resolve_seed(command, env_seed, config.master_seed);
        config.validate();
        return run_and_write(config, command, out);
      }
      case Command::Kind::figure: {
        ScenarioConfig config = figure_scenario(command.figure_id, command.scale);
        config.master_seed = resolve_seed(command, env_seed, config.master_seed);
        return run_and_write(config, command, out);
      }
      case Command::Kind::print_config: {
        ScenarioConfig config;
        if (command.figure_id != 0) {
          config = figure_scenario(command.figure_id, command.scale);
        } else {
          config.n_grid = geometric_grid(4, 14);
        }
        config.master_seed = resolve_seed(command, env_seed, config.master_seed);
        config.validate();
        write_config(out, config);
        return kOk;
      }
      case Command::Kind::validate: {
        validation::Settings settings;
        settings.workers = command.workers;
        settings.seed = resolve_seed(command, env_seed, settings.seed);
        const auto results = validation::run_suite(command.suite, settings, out);
        const auto failed = std::count_if(results.begin(), results.end(),
                                          [](const auto& r) { return !r.passed; });
        out << "suite " << validation::to_string(command.suite) << ": " << results.size() - failed << "/"
            << results.size() << " passed\n";
        return failed == 0 ? kOk : kValidationFailed;
      }
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << "\n";
    return kRuntime;
  }
  return kRuntime;
}

int run_cli(const std::vector<std::string>& args, const char* env_seed, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_args(args);
  if (!parsed.command) {
    (parsed.exit_code == kOk ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  return execute(*parsed.command, env_seed, out, err);
}

}  // namespace cellsim::cli
