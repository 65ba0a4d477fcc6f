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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cellsim/scenario.hpp"

namespace cellsim {

// Scenario files are flat INI text:
//
//   [scenario]    name, model, n_grid, trials_per_n, master_seed
//   [link]        power_dbm, noise_dbm
//   [geometry]    interferers, cell_radius_km, symmetric_radius_km,
//                 interferer_gain_scale
//   [path_loss]   model = hata (offset_db, slope_db) | generic (lambda, epsilon)
//   [schedulers]  enabled, jp_enabled
//   [meta]        artifact_version (written, ignored on read)
//
// Lists are comma separated. Omitted keys keep their defaults; unknown
// sections or keys are errors.

/// Parses and validates a scenario. Throws ConfigError; \p source_name is
/// used in messages.
ScenarioConfig parse_config(std::istream& in, const std::string& source_name);

/// Reads a scenario file. A missing or unreadable file is a ConfigError
/// naming the path.
ScenarioConfig read_config(const std::filesystem::path& path);

/// Writes every field, defaults included, with round-trip precision.
/// parse_config(write_config(c)) == c.
void write_config(std::ostream& out, const ScenarioConfig& config);
std::string to_config_string(const ScenarioConfig& config);

}  // namespace cellsim
