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
#include <span>
#include <string>
#include <vector>

#include "cellsim/montecarlo.hpp"
#include "cellsim/scenario.hpp"

namespace cellsim {

/// Column names for a scenario: n; per enabled scheduler <kind>_mean_rate,
/// <kind>_rate_ci, <kind>_mean_beta_norm, <kind>_beta_ci; then delta_R,
/// delta_R_ci, jp_rate, jp_rate_ci, lemma1_lo, lemma1_hi, lemma2_lo,
/// lemma2_hi, thm1_lo, thm1_hi.
std::vector<std::string> csv_columns(const ScenarioConfig& config);

/// Header plus one row per point; numbers use 9 significant digits and
/// absent values are empty fields.
void write_curve_csv(std::ostream& out, const ScenarioConfig& config,
                     std::span<const CurvePoint> curve);

struct OutputPaths {
  std::filesystem::path csv;
  std::filesystem::path metadata;
};

/// Writes <dir>/<name>.csv and the resolved scenario next to it as
/// <dir>/<name>.cfg. Creates \p dir when needed.
OutputPaths write_scenario_outputs(const std::filesystem::path& dir, const ScenarioConfig& config,
                                   std::span<const CurvePoint> curve);

}  // namespace cellsim
