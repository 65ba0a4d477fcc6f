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

#include "cellsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

namespace cellsim {

namespace {

void require(bool condition, const std::string& field, const std::string& message) {
  if (!condition) throw ConfigError("config field '" + field + "': " + message);
}

constexpr std::uint64_t kSymmetricFigureSeed = 20110601;
constexpr std::uint64_t kAsymmetricFigureSeed = 20110602;

}  // namespace

ScenarioConfig::ScenarioConfig() : n_grid(geometric_grid(4, 14)) {}

void ScenarioConfig::validate() const {
  require(!name.empty() && name.find_first_of("/\\ \t") == std::string::npos, "scenario.name",
          "must be a non-empty file-name-safe token");
  require(!n_grid.empty(), "scenario.n_grid", "must list at least one user count");
  require(n_grid.front() >= 1, "scenario.n_grid", "user counts must be >= 1");
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    require(n_grid[i] > n_grid[i - 1], "scenario.n_grid", "must be strictly increasing");
  }
  require(trials_per_n >= 1, "scenario.trials_per_n", "must be >= 1");
  require(std::isfinite(power_dbm), "link.power_dbm", "must be finite");
  require(std::isfinite(noise_dbm), "link.noise_dbm", "must be finite");
  require(interferers >= 1, "geometry.interferers", "must be >= 1");
  require(cell_radius_km > 0.0 && std::isfinite(cell_radius_km), "geometry.cell_radius_km",
          "must be positive");
  require(symmetric_radius_km > 0.0 && symmetric_radius_km <= cell_radius_km,
          "geometry.symmetric_radius_km", "must lie in (0, cell_radius_km]");
  require(interferer_gain_scale.empty() || interferer_gain_scale.size() == interferers,
          "geometry.interferer_gain_scale", "must have one entry per interferer");
  for (double s : interferer_gain_scale) {
    require(std::isfinite(s) && s >= 0.0, "geometry.interferer_gain_scale",
            "entries must be finite and >= 0");
  }
  try {
    validate_path_loss(path_loss);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config section 'path_loss': ") + e.what());
  }
  require(!schedulers.empty(), "schedulers.enabled", "must name at least one scheduler");
  for (std::size_t i = 0; i < schedulers.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      require(schedulers[i] != schedulers[j], "schedulers.enabled",
              "lists " + std::string(to_string(schedulers[i])) + " twice");
    }
  }
  if (jp_enabled) {
    require(interferers == 6, "schedulers.jp_enabled",
            "joint processing needs the six-interferer first ring");
    require(interferer_gain_scale.empty(), "schedulers.jp_enabled",
            "joint processing is not defined with interferer_gain_scale");
  }
}

NetworkGeometry ScenarioConfig::geometry() const {
  return first_ring_geometry(cell_radius_km, interferers, symmetric_radius_km);
}

LinkBudget ScenarioConfig::link_budget() const {
  return LinkBudget{power_dbm, noise_dbm, interferer_gain_scale};
}

bool ScenarioConfig::has_scheduler(SchedulerKind kind) const noexcept {
  return std::find(schedulers.begin(), schedulers.end(), kind) != schedulers.end();
}

std::vector<std::size_t> geometric_grid(unsigned first_exponent, unsigned last_exponent) {
  std::vector<std::size_t> grid;
  for (unsigned e = first_exponent; e <= last_exponent; ++e) grid.push_back(std::size_t{1} << e);
  return grid;
}

Scale parse_scale(const std::string& text) {
  if (text == "desk") return Scale::desk;
  if (text == "full") return Scale::full;
  throw ConfigError("scale must be 'desk' or 'full', got '" + text + "'");
}

std::string to_string(Scale scale) { return scale == Scale::desk ? "desk" : "full"; }

ScenarioConfig figure_scenario(int id, Scale scale) {
  if (id < 1 || id > 4) throw ConfigError("figure id must be 1, 2, 3 or 4");
  ScenarioConfig config;
  config.name = "figure" + std::to_string(id);
  const bool symmetric = id <= 2;
  config.model = symmetric ? ChannelModel::symmetric : ChannelModel::asymmetric;
  config.master_seed = symmetric ? kSymmetricFigureSeed : kAsymmetricFigureSeed;
  if (scale == Scale::desk) {
    config.n_grid = geometric_grid(4, 14);
    config.trials_per_n = 20000;
  } else {
    config.n_grid = geometric_grid(4, 17);
    config.trials_per_n = 100000;
  }
  const bool rates = id == 1 || id == 3;
  if (rates) {
    config.schedulers = {SchedulerKind::max_sinr, SchedulerKind::max_gain,
                         SchedulerKind::cluster_free};
    config.jp_enabled = true;
  } else {
    config.schedulers = {SchedulerKind::max_sinr, SchedulerKind::max_gain};
    config.jp_enabled = false;
  }
  return config;
}

}  // namespace cellsim
