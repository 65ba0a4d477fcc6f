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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cellsim/channel_model.hpp"
#include "cellsim/scheduling.hpp"

namespace cellsim {

/// Invalid scenario description. what() names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full description of one experiment. Defaults are the reference
/// deployment: 40 dBm per BS, -101 dBm noise, 2 km cells, users at 1 km in
/// the symmetric model, Hata urban path loss, six first-ring interferers.
struct ScenarioConfig {
  std::string name = "scenario";
  ChannelModel model = ChannelModel::symmetric;
  std::vector<std::size_t> n_grid;
  std::size_t trials_per_n = 20000;
  std::uint64_t master_seed = 1;

  double power_dbm = 40.0;
  double noise_dbm = -101.0;

  std::size_t interferers = 6;
  double cell_radius_km = 2.0;
  double symmetric_radius_km = 1.0;
  /// Per-interferer received-power multipliers; empty means all 1.
  std::vector<double> interferer_gain_scale;

  PathLossSpec path_loss = HataPathLoss{};

  /// Each at most once; CSV columns follow this order.
  std::vector<SchedulerKind> schedulers = {kAllSchedulers.begin(), kAllSchedulers.end()};
  bool jp_enabled = false;

  ScenarioConfig();

  /// Throws ConfigError naming the first invalid field.
  void validate() const;

  NetworkGeometry geometry() const;
  LinkBudget link_budget() const;
  bool has_scheduler(SchedulerKind kind) const noexcept;
};

/// {2^first, ..., 2^last}
std::vector<std::size_t> geometric_grid(unsigned first_exponent, unsigned last_exponent);

enum class Scale { desk, full };

Scale parse_scale(const std::string& text);
std::string to_string(Scale scale);

/// Scenario that produces the data of figure \p id (1..4). Figures 1 and 2
/// share the symmetric scenario and seed, figures 3 and 4 the asymmetric one;
/// they differ only in the reported columns.
ScenarioConfig figure_scenario(int id, Scale scale);

}  // namespace cellsim
