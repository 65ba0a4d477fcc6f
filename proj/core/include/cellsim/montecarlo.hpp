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
#include <optional>
#include <vector>

#include "cellsim/asymptotics.hpp"
#include "cellsim/scenario.hpp"
#include "cellsim/scheduling.hpp"
#include "cellsim/statistics.hpp"

namespace cellsim {

struct SchedulerStats {
  SchedulerKind kind = SchedulerKind::max_sinr;
  Estimate rate;       ///< bits per channel use
  Estimate beta_norm;  ///< residual interference / noise, linear
};

/// Monte Carlo statistics at one user count.
struct CurvePoint {
  std::size_t n = 0;
  std::vector<SchedulerStats> schedulers;
  /// Mean per-drop rate(no_interference) - rate(max_sinr).
  Estimate delta_r;
  std::optional<Estimate> jp_rate;
  /// Analytic overlays; only set for the symmetric model and n >= 3.
  std::optional<asymptotics::Bounds> lemma1;
  std::optional<asymptotics::Bounds> lemma2;
  std::optional<asymptotics::Bounds> theorem1;
  /// Trials whose cluster channel was re-drawn because it was singular.
  std::size_t singular_redraws = 0;

  const SchedulerStats* find(SchedulerKind kind) const noexcept;
};

/// Stream id of trial \p trial at user count \p n.
std::uint64_t trial_stream_id(std::size_t n, std::size_t trial) noexcept;

/// Worker count used when 0 is requested: the hardware concurrency.
unsigned resolve_workers(unsigned requested) noexcept;

/// Runs config.trials_per_n independent drops with \p n users each; every
/// enabled scheduler sees the same drop. The result depends only on
/// (config, n), never on \p workers.
CurvePoint run_point(const ScenarioConfig& config, std::size_t n, unsigned workers = 1);

/// One CurvePoint per entry of config.n_grid.
std::vector<CurvePoint> run_scenario(const ScenarioConfig& config, unsigned workers = 1);

}  // namespace cellsim
