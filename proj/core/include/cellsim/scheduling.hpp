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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "cellsim/channel_model.hpp"

namespace cellsim {

enum class SchedulerKind {
  max_sinr,
  max_gain,
  /// Strongest direct link with all interference removed (single-cell bound).
  no_interference,
  /// Best SINR when only interference from the cooperation cluster is
  /// removed; the bound matched against joint processing.
  cluster_free,
};

inline constexpr std::array<SchedulerKind, 4> kAllSchedulers = {
    SchedulerKind::max_sinr, SchedulerKind::max_gain, SchedulerKind::no_interference,
    SchedulerKind::cluster_free};

std::string_view to_string(SchedulerKind kind) noexcept;
std::optional<SchedulerKind> parse_scheduler_kind(std::string_view text) noexcept;

struct SchedulerDecision {
  std::size_t selected_index = 0;
  double sinr = 0.0;
  double rate_bpcu = 0.0;
  /// Interference entering the decision's SINR: beta for max_sinr/max_gain,
  /// beta_out_of_cluster for cluster_free and 0 for no_interference.
  double residual_beta = 0.0;
};

/// alpha / (1 + beta). Throws std::invalid_argument on negative input.
double sinr(double alpha, double beta);

/// log2(1 + sinr), bits per channel use.
double rate_bits(double sinr) noexcept;

/// Single-cell user selection. Ties go to the lowest index.
SchedulerDecision schedule(std::span<const UserSample> users, SchedulerKind kind);
SchedulerDecision schedule(const Drop& drop, SchedulerKind kind);

/// rate(no_interference) - rate(max_sinr) on one drop; never negative.
double rate_gap(const SchedulerDecision& decision_up, const SchedulerDecision& decision_sinr) noexcept;

}  // namespace cellsim
