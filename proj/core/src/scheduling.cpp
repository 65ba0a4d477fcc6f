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

#include "cellsim/scheduling.hpp"

#include <cmath>
#include <stdexcept>

namespace cellsim {

std::string_view to_string(SchedulerKind kind) noexcept {
  switch (kind) {
    case SchedulerKind::max_sinr: return "max_sinr";
    case SchedulerKind::max_gain: return "max_gain";
    case SchedulerKind::no_interference: return "no_interference";
    case SchedulerKind::cluster_free: return "cluster_free";
  }
  return "unknown";
}

std::optional<SchedulerKind> parse_scheduler_kind(std::string_view text) noexcept {
  for (SchedulerKind kind : kAllSchedulers) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

double sinr(double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) {
    throw std::invalid_argument("sinr: alpha and beta must be nonnegative");
  }
  return alpha / (1.0 + beta);
}

double rate_bits(double sinr) noexcept { return std::log2(1.0 + sinr); }

SchedulerDecision schedule(std::span<const UserSample> users, SchedulerKind kind) {
  if (users.empty()) throw std::invalid_argument("schedule: empty drop");

  // Selection key and the SINR reported for the chosen user.
  auto key = [kind](const UserSample& u) {
    switch (kind) {
      case SchedulerKind::max_sinr: return u.alpha / (1.0 + u.beta);
      case SchedulerKind::cluster_free: return u.alpha / (1.0 + u.beta_out_of_cluster);
      case SchedulerKind::max_gain:
      case SchedulerKind::no_interference: break;
    }
    return u.alpha;
  };

  std::size_t best = 0;
  double best_key = key(users[0]);
  for (std::size_t k = 1; k < users.size(); ++k) {
    const double value = key(users[k]);
    if (value > best_key) {
      best_key = value;
      best = k;
    }
  }

  const UserSample& chosen = users[best];
  SchedulerDecision decision;
  decision.selected_index = best;
  switch (kind) {
    case SchedulerKind::max_sinr:
    case SchedulerKind::max_gain:
      decision.residual_beta = chosen.beta;
      decision.sinr = chosen.alpha / (1.0 + chosen.beta);
      break;
    case SchedulerKind::cluster_free:
      decision.residual_beta = chosen.beta_out_of_cluster;
      decision.sinr = chosen.alpha / (1.0 + chosen.beta_out_of_cluster);
      break;
    case SchedulerKind::no_interference:
      decision.residual_beta = 0.0;
      decision.sinr = chosen.alpha;
      break;
  }
  decision.rate_bpcu = rate_bits(decision.sinr);
  return decision;
}

SchedulerDecision schedule(const Drop& drop, SchedulerKind kind) {
  return schedule(std::span<const UserSample>(drop.users), kind);
}

double rate_gap(const SchedulerDecision& decision_up, const SchedulerDecision& decision_sinr) noexcept {
  return decision_up.rate_bpcu - decision_sinr.rate_bpcu;
}

}  // namespace cellsim
