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
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cellsim/montecarlo.hpp"
#include "cellsim/scenario.hpp"

namespace cellsim::validation {

/// Outcome of one verification criterion.
struct CriterionResult {
  std::string id;
  std::string name;
  double measured = 0.0;
  std::string requirement;  ///< human-readable threshold, e.g. "<= 0.01"
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// "PASS C2 gumbel-limit measured=0.0041 requirement=<= 0.01 (1.2 s) ..."
std::string format_result(const CriterionResult& result);

struct Settings {
  unsigned workers = 0;  ///< 0 = hardware concurrency
  std::uint64_t seed = 20110601;
};

/// n in {2^6, ..., 2^14}, 2e4 trials, all four schedulers, no joint
/// processing: the sweep behind the rate-gap and interference criteria.
ScenarioConfig trend_scenario(ChannelModel model, const Settings& settings);

/// Same grid with joint processing and 2e3 trials per point.
ScenarioConfig jp_scenario(ChannelModel model, const Settings& settings);

/// Symmetric trend scenario with each interferer's received power scaled by
/// an independent factor uniform in [0.25, 4].
ScenarioConfig scaled_interference_scenario(const Settings& settings);

// Individual criteria. Each returns a result instead of throwing; a thrown
// exception inside becomes a failed result carrying the message.

CriterionResult check_per_drop_ordering(std::size_t drops_per_model, std::uint64_t seed,
                                        double budget_seconds = 60.0);

CriterionResult check_gumbel_limit(std::size_t n, std::size_t trials, std::uint64_t seed,
                                   const std::function<double(double)>& reference_cdf,
                                   double budget_seconds = 120.0);

CriterionResult check_frechet_limit(std::size_t n, std::size_t trials, double epsilon,
                                    std::uint64_t seed, double budget_seconds = 300.0);

CriterionResult check_rate_gap_trend(std::span<const CurvePoint> curve, std::size_t interferers,
                                     double run_seconds, double budget_seconds = 600.0);

CriterionResult check_vanishing_interference(std::span<const CurvePoint> curve);

CriterionResult check_positive_interference_limit(std::span<const CurvePoint> curve,
                                                  double run_seconds, double budget_seconds = 600.0);

CriterionResult check_max_gain_overlap(std::span<const CurvePoint> curve, std::size_t min_n = 256,
                                       double tolerance = 0.03);

CriterionResult check_jp_matches_bound(std::span<const CurvePoint> symmetric,
                                       std::span<const CurvePoint> asymmetric,
                                       double tolerance = 0.05);

CriterionResult check_waterfilling_oracle(std::size_t instances, std::uint64_t seed);

CriterionResult check_zero_forcing(std::size_t instances, std::uint64_t seed);

CriterionResult check_path_loss_invariance(std::span<const CurvePoint> scaled_curve);

CriterionResult check_worker_determinism(unsigned workers_a, unsigned workers_b, std::uint64_t seed);

/// Best sum rate over the grid {k * step * P : sum k = 1/step} of the
/// 3-stream power simplex. Independent of waterfilling().
double grid_search_sum_rate(std::span<const double, 3> gains, double total_power, double step);

enum class Suite { symmetric_bounds, asymmetric_limits, evt_cdf, jp_sanity };

Suite parse_suite(const std::string& text);
std::string to_string(Suite suite);

/// Runs every criterion of \p suite, writing one line per criterion to
/// \p report as it completes.
std::vector<CriterionResult> run_suite(Suite suite, const Settings& settings, std::ostream& report);

/// Every criterion, numbered C1..C12.
std::vector<CriterionResult> run_all(const Settings& settings, std::ostream& report);

/// One criterion by id ("C1".."C12"), recomputing whatever sweep it needs.
/// Throws std::invalid_argument for an unknown id.
CriterionResult run_criterion(const std::string& id, const Settings& settings);

}  // namespace cellsim::validation
