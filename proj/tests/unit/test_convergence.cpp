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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cellsim/asymptotics.hpp"
#include "cellsim/convergence.hpp"

namespace cellsim {
namespace {

std::vector<SeriesPoint> series(double (*value)(double), double ci0, bool shrink) {
  std::vector<SeriesPoint> s;
  for (int e = 4; e <= 14; ++e) {
    const double n = std::ldexp(1.0, e);
    s.push_back({n, value(n), shrink ? ci0 / (e - 3) : ci0});
  }
  return s;
}

TEST(Verdict, ConstantZeroVanishes) {
  const auto s = series([](double) { return 0.0; }, 0.0, false);
  EXPECT_EQ(convergence_verdict(s, QuantityScale::interference, "zero").verdict, Verdict::vanishing);
}

TEST(Verdict, ConstantLevelIsPositiveLimit) {
  const auto s = series([](double) { return 5.0; }, 0.2, true);
  const auto v = convergence_verdict(s, QuantityScale::interference, "five");
  EXPECT_EQ(v.verdict, Verdict::positive_limit);
  EXPECT_NEAR(v.limit_estimate.mean, 5.0, 1e-12);
  EXPECT_EQ(v.quantity, "five");
}

TEST(Verdict, SlowDecayToZero) {
  // Decays like the symmetric rate gap; far from zero inside the grid.
  const auto s = series([](double n) { return 6.0 * asymptotics::rate_correction(n); }, 0.01, false);
  const auto v = convergence_verdict(s, QuantityScale::rate_gap, "gap");
  EXPECT_EQ(v.verdict, Verdict::inconclusive_decreasing);
  EXPECT_TRUE(v.diagnostics.significantly_decreasing);
  EXPECT_NEAR(v.limit_estimate.mean, 0.0, 1e-9);
}

TEST(Verdict, NoisyFlatCurveIsNotDecreasing) {
  const auto s = series([](double n) { return 2.0 + 0.5 * std::sin(n); }, 0.01, false);
  const auto v = convergence_verdict(s, QuantityScale::rate_gap, "noise");
  EXPECT_NE(v.verdict, Verdict::vanishing);
  EXPECT_NE(v.verdict, Verdict::positive_limit);
}

TEST(Verdict, RequiresEnoughData) {
  auto s = series([](double) { return 1.0; }, 0.1, false);
  std::vector<SeriesPoint> three(s.begin(), s.begin() + 3);
  EXPECT_THROW(convergence_verdict(three, QuantityScale::rate_gap, "x"), std::invalid_argument);
  std::vector<SeriesPoint> narrow(s.begin(), s.begin() + 5);  // 16..256
  narrow.resize(4);                                           // 16..128: under two decades
  EXPECT_THROW(convergence_verdict(narrow, QuantityScale::rate_gap, "x"), std::invalid_argument);
}

TEST(Trend, DecreasingWithinCi) {
  std::vector<SeriesPoint> s = {{1, 5.0, 0.1}, {2, 4.0, 0.1}, {3, 4.1, 0.1}};
  EXPECT_TRUE(decreasing_within_ci(s));
  s[2].value = 4.3;
  EXPECT_FALSE(decreasing_within_ci(s));
  EXPECT_TRUE(nondecreasing_within_ci(std::vector<SeriesPoint>{{1, 1.0, 0.1}, {2, 0.95, 0.1}}));
}

TEST(Trend, RateGapCoefficientRecoversScale) {
  const auto s = series([](double n) { return 7.5 * asymptotics::rate_correction(n); }, 0.01, false);
  EXPECT_NEAR(rate_gap_coefficient(s), 7.5, 1e-12);
}

TEST(Series, ExtractionAndMissingColumns) {
  CurvePoint p;
  p.n = 16;
  p.delta_r = {0.5, 0.01, 10};
  p.schedulers.push_back({SchedulerKind::max_sinr, {3.0, 0.1, 10}, {2.0, 0.2, 10}});
  const std::vector<CurvePoint> curve = {p};
  EXPECT_EQ(extract_series(curve, CurveQuantity::delta_r())[0].value, 0.5);
  EXPECT_EQ(extract_series(curve, CurveQuantity::beta_norm(SchedulerKind::max_sinr))[0].ci, 0.2);
  EXPECT_THROW(extract_series(curve, CurveQuantity::rate(SchedulerKind::max_gain)), std::invalid_argument);
  EXPECT_THROW(extract_series(curve, CurveQuantity::jp_rate()), std::invalid_argument);
  EXPECT_EQ(CurveQuantity::beta_norm(SchedulerKind::max_sinr).name(), "max_sinr_mean_beta_norm");
}

TEST(Verdict, Names) {
  EXPECT_EQ(to_string(Verdict::positive_limit), "positive-limit");
  EXPECT_EQ(to_string(Verdict::inconclusive_decreasing), "inconclusive-decreasing");
  EXPECT_EQ(vanishing_threshold(QuantityScale::rate_gap), 0.05);
  EXPECT_EQ(vanishing_threshold(QuantityScale::interference), 0.1);
}

}  // namespace
}  // namespace cellsim
