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
#include "cellsim/montecarlo.hpp"
#include "cellsim/statistics.hpp"

namespace cellsim {
namespace {

ScenarioConfig small(ChannelModel model, bool jp) {
  ScenarioConfig c;
  c.name = "small";
  c.model = model;
  c.n_grid = {1, 8, 64};
  c.trials_per_n = 200;
  c.master_seed = 77;
  c.jp_enabled = jp;
  return c;
}

bool same(const Estimate& a, const Estimate& b) {
  return a.mean == b.mean && a.ci == b.ci && a.count == b.count;
}

TEST(MonteCarlo, SingleUserWithoutInterferenceHasNoGap) {
  ScenarioConfig c = small(ChannelModel::symmetric, false);
  c.trials_per_n = 1;
  c.interferer_gain_scale.assign(6, 0.0);
  const CurvePoint p = run_point(c, 1);
  EXPECT_EQ(p.delta_r.mean, 0.0);
  EXPECT_EQ(p.find(SchedulerKind::max_sinr)->beta_norm.mean, 0.0);
}

TEST(MonteCarlo, WorkerCountDoesNotChangeResults) {
  for (ChannelModel m : {ChannelModel::symmetric, ChannelModel::asymmetric}) {
    const ScenarioConfig c = small(m, true);
    const auto a = run_scenario(c, 1);
    const auto b = run_scenario(c, 3);
    const auto d = run_scenario(c, 8);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_TRUE(same(a[i].delta_r, b[i].delta_r));
      EXPECT_TRUE(same(a[i].delta_r, d[i].delta_r));
      EXPECT_TRUE(same(*a[i].jp_rate, *d[i].jp_rate));
      for (std::size_t k = 0; k < a[i].schedulers.size(); ++k) {
        EXPECT_TRUE(same(a[i].schedulers[k].rate, d[i].schedulers[k].rate));
        EXPECT_TRUE(same(a[i].schedulers[k].beta_norm, d[i].schedulers[k].beta_norm));
      }
    }
  }
}

TEST(MonteCarlo, SingletonGridEqualsRunPoint) {
  ScenarioConfig c = small(ChannelModel::asymmetric, false);
  c.n_grid = {16};
  const auto curve = run_scenario(c, 2);
  const CurvePoint p = run_point(c, 16, 1);
  ASSERT_EQ(curve.size(), 1u);
  EXPECT_TRUE(same(curve[0].delta_r, p.delta_r));
}

TEST(MonteCarlo, SchedulerSetMatchesConfig) {
  ScenarioConfig c = small(ChannelModel::symmetric, false);
  c.schedulers = {SchedulerKind::max_gain};
  const CurvePoint p = run_point(c, 8);
  ASSERT_EQ(p.schedulers.size(), 1u);
  EXPECT_EQ(p.schedulers[0].kind, SchedulerKind::max_gain);
  EXPECT_EQ(p.find(SchedulerKind::max_sinr), nullptr);
  EXPECT_FALSE(p.jp_rate.has_value());
  ASSERT_TRUE(p.theorem1.has_value());
  EXPECT_NEAR(p.theorem1->upper, asymptotics::theorem1_envelope(8.0, 6).upper, 1e-15);
}

TEST(MonteCarlo, OverlaysOnlyForSymmetricModel) {
  const ScenarioConfig c = small(ChannelModel::asymmetric, false);
  const CurvePoint p = run_point(c, 8);
  EXPECT_FALSE(p.lemma1.has_value());
  EXPECT_FALSE(p.theorem1.has_value());
  const CurvePoint q = run_point(small(ChannelModel::symmetric, false), 2);
  EXPECT_FALSE(q.lemma1.has_value());
}

TEST(MonteCarlo, MaxSinrBeatsMaxGainAtN1024) {
  ScenarioConfig c = small(ChannelModel::symmetric, false);
  c.schedulers = {SchedulerKind::max_sinr, SchedulerKind::max_gain};
  c.trials_per_n = 20000;
  const CurvePoint p = run_point(c, 1024, 0);
  const auto& s = p.find(SchedulerKind::max_sinr)->rate;
  const auto& g = p.find(SchedulerKind::max_gain)->rate;
  EXPECT_GT(s.mean - s.ci, g.mean + g.ci);
}

TEST(MonteCarlo, UpperBoundRateGrowsWithN) {
  ScenarioConfig c = small(ChannelModel::symmetric, false);
  c.n_grid = {1, 4, 16, 64, 256};
  c.trials_per_n = 2000;
  c.schedulers = {SchedulerKind::no_interference, SchedulerKind::max_sinr};
  const auto curve = run_scenario(c, 0);
  EXPECT_TRUE(nondecreasing_within_ci(extract_series(curve, CurveQuantity::rate(SchedulerKind::no_interference))));
  EXPECT_TRUE(decreasing_within_ci(extract_series(curve, CurveQuantity::beta_norm(SchedulerKind::max_sinr))));
}

TEST(MonteCarlo, InterferenceFreeRateGrowsAtHalfThePathLossExponent) {
  // Asymmetric model: the rate of the best user grows like (epsilon/2) log2 n.
  ScenarioConfig c = small(ChannelModel::asymmetric, false);
  c.n_grid = geometric_grid(8, 14);
  c.trials_per_n = 400;
  c.schedulers = {SchedulerKind::no_interference};
  const auto curve = run_scenario(c, 0);
  std::vector<double> x, y;
  for (const auto& p : curve) {
    x.push_back(std::log2(static_cast<double>(p.n)));
    y.push_back(p.find(SchedulerKind::no_interference)->rate.mean);
  }
  const LinearFit f = linear_fit(x, y, std::vector<double>{});
  EXPECT_NEAR(f.slope, 3.719 / 2.0, 0.15);
}

TEST(MonteCarlo, JointProcessingBeatsUncoordinatedScheduling) {
  ScenarioConfig c = small(ChannelModel::symmetric, true);
  c.trials_per_n = 10000;
  const CurvePoint p = run_point(c, 8, 0);
  ASSERT_TRUE(p.jp_rate.has_value());
  const auto& s = p.find(SchedulerKind::max_sinr)->rate;
  EXPECT_GT(p.jp_rate->mean - p.jp_rate->ci, s.mean + s.ci);
}

TEST(MonteCarlo, RejectsBadInput) {
  ScenarioConfig c = small(ChannelModel::symmetric, false);
  EXPECT_THROW(run_point(c, 0), std::invalid_argument);
  c.trials_per_n = 0;
  EXPECT_THROW(run_point(c, 4), ConfigError);
}

TEST(MonteCarlo, StreamIdsAreDistinct) {
  EXPECT_NE(trial_stream_id(4, 1), trial_stream_id(1, 4));
  EXPECT_NE(trial_stream_id(4, 0), trial_stream_id(8, 0));
  EXPECT_EQ(resolve_workers(3), 3u);
  EXPECT_GE(resolve_workers(0), 1u);
}

}  // namespace
}  // namespace cellsim
