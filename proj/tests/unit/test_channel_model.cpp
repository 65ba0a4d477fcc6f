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
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "cellsim/channel_model.hpp"
#include "cellsim/rng.hpp"
#include "cellsim/statistics.hpp"

namespace cellsim {
namespace {

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

TEST(Geometry, FirstRingSixInterferers) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6);
  ASSERT_EQ(g.interferers.size(), 6u);
  for (std::size_t j = 0; j < 6; ++j) {
    const Point p = g.interferers[j];
    EXPECT_NEAR(distance_km(p, g.serving), 4.0, 1e-12);
    const double angle = std::atan2(p.y_km, p.x_km);
    const double expected = std::remainder(static_cast<double>(j) * std::numbers::pi / 3.0, 2.0 * std::numbers::pi);
    EXPECT_NEAR(angle, expected, 1e-12) << j;
    EXPECT_NEAR(distance_km(p, g.interferers[(j + 1) % 6]), 4.0, 1e-12);
  }
  EXPECT_EQ(g.cluster_members, (std::vector<std::size_t>{0, 1}));
}

TEST(Geometry, SingleInterferer) {
  const NetworkGeometry g = first_ring_geometry(1.0, 1);
  ASSERT_EQ(g.interferers.size(), 1u);
  EXPECT_NEAR(g.interferers[0].x_km, 2.0, 1e-15);
  EXPECT_NEAR(g.interferers[0].y_km, 0.0, 1e-15);
}

TEST(Geometry, RejectsInvalidLayouts) {
  EXPECT_THROW(first_ring_geometry(2.0, 0), std::invalid_argument);
  EXPECT_THROW(first_ring_geometry(-1.0, 6), std::invalid_argument);
  EXPECT_THROW(first_ring_geometry(1.0, 6, 1.5), std::invalid_argument);
  NetworkGeometry g = first_ring_geometry(2.0, 6);
  g.interferers[2] = g.serving;
  EXPECT_THROW(g.validate(), std::invalid_argument);
}

TEST(PathLoss, HataValues) {
  const PathLossSpec hata = HataPathLoss{-114.5, -37.19};
  EXPECT_NEAR(linear_to_db(path_gain(hata, 1.0)), -114.5, 1e-9);
  EXPECT_NEAR(linear_to_db(path_gain(hata, 10.0)), -151.69, 1e-9);
  EXPECT_LT(linear_to_db(path_gain(hata, 0.001)), 0.0);
}

TEST(PathLoss, GenericValue) {
  EXPECT_NEAR(path_gain(GenericPathLoss{1.0, 2.0}, 0.5), 4.0, 1e-12);
  EXPECT_NEAR(path_gain(GenericPathLoss{3.0, 4.0}, 2.0), 3.0 / 16.0, 1e-15);
}

TEST(PathLoss, PowerLawAgreesWithPathGain) {
  for (const PathLossSpec& spec : {PathLossSpec{HataPathLoss{}}, PathLossSpec{GenericPathLoss{2.0, 3.5}}}) {
    const PowerLaw law = as_power_law(spec);
    for (double d : {0.1, 0.7, 1.0, 3.3}) {
      EXPECT_NEAR(law.at_squared_distance(d * d) / path_gain(spec, d), 1.0, 1e-12);
    }
  }
}

TEST(PathLoss, Validation) {
  EXPECT_THROW(validate_path_loss(GenericPathLoss{0.0, 4.0}), std::invalid_argument);
  EXPECT_THROW(validate_path_loss(GenericPathLoss{1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(validate_path_loss(HataPathLoss{-114.5, 1.0}), std::invalid_argument);
  EXPECT_NO_THROW(validate_path_loss(HataPathLoss{}));
  EXPECT_THROW(path_gain(HataPathLoss{}, 0.0), std::invalid_argument);
}

TEST(LinkBudget, ReferenceSnrIs26Point5Db) {
  const LinkBudget b{40.0, -101.0, {}};
  EXPECT_NEAR(linear_to_db(b.snr_scale() * path_gain(HataPathLoss{}, 1.0)), 26.5, 1e-9);
  EXPECT_NEAR(db_to_linear(30.0), 1000.0, 1e-9);
}

TEST(Fading, MomentsAndTail) {
  RngStream s(5, 0);
  const auto g = draw_fading(s, 1000000);
  const Estimate e = summarize(g);
  EXPECT_NEAR(e.mean, 1.0, 0.005);
  double var = 0.0;
  std::size_t tail = 0;
  for (double x : g) {
    var += (x - e.mean) * (x - e.mean);
    if (x > std::log(100.0)) ++tail;
    ASSERT_GE(x, 0.0);
  }
  EXPECT_NEAR(var / static_cast<double>(g.size() - 1), 1.0, 0.01);
  EXPECT_NEAR(static_cast<double>(tail) / static_cast<double>(g.size()), 0.01, 0.002);
  EXPECT_THROW(draw_fading(s, 0), std::invalid_argument);
}

TEST(SymmetricDrop, ZeroInterfererPowerMeansNoInterference) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  const LinkBudget b{40.0, -101.0, std::vector<double>(6, 0.0)};
  RngStream s(1, 1);
  const Drop d = drop_symmetric(g, HataPathLoss{}, b, 1, s);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.users[0].beta, 0.0);
  EXPECT_EQ(d.users[0].beta_out_of_cluster, 0.0);
}

TEST(SymmetricDrop, MeanDirectGainIsRho) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  const LinkBudget b;
  RngStream s(2, 2);
  const Drop d = drop_symmetric(g, HataPathLoss{}, b, 1000000, s);
  std::vector<double> alpha;
  alpha.reserve(d.size());
  for (const auto& u : d.users) {
    alpha.push_back(u.alpha);
    ASSERT_EQ(u.distance_km, 1.0);  // shared path loss
    ASSERT_GE(u.beta, u.beta_out_of_cluster);
  }
  EXPECT_NEAR(linear_to_db(mean(alpha)), 26.5, 0.1);
}

TEST(SymmetricDrop, TermsSumToBeta) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  RngStream s(3, 3);
  const Drop d = drop_symmetric(g, HataPathLoss{}, LinkBudget{}, 50, s);
  for (std::size_t k = 0; k < d.size(); ++k) {
    double sum = 0.0;
    double out = 0.0;
    const auto t = d.terms_of(k);
    for (std::size_t j = 0; j < t.size(); ++j) {
      sum += t[j];
      if (j > 1) out += t[j];
    }
    EXPECT_NEAR(sum, d.users[k].beta, 1e-12 * sum);
    EXPECT_NEAR(out, d.users[k].beta_out_of_cluster, 1e-12 * sum);
  }
}

TEST(AsymmetricDrop, RadialDistribution) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  RngStream s(4, 4);
  const Drop d = drop_asymmetric(g, HataPathLoss{}, LinkBudget{}, 1000000, s);
  std::size_t inner = 0;
  double dist = 0.0;
  for (const auto& u : d.users) {
    ASSERT_GT(u.distance_km, 0.0);
    ASSERT_LE(u.distance_km, 2.0);
    if (u.distance_km <= 1.0) ++inner;
    dist += u.distance_km;
  }
  const double m = static_cast<double>(d.size());
  EXPECT_NEAR(static_cast<double>(inner) / m, 0.25, 0.002);
  EXPECT_NEAR(dist / m, 4.0 / 3.0, 0.005);
}

TEST(AsymmetricDrop, ZeroInterfererPower) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  const LinkBudget b{40.0, -101.0, std::vector<double>(6, 0.0)};
  RngStream s(5, 5);
  const Drop d = drop_asymmetric(g, HataPathLoss{}, b, 1000, s);
  for (const auto& u : d.users) EXPECT_EQ(u.beta, 0.0);
}

TEST(Drops, RejectBadArguments) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  RngStream s(6, 6);
  EXPECT_THROW(drop_symmetric(g, HataPathLoss{}, LinkBudget{}, 0, s), std::invalid_argument);
  EXPECT_THROW(drop_asymmetric(g, HataPathLoss{}, LinkBudget{40, -101, {1.0, 1.0}}, 3, s),
               std::invalid_argument);
  const std::vector<double> gains{1e-12, 1e-12, 0.0, 1e-12, 1e-12, 1e-12};
  EXPECT_THROW(unequal_interferer_drop(g, HataPathLoss{}, gains, LinkBudget{}, 3, s), std::invalid_argument);
}

double mean_beta_unequal(const std::vector<double>& gains, std::uint64_t seed, std::size_t users) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  RngStream s(seed, 0);
  const Drop d = unequal_interferer_drop(g, HataPathLoss{}, gains, LinkBudget{}, users, s);
  double b = 0.0;
  for (const auto& u : d.users) b += u.beta;
  return b / static_cast<double>(users);
}

TEST(UnequalDrop, DoublingGainsDoublesMeanInterference) {
  std::vector<double> gains = {1e-13, 2e-13, 5e-14, 3e-13, 1e-13, 7e-14};
  const double base = mean_beta_unequal(gains, 9, 1000000);
  for (double& x : gains) x *= 2.0;
  EXPECT_NEAR(mean_beta_unequal(gains, 9, 1000000) / base, 2.0, 0.02);
}

TEST(UnequalDrop, VanishingGainRemovesContribution) {
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  const std::vector<double> gains = {1e-13, 1e-13, 1e-13, 1e-13, 1e-13, 1e-30};
  RngStream s(10, 0);
  const Drop d = unequal_interferer_drop(g, HataPathLoss{}, gains, LinkBudget{}, 10000, s);
  double last = 0.0;
  double first = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    first += d.terms_of(k)[0];
    last += d.terms_of(k)[5];
  }
  EXPECT_LT(last, 1e-15 * first);
}

TEST(UnequalDrop, EqualGainsMatchSymmetricModel) {
  // With every gamma_j set to the angle-averaged path gain of interferer j,
  // the mean interference and the direct-gain law match drop_symmetric.
  const NetworkGeometry g = first_ring_geometry(2.0, 6, 1.0);
  const PathLossSpec spec = HataPathLoss{};
  std::vector<double> averaged(6, 0.0);
  constexpr int kSteps = 36000;
  for (int i = 0; i < kSteps; ++i) {
    const double a = 2.0 * std::numbers::pi * (i + 0.5) / kSteps;
    const Point p{std::cos(a), std::sin(a)};
    for (std::size_t j = 0; j < 6; ++j) averaged[j] += path_gain(spec, distance_km(p, g.interferers[j])) / kSteps;
  }
  constexpr std::size_t kUsers = 1000000;
  RngStream s1(12, 0);
  RngStream s2(12, 1);
  const Drop sym = drop_symmetric(g, spec, LinkBudget{}, kUsers, s1);
  const Drop neq = unequal_interferer_drop(g, spec, averaged, LinkBudget{}, kUsers, s2);
  std::vector<double> b1, b2, a1, a2;
  for (std::size_t k = 0; k < kUsers; ++k) {
    b1.push_back(sym.users[k].beta);
    b2.push_back(neq.users[k].beta);
    a1.push_back(sym.users[k].alpha);
    a2.push_back(neq.users[k].alpha);
  }
  const Estimate eb1 = summarize(b1), eb2 = summarize(b2), ea1 = summarize(a1), ea2 = summarize(a2);
  EXPECT_NEAR(eb1.mean, eb2.mean, 3.0 * std::hypot(eb1.ci, eb2.ci));
  EXPECT_NEAR(ea1.mean, ea2.mean, 3.0 * std::hypot(ea1.ci, ea2.ci));
}

TEST(ChannelModelNames, RoundTrip) {
  for (ChannelModel m : {ChannelModel::symmetric, ChannelModel::asymmetric}) {
    EXPECT_EQ(parse_channel_model(to_string(m)), m);
  }
  EXPECT_THROW(parse_channel_model("hexagonal"), std::invalid_argument);
}

}  // namespace
}  // namespace cellsim
