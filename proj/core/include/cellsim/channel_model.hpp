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
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "cellsim/rng.hpp"

namespace cellsim {

/// Planar position in kilometres.
struct Point {
  double x_km = 0.0;
  double y_km = 0.0;
};

double distance_km(Point a, Point b) noexcept;

enum class ChannelModel { symmetric, asymmetric };

std::string_view to_string(ChannelModel model) noexcept;
ChannelModel parse_channel_model(std::string_view text);

/// Serving base station, its interfering neighbours and the cell discs.
struct NetworkGeometry {
  Point serving;
  std::vector<Point> interferers;
  double cell_radius_km = 2.0;
  double symmetric_radius_km = 1.0;
  /// Interferer indices that cooperate with the serving BS in joint
  /// processing. Their interference is absent from the cluster-free SINR.
  std::vector<std::size_t> cluster_members;

  /// Throws std::invalid_argument on a malformed geometry.
  void validate() const;
};

/// Serving BS at \p center with \p interferer_count neighbours at distance
/// 2R, equally spaced in angle starting at 0 degrees (tangent discs).
/// With six neighbours, interferers 0 and 1 are mutually adjacent and form
/// the default three-cell cooperation cluster.
NetworkGeometry first_ring_geometry(double cell_radius_km, std::size_t interferer_count,
                                    double symmetric_radius_km, Point center = {});
NetworkGeometry first_ring_geometry(double cell_radius_km, std::size_t interferer_count);

struct GenericPathLoss {
  double lambda = 1.0;
  double epsilon = 4.0;
};

/// Log-distance model in dB, distance in km.
struct HataPathLoss {
  double offset_db = -114.5;
  double slope_db = -37.19;
};

using PathLossSpec = std::variant<GenericPathLoss, HataPathLoss>;

void validate_path_loss(const PathLossSpec& spec);

/// Linear power gain at distance \p d_km. Throws for d <= 0.
double path_gain(const PathLossSpec& spec, double d_km);

/// Both path-loss variants are power laws: gain = scale * d^-exponent.
struct PowerLaw {
  double scale = 1.0;
  double exponent = 2.0;

  double at_squared_distance(double d2_km2) const noexcept;
};

PowerLaw as_power_law(const PathLossSpec& spec);

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

/// Transmit power, noise floor and optional per-interferer power multipliers.
struct LinkBudget {
  double power_dbm = 40.0;
  double noise_dbm = -101.0;
  /// Multiplies interferer j's received power; empty means 1 for all.
  std::vector<double> interferer_scale;

  /// P / noise as a linear ratio.
  double snr_scale() const noexcept;
  double interferer_factor(std::size_t j) const noexcept;
};

/// One user's direct-link gain and aggregate interference, both already
/// divided by the noise power so that SINR = alpha / (1 + beta).
struct UserSample {
  double alpha = 0.0;
  double beta = 0.0;
  /// Interference from interferers outside NetworkGeometry::cluster_members.
  double beta_out_of_cluster = 0.0;
  double distance_km = 0.0;
};

struct Drop {
  ChannelModel model = ChannelModel::symmetric;
  std::vector<UserSample> users;
  std::size_t interferer_count = 0;
  /// Row-major users x interferers matrix of the per-interferer terms that
  /// sum to beta.
  std::vector<double> interferer_terms;

  std::size_t size() const noexcept { return users.size(); }
  std::span<const double> terms_of(std::size_t user) const noexcept {
    return {interferer_terms.data() + user * interferer_count, interferer_count};
  }
};

/// \p count i.i.d. unit-mean exponential fading powers.
std::vector<double> draw_fading(RngStream& stream, std::size_t count);

/// Users on the circle of radius symmetric_radius_km (uniform angle); every
/// user has the same direct path loss, interferer path losses follow the
/// user's angle.
Drop drop_symmetric(const NetworkGeometry& geometry, const PathLossSpec& spec,
                    const LinkBudget& budget, std::size_t n, RngStream& stream);

/// Users uniform on the disc of radius cell_radius_km.
Drop drop_asymmetric(const NetworkGeometry& geometry, const PathLossSpec& spec,
                     const LinkBudget& budget, std::size_t n, RngStream& stream);

/// Symmetric direct link with a fixed linear path gain per interferer,
/// independent of user position. Every gain must be strictly positive.
Drop unequal_interferer_drop(const NetworkGeometry& geometry, const PathLossSpec& spec,
                             std::span<const double> interferer_path_gains,
                             const LinkBudget& budget, std::size_t n, RngStream& stream);

Drop draw_drop(ChannelModel model, const NetworkGeometry& geometry, const PathLossSpec& spec,
               const LinkBudget& budget, std::size_t n, RngStream& stream);

}  // namespace cellsim
