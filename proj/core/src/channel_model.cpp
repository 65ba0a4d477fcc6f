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

#include "cellsim/channel_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace cellsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

std::vector<char> cluster_mask(const NetworkGeometry& geometry) {
  std::vector<char> mask(geometry.interferers.size(), 0);
  for (std::size_t j : geometry.cluster_members) mask[j] = 1;
  return mask;
}

Drop make_drop(ChannelModel model, std::size_t n, std::size_t interferers) {
  Drop drop;
  drop.model = model;
  drop.users.resize(n);
  drop.interferer_count = interferers;
  drop.interferer_terms.resize(n * interferers);
  return drop;
}

void check_budget(const LinkBudget& budget, std::size_t interferers) {
  require(std::isfinite(budget.power_dbm) && std::isfinite(budget.noise_dbm),
          "link budget: power and noise must be finite");
  require(budget.interferer_scale.empty() || budget.interferer_scale.size() == interferers,
          "link budget: interferer_scale must have one entry per interferer");
  for (double s : budget.interferer_scale) {
    require(std::isfinite(s) && s >= 0.0, "link budget: interferer_scale entries must be >= 0");
  }
}

// Interference terms for a user at \p position, written into \p terms.
// Returns (beta, beta_out_of_cluster).
std::pair<double, double> interference_at(Point position, const NetworkGeometry& geometry,
                                          const PowerLaw& law, const std::vector<double>& power,
                                          const std::vector<char>& in_cluster,
                                          std::span<double> terms, RngStream& stream) {
  double beta = 0.0;
  double beta_out = 0.0;
  for (std::size_t j = 0; j < geometry.interferers.size(); ++j) {
    const double dx = position.x_km - geometry.interferers[j].x_km;
    const double dy = position.y_km - geometry.interferers[j].y_km;
    const double term = power[j] * law.at_squared_distance(dx * dx + dy * dy) * stream.exponential();
    terms[j] = term;
    beta += term;
    if (!in_cluster[j]) beta_out += term;
  }
  return {beta, beta_out};
}

std::vector<double> interferer_powers(const LinkBudget& budget, std::size_t interferers) {
  std::vector<double> power(interferers);
  const double snr = budget.snr_scale();
  for (std::size_t j = 0; j < interferers; ++j) power[j] = snr * budget.interferer_factor(j);
  return power;
}

}  // namespace

double distance_km(Point a, Point b) noexcept {
  return std::hypot(a.x_km - b.x_km, a.y_km - b.y_km);
}

std::string_view to_string(ChannelModel model) noexcept {
  return model == ChannelModel::symmetric ? "symmetric" : "asymmetric";
}

ChannelModel parse_channel_model(std::string_view text) {
  if (text == "symmetric") return ChannelModel::symmetric;
  if (text == "asymmetric") return ChannelModel::asymmetric;
  throw std::invalid_argument("unknown channel model '" + std::string(text) +
                              "' (expected symmetric or asymmetric)");
}

void NetworkGeometry::validate() const {
  require(!interferers.empty(), "geometry: at least one interferer is required");
  require(cell_radius_km > 0.0 && std::isfinite(cell_radius_km),
          "geometry: cell radius must be positive");
  require(symmetric_radius_km > 0.0 && symmetric_radius_km <= cell_radius_km,
          "geometry: symmetric radius must lie in (0, cell radius]");
  for (const Point& p : interferers) {
    require(distance_km(p, serving) > 0.0, "geometry: interferer coincides with the serving BS");
  }
  for (std::size_t j : cluster_members) {
    require(j < interferers.size(), "geometry: cluster member index out of range");
  }
}

NetworkGeometry first_ring_geometry(double cell_radius_km, std::size_t interferer_count,
                                    double symmetric_radius_km, Point center) {
  require(interferer_count >= 1, "first_ring_geometry: N must be >= 1");
  require(cell_radius_km > 0.0 && std::isfinite(cell_radius_km),
          "first_ring_geometry: radius must be positive");
  NetworkGeometry geometry;
  geometry.serving = center;
  geometry.cell_radius_km = cell_radius_km;
  geometry.symmetric_radius_km = symmetric_radius_km;
  geometry.interferers.reserve(interferer_count);
  const double ring = 2.0 * cell_radius_km;
  for (std::size_t k = 0; k < interferer_count; ++k) {
    const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(interferer_count);
    geometry.interferers.push_back({center.x_km + ring * std::cos(angle),
                                    center.y_km + ring * std::sin(angle)});
  }
  if (interferer_count == 6) geometry.cluster_members = {0, 1};
  geometry.validate();
  return geometry;
}

NetworkGeometry first_ring_geometry(double cell_radius_km, std::size_t interferer_count) {
  return first_ring_geometry(cell_radius_km, interferer_count, cell_radius_km);
}

void validate_path_loss(const PathLossSpec& spec) {
  if (const auto* generic = std::get_if<GenericPathLoss>(&spec)) {
    require(generic->lambda > 0.0 && std::isfinite(generic->lambda),
            "path loss: lambda must be positive");
    require(generic->epsilon > 2.0 && std::isfinite(generic->epsilon),
            "path loss: epsilon must exceed 2");
  } else {
    const auto& hata = std::get<HataPathLoss>(spec);
    require(hata.slope_db < 0.0, "path loss: hata slope must be negative");
    // Gain at 1 m must still be an attenuation.
    require(hata.offset_db + hata.slope_db * -3.0 < 0.0,
            "path loss: hata gain must be negative in dB for d >= 1 m");
  }
}

double path_gain(const PathLossSpec& spec, double d_km) {
  require(d_km > 0.0, "path_gain: distance must be positive");
  if (const auto* generic = std::get_if<GenericPathLoss>(&spec)) {
    return generic->lambda * std::pow(d_km, -generic->epsilon);
  }
  const auto& hata = std::get<HataPathLoss>(spec);
  return db_to_linear(hata.offset_db + hata.slope_db * std::log10(d_km));
}

double PowerLaw::at_squared_distance(double d2_km2) const noexcept {
  return scale * std::pow(d2_km2, -0.5 * exponent);
}

PowerLaw as_power_law(const PathLossSpec& spec) {
  validate_path_loss(spec);
  if (const auto* generic = std::get_if<GenericPathLoss>(&spec)) {
    return {generic->lambda, generic->epsilon};
  }
  const auto& hata = std::get<HataPathLoss>(spec);
  return {db_to_linear(hata.offset_db), -hata.slope_db / 10.0};
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

double LinkBudget::snr_scale() const noexcept { return db_to_linear(power_dbm - noise_dbm); }

double LinkBudget::interferer_factor(std::size_t j) const noexcept {
  return interferer_scale.empty() ? 1.0 : interferer_scale[j];
}

std::vector<double> draw_fading(RngStream& stream, std::size_t count) {
  require(count >= 1, "draw_fading: count must be >= 1");
  std::vector<double> out(count);
  for (double& g : out) g = stream.exponential();
  return out;
}

Drop drop_symmetric(const NetworkGeometry& geometry, const PathLossSpec& spec,
                    const LinkBudget& budget, std::size_t n, RngStream& stream) {
  geometry.validate();
  require(n >= 1, "drop_symmetric: n must be >= 1");
  const std::size_t interferers = geometry.interferers.size();
  check_budget(budget, interferers);
  const PowerLaw law = as_power_law(spec);
  const double rho = budget.snr_scale() * path_gain(spec, geometry.symmetric_radius_km);
  const auto power = interferer_powers(budget, interferers);
  const auto in_cluster = cluster_mask(geometry);

  Drop drop = make_drop(ChannelModel::symmetric, n, interferers);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = kTwoPi * stream.uniform();
    const Point position{geometry.serving.x_km + geometry.symmetric_radius_km * std::cos(angle),
                         geometry.serving.y_km + geometry.symmetric_radius_km * std::sin(angle)};
    UserSample& user = drop.users[k];
    user.alpha = rho * stream.exponential();
    user.distance_km = geometry.symmetric_radius_km;
    std::tie(user.beta, user.beta_out_of_cluster) =
        interference_at(position, geometry, law, power, in_cluster,
                        {drop.interferer_terms.data() + k * interferers, interferers}, stream);
  }
  return drop;
}

Drop drop_asymmetric(const NetworkGeometry& geometry, const PathLossSpec& spec,
                     const LinkBudget& budget, std::size_t n, RngStream& stream) {
  geometry.validate();
  require(n >= 1, "drop_asymmetric: n must be >= 1");
  const std::size_t interferers = geometry.interferers.size();
  check_budget(budget, interferers);
  const PowerLaw law = as_power_law(spec);
  const double snr = budget.snr_scale();
  const auto power = interferer_powers(budget, interferers);
  const auto in_cluster = cluster_mask(geometry);
  const double radius = geometry.cell_radius_km;

  Drop drop = make_drop(ChannelModel::asymmetric, n, interferers);
  for (std::size_t k = 0; k < n; ++k) {
    double u = stream.uniform();
    while (u == 0.0) u = stream.uniform();  // zero distance: re-draw
    const double r = radius * std::sqrt(u);
    const double angle = kTwoPi * stream.uniform();
    const Point position{geometry.serving.x_km + r * std::cos(angle),
                         geometry.serving.y_km + r * std::sin(angle)};
    UserSample& user = drop.users[k];
    user.alpha = snr * law.at_squared_distance(r * r) * stream.exponential();
    user.distance_km = r;
    std::tie(user.beta, user.beta_out_of_cluster) =
        interference_at(position, geometry, law, power, in_cluster,
                        {drop.interferer_terms.data() + k * interferers, interferers}, stream);
  }
  return drop;
}

Drop unequal_interferer_drop(const NetworkGeometry& geometry, const PathLossSpec& spec,
                             std::span<const double> interferer_path_gains,
                             const LinkBudget& budget, std::size_t n, RngStream& stream) {
  geometry.validate();
  require(n >= 1, "unequal_interferer_drop: n must be >= 1");
  const std::size_t interferers = geometry.interferers.size();
  require(interferer_path_gains.size() == interferers,
          "unequal_interferer_drop: one path gain per interferer is required");
  for (double g : interferer_path_gains) {
    require(g > 0.0 && std::isfinite(g), "unequal_interferer_drop: path gains must be nonzero");
  }
  check_budget(budget, interferers);
  const double snr = budget.snr_scale();
  const double rho = snr * path_gain(spec, geometry.symmetric_radius_km);
  std::vector<double> power(interferers);
  for (std::size_t j = 0; j < interferers; ++j) {
    power[j] = snr * budget.interferer_factor(j) * interferer_path_gains[j];
  }
  const auto in_cluster = cluster_mask(geometry);

  Drop drop = make_drop(ChannelModel::symmetric, n, interferers);
  for (std::size_t k = 0; k < n; ++k) {
    UserSample& user = drop.users[k];
    user.alpha = rho * stream.exponential();
    user.distance_km = geometry.symmetric_radius_km;
    double* terms = drop.interferer_terms.data() + k * interferers;
    for (std::size_t j = 0; j < interferers; ++j) {
      terms[j] = power[j] * stream.exponential();
      user.beta += terms[j];
      if (!in_cluster[j]) user.beta_out_of_cluster += terms[j];
    }
  }
  return drop;
}

Drop draw_drop(ChannelModel model, const NetworkGeometry& geometry, const PathLossSpec& spec,
               const LinkBudget& budget, std::size_t n, RngStream& stream) {
  return model == ChannelModel::symmetric ? drop_symmetric(geometry, spec, budget, n, stream)
                                          : drop_asymmetric(geometry, spec, budget, n, stream);
}

}  // namespace cellsim
