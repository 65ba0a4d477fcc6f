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

#include "cellsim/joint_processing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cellsim {

double condition_number(const ClusterMatrix& h) {
  if (!h.allFinite()) return std::numeric_limits<double>::infinity();
  const Eigen::JacobiSVD<ClusterMatrix> svd(h);
  const auto& s = svd.singularValues();
  if (s(2) <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / s(2);
}

ClusterMatrix zf_precoder(const ClusterChannel& channel, double condition_limit) {
  const double cond = condition_number(channel.gains);
  if (!(cond <= condition_limit)) {
    throw SingularChannelError("zf_precoder: channel condition number " + std::to_string(cond) +
                               " exceeds " + std::to_string(condition_limit));
  }
  return channel.gains.partialPivLu().solve(ClusterMatrix::Identity());
}

PowerAllocation waterfilling(std::span<const double> effective_gains, double total_power) {
  if (!(total_power > 0.0) || !std::isfinite(total_power)) {
    throw std::invalid_argument("waterfilling: total power must be positive");
  }
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < effective_gains.size(); ++i) {
    const double g = effective_gains[i];
    if (!(g >= 0.0) || !std::isfinite(g)) {
      throw std::invalid_argument("waterfilling: gains must be finite and nonnegative");
    }
    if (g > 0.0) active.push_back(i);
  }
  if (active.empty()) throw std::invalid_argument("waterfilling: all gains are zero");

  std::stable_sort(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
    return effective_gains[a] > effective_gains[b];
  });

  // Drop the weakest stream until the water level clears its floor.
  double level = 0.0;
  std::size_t count = active.size();
  for (; count > 0; --count) {
    double floor_sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) floor_sum += 1.0 / effective_gains[active[i]];
    level = (total_power + floor_sum) / static_cast<double>(count);
    if (level >= 1.0 / effective_gains[active[count - 1]]) break;
  }

  PowerAllocation allocation;
  allocation.per_stream.assign(effective_gains.size(), 0.0);
  allocation.water_level = level;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t s = active[i];
    allocation.per_stream[s] = std::max(0.0, level - 1.0 / effective_gains[s]);
  }
  return allocation;
}

double parallel_sum_rate(std::span<const double> gains, std::span<const double> powers) {
  if (gains.size() != powers.size()) {
    throw std::invalid_argument("parallel_sum_rate: size mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < gains.size(); ++i) total += std::log2(1.0 + gains[i] * powers[i]);
  return total;
}

std::array<double, kClusterSize> bs_transmit_power(const ClusterMatrix& precoder,
                                                   std::span<const double> allocation) {
  if (allocation.size() != kClusterSize) {
    throw std::invalid_argument("bs_transmit_power: allocation must have 3 streams");
  }
  std::array<double, kClusterSize> power{};
  for (std::size_t b = 0; b < kClusterSize; ++b) {
    for (std::size_t u = 0; u < kClusterSize; ++u) {
      power[b] += allocation[u] * std::norm(precoder(static_cast<Eigen::Index>(b),
                                                     static_cast<Eigen::Index>(u)));
    }
  }
  return power;
}

NormalizedPrecoder per_bs_normalize(const ClusterMatrix& precoder, const PowerAllocation& allocation,
                                    double per_bs_power) {
  if (!(per_bs_power > 0.0)) throw std::invalid_argument("per_bs_normalize: power must be positive");
  const auto raw = bs_transmit_power(precoder, allocation.per_stream);
  const double peak = *std::max_element(raw.begin(), raw.end());
  if (!(peak > 0.0) || !std::isfinite(peak)) {
    throw std::invalid_argument("per_bs_normalize: precoder carries no power");
  }
  NormalizedPrecoder out;
  out.scale = std::sqrt(per_bs_power / peak);
  out.precoder = out.scale * precoder;
  for (std::size_t b = 0; b < kClusterSize; ++b) out.bs_power[b] = raw[b] * (per_bs_power / peak);
  return out;
}

JpOutcome jp_transmit(const ClusterChannel& channel, double per_bs_power,
                      std::span<const double, kClusterSize> out_of_cluster_beta,
                      double condition_limit) {
  for (double b : out_of_cluster_beta) {
    if (!(b >= 0.0)) throw std::invalid_argument("jp_transmit: out-of-cluster beta must be >= 0");
  }
  ClusterMatrix beams = zf_precoder(channel, condition_limit);
  beams.colwise().normalize();

  const ClusterMatrix effective = channel.gains * beams;
  std::array<double, kClusterSize> gains{};
  for (std::size_t u = 0; u < kClusterSize; ++u) {
    const auto i = static_cast<Eigen::Index>(u);
    gains[u] = std::norm(effective(i, i)) / channel.noise;
  }
  const PowerAllocation allocation =
      waterfilling(gains, static_cast<double>(kClusterSize) * per_bs_power);
  const NormalizedPrecoder scaled = per_bs_normalize(beams, allocation, per_bs_power);

  JpOutcome outcome;
  const double scale2 = scaled.scale * scaled.scale;
  for (std::size_t u = 0; u < kClusterSize; ++u) {
    const double snr = scale2 * gains[u] * allocation.per_stream[u];
    outcome.user_rates[u] = std::log2(1.0 + snr / (1.0 + out_of_cluster_beta[u]));
  }
  outcome.mean_rate =
      std::accumulate(outcome.user_rates.begin(), outcome.user_rates.end(), 0.0) /
      static_cast<double>(kClusterSize);
  return outcome;
}

double jp_rate(const ClusterChannel& channel, double per_bs_power,
               std::span<const double, kClusterSize> out_of_cluster_beta) {
  return jp_transmit(channel, per_bs_power, out_of_cluster_beta).mean_rate;
}

ClusterLayout make_cluster_layout(const NetworkGeometry& serving) {
  serving.validate();
  if (serving.cluster_members.size() != kClusterSize - 1) {
    throw std::invalid_argument("make_cluster_layout: geometry must name two cluster members");
  }
  const std::size_t ring_size = serving.interferers.size();
  const std::array<Point, kClusterSize> sites = {
      serving.serving, serving.interferers[serving.cluster_members[0]],
      serving.interferers[serving.cluster_members[1]]};
  const double tolerance = 1e-9 * serving.cell_radius_km;

  ClusterLayout layout;
  for (std::size_t c = 0; c < kClusterSize; ++c) {
    NetworkGeometry cell =
        c == 0 ? serving
               : first_ring_geometry(serving.cell_radius_km, ring_size,
                                     serving.symmetric_radius_km, sites[c]);
    cell.cluster_members.clear();
    for (std::size_t b = 0; b < kClusterSize; ++b) {
      layout.link[c][b] = ClusterLayout::npos;
      if (b == c) continue;
      for (std::size_t j = 0; j < cell.interferers.size(); ++j) {
        if (distance_km(cell.interferers[j], sites[b]) <= tolerance) layout.link[c][b] = j;
      }
      if (layout.link[c][b] == ClusterLayout::npos) {
        throw std::invalid_argument(
            "make_cluster_layout: cluster BSs are not in each other's interferer rings");
      }
      cell.cluster_members.push_back(layout.link[c][b]);
    }
    layout.cells[c] = std::move(cell);
  }
  return layout;
}

}  // namespace cellsim
