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
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "cellsim/channel_model.hpp"

namespace cellsim {

inline constexpr std::size_t kClusterSize = 3;
inline constexpr double kDefaultConditionLimit = 1e8;

using ClusterMatrix = Eigen::Matrix3cd;

/// Channel of a three-BS cooperation cluster. Entry (u, b) is the complex
/// amplitude from BS b to the user selected in cell u.
struct ClusterChannel {
  ClusterMatrix gains = ClusterMatrix::Identity();
  double noise = 1.0;
};

class SingularChannelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ratio of largest to smallest singular value (infinity when singular).
double condition_number(const ClusterMatrix& h);

/// W = H^-1, so that H W is the identity. Throws SingularChannelError when
/// the condition number of H exceeds \p condition_limit.
ClusterMatrix zf_precoder(const ClusterChannel& channel,
                          double condition_limit = kDefaultConditionLimit);

struct PowerAllocation {
  std::vector<double> per_stream;
  double water_level = 0.0;
};

/// Sum-rate maximising power split over parallel channels with the given
/// gains. Streams below the water line get exactly zero.
PowerAllocation waterfilling(std::span<const double> effective_gains, double total_power);

/// sum_i log2(1 + g_i p_i)
double parallel_sum_rate(std::span<const double> gains, std::span<const double> powers);

/// Transmit power of each BS: sum_u p_u |W(b, u)|^2.
std::array<double, kClusterSize> bs_transmit_power(const ClusterMatrix& precoder,
                                                   std::span<const double> allocation);

struct NormalizedPrecoder {
  ClusterMatrix precoder;
  double scale = 1.0;
  std::array<double, kClusterSize> bs_power{};
};

/// Largest common scaling c of \p precoder that keeps every BS at or below
/// \p per_bs_power; the most loaded BS ends up exactly at the limit.
NormalizedPrecoder per_bs_normalize(const ClusterMatrix& precoder, const PowerAllocation& allocation,
                                    double per_bs_power);

struct JpOutcome {
  std::array<double, kClusterSize> user_rates{};
  double mean_rate = 0.0;
};

/// Zero-forcing joint transmission to the three selected users:
/// ZF with unit-norm beams, waterfilling over the resulting parallel
/// channels with sum power 3P, then one common scaling so that no BS
/// exceeds P. Out-of-cluster interference (noise-normalised) stays in the
/// SINR of each user.
JpOutcome jp_transmit(const ClusterChannel& channel, double per_bs_power,
                      std::span<const double, kClusterSize> out_of_cluster_beta,
                      double condition_limit = kDefaultConditionLimit);

/// Mean per-user rate of jp_transmit.
double jp_rate(const ClusterChannel& channel, double per_bs_power,
               std::span<const double, kClusterSize> out_of_cluster_beta);

/// The serving cell and its two cooperating neighbours, each with its own
/// first ring of interferers.
struct ClusterLayout {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  std::array<NetworkGeometry, kClusterSize> cells;
  /// link[c][b] indexes cells[c].interferers at cluster BS b; npos when b == c.
  std::array<std::array<std::size_t, kClusterSize>, kClusterSize> link{};
};

/// Builds the cluster from a geometry whose cluster_members name exactly two
/// interferers and whose rings contain each other's BSs (six-neighbour
/// tangent layout).
ClusterLayout make_cluster_layout(const NetworkGeometry& serving);

}  // namespace cellsim
