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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cellsim/montecarlo.hpp"
#include "cellsim/statistics.hpp"

namespace cellsim {

/// One value of a curve with its 95% half-width.
struct SeriesPoint {
  double n = 0.0;
  double value = 0.0;
  double ci = 0.0;
};

/// Which column of a Monte Carlo curve to read.
struct CurveQuantity {
  enum class Field { rate, beta_norm, delta_r, jp_rate };
  Field field = Field::delta_r;
  SchedulerKind kind = SchedulerKind::max_sinr;

  static CurveQuantity rate(SchedulerKind k) { return {Field::rate, k}; }
  static CurveQuantity beta_norm(SchedulerKind k) { return {Field::beta_norm, k}; }
  static CurveQuantity delta_r() { return {Field::delta_r, SchedulerKind::max_sinr}; }
  static CurveQuantity jp_rate() { return {Field::jp_rate, SchedulerKind::max_sinr}; }

  std::string name() const;
};

/// Throws std::invalid_argument when the column is absent from the curve.
std::vector<SeriesPoint> extract_series(std::span<const CurvePoint> curve, CurveQuantity quantity);

/// Level below which a quantity counts as vanished.
enum class QuantityScale {
  rate_gap,      ///< 0.05 bits
  interference,  ///< 0.1 (noise-normalised)
};

double vanishing_threshold(QuantityScale scale) noexcept;

enum class Verdict { vanishing, positive_limit, inconclusive_decreasing, inconclusive };

std::string_view to_string(Verdict verdict) noexcept;

struct ConvergenceDiagnostics {
  std::size_t tail_points = 0;
  /// Tail fit of value = a + b * log2(ln n) / ln n; b > 0 means decreasing in n.
  LinearFit tail_fit;
  /// Largest |v_i - v_{i-1}| / |v_i| over the tail.
  double max_relative_step = 0.0;
  bool significantly_decreasing = false;
  bool significantly_increasing = false;
};

struct ConvergenceVerdict {
  std::string quantity;
  Verdict verdict = Verdict::inconclusive;
  /// Last level for positive_limit, extrapolated intercept otherwise.
  Estimate limit_estimate;
  ConvergenceDiagnostics diagnostics;
};

/// Mechanical decision procedure over the tail (last half, at least four
/// points) of a curve with at least four points spanning two decades of n,
/// all with n > e^e:
///
///  - vanishing: last value below the threshold, no significant increase,
///    and the 95% interval of the extrapolated n -> infinity intercept
///    contains 0;
///  - positive_limit: last value's interval excludes 0, every tail step is
///    under 5% of the level, and the extrapolated intercept is
///    significantly positive;
///  - inconclusive_decreasing: significantly decreasing but neither of the
///    above;
///  - inconclusive otherwise.
ConvergenceVerdict convergence_verdict(std::span<const SeriesPoint> series, QuantityScale scale,
                                       std::string quantity_name);

/// v[i+1] < v[i] + sqrt(ci[i]^2 + ci[i+1]^2) for every consecutive pair.
bool decreasing_within_ci(std::span<const SeriesPoint> series);

/// v[i+1] > v[i] - sqrt(ci[i]^2 + ci[i+1]^2) for every consecutive pair.
bool nondecreasing_within_ci(std::span<const SeriesPoint> series);

/// Least-squares coefficient of value = b * log2(ln n) / ln n through the
/// origin.
double rate_gap_coefficient(std::span<const SeriesPoint> series);

}  // namespace cellsim
