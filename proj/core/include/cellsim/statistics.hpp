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
#include <functional>
#include <span>

namespace cellsim {

/// Two-sided 95% standard normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

/// Sample mean with a 95% normal-approximation confidence half-width.
struct Estimate {
  double mean = 0.0;
  double ci = 0.0;
  std::size_t count = 0;
};

/// Two-pass mean/variance in index order, so the result does not depend on
/// how the values were produced.
Estimate summarize(std::span<const double> values);

/// Kolmogorov-Smirnov sup-distance between the empirical CDF of \p samples
/// and \p reference_cdf. Throws std::invalid_argument on empty input.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& reference_cdf);

/// Asymptotic one-sample KS critical value at level 0.01: 1.628 / sqrt(m).
double ks_critical_value_1pct(std::size_t sample_count);

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double intercept_se = 0.0;
  double slope_se = 0.0;
};

/// Least squares of y = a + b x. With all sigma > 0 the fit is weighted by
/// 1/sigma^2 and the standard errors come from the weights; otherwise the
/// fit is unweighted and the errors come from the residuals.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y,
                     std::span<const double> sigma);

/// Least-squares coefficient of y = b x (no intercept).
double fit_through_origin(std::span<const double> x, std::span<const double> y);

}  // namespace cellsim
