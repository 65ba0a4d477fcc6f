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

#include "cellsim/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cellsim {

Estimate summarize(std::span<const double> values) {
  Estimate e;
  e.count = values.size();
  if (values.empty()) return e;
  double sum = 0.0;
  for (double v : values) sum += v;
  e.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return e;
  double ss = 0.0;
  for (double v : values) ss += (v - e.mean) * (v - e.mean);
  const double variance = ss / static_cast<double>(values.size() - 1);
  e.ci = kZ95 * std::sqrt(variance / static_cast<double>(values.size()));
  return e;
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& reference_cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double m = static_cast<double>(sorted.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = reference_cdf(sorted[i]);
    const double below = f - static_cast<double>(i) / m;
    const double above = static_cast<double>(i + 1) / m - f;
    sup = std::max({sup, below, above});
  }
  return sup;
}

double ks_critical_value_1pct(std::size_t sample_count) {
  return 1.628 / std::sqrt(static_cast<double>(sample_count));
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y,
                     std::span<const double> sigma) {
  const std::size_t m = x.size();
  if (m < 2 || y.size() != m || (!sigma.empty() && sigma.size() != m)) {
    throw std::invalid_argument("linear_fit: need >= 2 points of matching length");
  }
  const bool weighted =
      !sigma.empty() && std::all_of(sigma.begin(), sigma.end(), [](double s) { return s > 0.0; });

  double sw = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double w = weighted ? 1.0 / (sigma[i] * sigma[i]) : 1.0;
    sw += w;
    sx += w * x[i];
    sy += w * y[i];
    sxx += w * x[i] * x[i];
    sxy += w * x[i] * y[i];
  }
  const double det = sw * sxx - sx * sx;
  if (!(det > 0.0)) throw std::invalid_argument("linear_fit: x values are degenerate");

  LinearFit fit;
  fit.slope = (sw * sxy - sx * sy) / det;
  fit.intercept = (sxx * sy - sx * sxy) / det;
  double scale = 1.0;
  if (!weighted) {
    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = y[i] - fit.intercept - fit.slope * x[i];
      rss += r * r;
    }
    scale = m > 2 ? rss / static_cast<double>(m - 2) : 0.0;
  }
  fit.slope_se = std::sqrt(scale * sw / det);
  fit.intercept_se = std::sqrt(scale * sxx / det);
  return fit;
}

double fit_through_origin(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || x.size() != y.size()) {
    throw std::invalid_argument("fit_through_origin: need matching non-empty inputs");
  }
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_through_origin: x is identically zero");
  return sxy / sxx;
}

}  // namespace cellsim
