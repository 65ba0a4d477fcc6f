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

#include "cellsim/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cellsim/asymptotics.hpp"

namespace cellsim {

namespace {

constexpr double kMaxRelativeStep = 0.05;

}  // namespace

std::string CurveQuantity::name() const {
  switch (field) {
    case Field::rate: return std::string(to_string(kind)) + "_mean_rate";
    case Field::beta_norm: return std::string(to_string(kind)) + "_mean_beta_norm";
    case Field::delta_r: return "delta_R";
    case Field::jp_rate: return "jp_rate";
  }
  return "unknown";
}

std::vector<SeriesPoint> extract_series(std::span<const CurvePoint> curve, CurveQuantity quantity) {
  std::vector<SeriesPoint> out;
  out.reserve(curve.size());
  for (const CurvePoint& p : curve) {
    const Estimate* e = nullptr;
    switch (quantity.field) {
      case CurveQuantity::Field::delta_r: e = &p.delta_r; break;
      case CurveQuantity::Field::jp_rate: e = p.jp_rate ? &*p.jp_rate : nullptr; break;
      case CurveQuantity::Field::rate:
      case CurveQuantity::Field::beta_norm: {
        const SchedulerStats* s = p.find(quantity.kind);
        if (s) e = quantity.field == CurveQuantity::Field::rate ? &s->rate : &s->beta_norm;
        break;
      }
    }
    if (!e) throw std::invalid_argument("extract_series: curve has no column " + quantity.name());
    out.push_back({static_cast<double>(p.n), e->mean, e->ci});
  }
  return out;
}

double vanishing_threshold(QuantityScale scale) noexcept {
  return scale == QuantityScale::rate_gap ? 0.05 : 0.1;
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::vanishing: return "vanishing";
    case Verdict::positive_limit: return "positive-limit";
    case Verdict::inconclusive_decreasing: return "inconclusive-decreasing";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ConvergenceVerdict convergence_verdict(std::span<const SeriesPoint> series, QuantityScale scale,
                                       std::string quantity_name) {
  if (series.size() < 4) throw std::invalid_argument("convergence_verdict: need >= 4 points");
  if (series.back().n < 100.0 * series.front().n) {
    throw std::invalid_argument("convergence_verdict: curve must span two decades of n");
  }
  const std::size_t tail = std::max<std::size_t>(4, (series.size() + 1) / 2);
  const auto points = series.subspan(series.size() - tail);

  std::vector<double> x, y, sigma;
  for (const SeriesPoint& p : points) {
    if (!(p.n > std::exp(std::numbers::e))) {
      throw std::invalid_argument("convergence_verdict: tail points need n > e^e");
    }
    x.push_back(asymptotics::rate_correction(p.n));
    y.push_back(p.value);
    sigma.push_back(p.ci / kZ95);
  }

  ConvergenceVerdict out;
  out.quantity = std::move(quantity_name);
  auto& diag = out.diagnostics;
  diag.tail_points = tail;
  diag.tail_fit = linear_fit(x, y, sigma);
  diag.significantly_decreasing = diag.tail_fit.slope > kZ95 * diag.tail_fit.slope_se;
  diag.significantly_increasing = diag.tail_fit.slope < -kZ95 * diag.tail_fit.slope_se;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double level = std::abs(points[i].value);
    const double step = std::abs(points[i].value - points[i - 1].value);
    diag.max_relative_step = std::max(
        diag.max_relative_step, level > 0.0 ? step / level : (step > 0.0 ? INFINITY : 0.0));
  }

  const Estimate intercept{diag.tail_fit.intercept, kZ95 * diag.tail_fit.intercept_se, tail};
  const SeriesPoint& last = points.back();

  const bool vanishing = last.value < vanishing_threshold(scale) && !diag.significantly_increasing &&
                         intercept.mean - intercept.ci <= 0.0 && 0.0 <= intercept.mean + intercept.ci;
  const bool positive = last.value - last.ci > 0.0 && diag.max_relative_step < kMaxRelativeStep &&
                        intercept.mean - intercept.ci > 0.0;

  if (vanishing) {
    out.verdict = Verdict::vanishing;
    out.limit_estimate = intercept;
  } else if (positive) {
    out.verdict = Verdict::positive_limit;
    out.limit_estimate = {last.value, last.ci, tail};
  } else if (diag.significantly_decreasing) {
    out.verdict = Verdict::inconclusive_decreasing;
    out.limit_estimate = intercept;
  } else {
    out.verdict = Verdict::inconclusive;
    out.limit_estimate = intercept;
  }
  return out;
}

bool decreasing_within_ci(std::span<const SeriesPoint> series) {
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double slack = std::hypot(series[i - 1].ci, series[i].ci);
    if (!(series[i].value < series[i - 1].value + slack)) return false;
  }
  return true;
}

bool nondecreasing_within_ci(std::span<const SeriesPoint> series) {
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double slack = std::hypot(series[i - 1].ci, series[i].ci);
    if (!(series[i].value > series[i - 1].value - slack)) return false;
  }
  return true;
}

double rate_gap_coefficient(std::span<const SeriesPoint> series) {
  std::vector<double> x, y;
  for (const SeriesPoint& p : series) {
    x.push_back(asymptotics::rate_correction(p.n));
    y.push_back(p.value);
  }
  return fit_through_origin(x, y);
}

}  // namespace cellsim
