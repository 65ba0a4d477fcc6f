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

#include "cellsim/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cellsim::asymptotics {

namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::domain_error(message);
}

double validated_correction(double n) {
  require(n >= 3.0 && std::isfinite(n), "asymptotics: n must be >= 3");
  const double ln = std::log(n);
  return std::log2(ln) / ln;
}

}  // namespace

double f_centering(double n, double rho) {
  require(n > 1.0 && std::isfinite(n), "f_centering: n must exceed 1");
  require(rho > 0.0, "f_centering: rho must be positive");
  return std::log2(rho * std::log(n));
}

double rate_correction(double n) { return validated_correction(n); }

Bounds lemma1_bounds(double n, double rho) {
  const double c = validated_correction(n);
  const double f = f_centering(n, rho);
  return {f - c, f + c};
}

Bounds lemma2_bounds(double n, double rho, std::size_t interferers) {
  require(interferers >= 1, "lemma2_bounds: N must be >= 1");
  const double c = validated_correction(n);
  const double f = f_centering(n, rho);
  const double N = static_cast<double>(interferers);
  return {f - (N + 1.0) * c, f - (N - 1.0) * c};
}

Bounds theorem1_envelope(double n, std::size_t interferers) {
  require(interferers >= 1, "theorem1_envelope: N must be >= 1");
  const double c = validated_correction(n);
  const double N = static_cast<double>(interferers);
  return {std::max(0.0, (N - 2.0) * c), (N + 2.0) * c};
}

double gumbel_cdf_approx(double u) noexcept { return std::exp(-std::exp(-u)); }

double frechet_cdf(double t, double epsilon) {
  require(t > 0.0, "frechet_cdf: t must be positive");
  require(epsilon > 0.0, "frechet_cdf: epsilon must be positive");
  if (std::isinf(t)) return 1.0;
  return std::exp(-std::pow(t, -2.0 / epsilon));
}

double frechet_moment_term(double epsilon) {
  require(epsilon > 0.0 && std::isfinite(epsilon), "frechet_moment_term: epsilon must be positive");
  return std::pow(std::tgamma(1.0 + 2.0 / epsilon), epsilon / 2.0);
}

double frechet_scale(double n, double lambda, double epsilon) {
  require(n >= 1.0, "frechet_scale: n must be >= 1");
  require(lambda > 0.0, "frechet_scale: lambda must be positive");
  return lambda * frechet_moment_term(epsilon) * std::pow(n, epsilon / 2.0);
}

double lemma3_rate_asymptote(double n, double epsilon) {
  require(n >= 2.0, "lemma3_rate_asymptote: n must be >= 2");
  require(epsilon > 0.0, "lemma3_rate_asymptote: epsilon must be positive");
  return 0.5 * epsilon * std::log2(n);
}

double lemma3_rate_asymptote_nats(double n, double epsilon) {
  require(n >= 2.0, "lemma3_rate_asymptote_nats: n must be >= 2");
  require(epsilon > 0.0, "lemma3_rate_asymptote_nats: epsilon must be positive");
  return 0.5 * epsilon * std::log(n);
}

}  // namespace cellsim::asymptotics
