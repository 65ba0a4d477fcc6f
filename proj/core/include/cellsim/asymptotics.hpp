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

namespace cellsim::asymptotics {

// First-order large-n expressions for the rate and interference behaviour
// of max-SINR scheduling. Every o() / O() correction is dropped, so these
// are envelopes for trends, not finite-n guarantees. Logarithms are natural
// unless the name says otherwise; rates are in bits. The user count n is a
// double so that non-integer test points (n = e) work.

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// log2(rho * ln n). Requires n > 1 and rho > 0.
double f_centering(double n, double rho);

/// log2(ln n) / ln n, the convergence scale shared by all symmetric bounds.
/// Requires n >= 3.
double rate_correction(double n);

/// Bounds on E[log2(1 + max_k alpha_k)] in the symmetric model:
/// f(n) -/+ rate_correction(n).
Bounds lemma1_bounds(double n, double rho);

/// Bounds on the max-SINR rate with N equal-gain interferers:
/// [f(n) - (N+1) c(n), f(n) - (N-1) c(n)].
Bounds lemma2_bounds(double n, double rho, std::size_t interferers);

/// Envelope of the rate gap: [(N-2) c(n), (N+2) c(n)], lower end clamped at 0.
Bounds theorem1_envelope(double n, std::size_t interferers);

/// exp(-exp(-u)): limit CDF of max of n unit exponentials minus ln n.
double gumbel_cdf_approx(double u) noexcept;

/// exp(-t^(-2/epsilon)) for t > 0.
double frechet_cdf(double t, double epsilon);

/// Gamma(1 + 2/epsilon)^(epsilon/2) = E[Y^(2/epsilon)]^(epsilon/2) for a unit
/// exponential Y.
double frechet_moment_term(double epsilon);

/// lambda * Gamma(1 + 2/epsilon)^(epsilon/2) * n^(epsilon/2): normaliser of
/// the strongest direct gain among n users uniform on the unit disc.
double frechet_scale(double n, double lambda, double epsilon);

/// (epsilon/2) * log2(n): growth of the interference-free rate under the
/// power-law model, read in bits.
double lemma3_rate_asymptote(double n, double epsilon);

/// (epsilon/2) * ln(n), the natural-log reading of the same statement.
double lemma3_rate_asymptote_nats(double n, double epsilon);

}  // namespace cellsim::asymptotics
