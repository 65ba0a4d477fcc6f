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

#include "cellsim/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cellsim/asymptotics.hpp"
#include "cellsim/convergence.hpp"
#include "cellsim/csv_writer.hpp"
#include "cellsim/joint_processing.hpp"
#include "cellsim/rng.hpp"
#include "cellsim/statistics.hpp"

namespace cellsim::validation {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string num(double v) { return fmt("%.6g", v); }

// Runs \p body, timing it and turning exceptions into a failed result.
template <class Body>
CriterionResult guarded(std::string id, std::string name, Body&& body) {
  const auto start = Clock::now();
  CriterionResult r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {};
    r.passed = false;
    r.measured = std::numeric_limits<double>::quiet_NaN();
    r.detail = std::string("error: ") + e.what();
  }
  r.id = std::move(id);
  r.name = std::move(name);
  r.seconds += seconds_since(start);
  return r;
}

void check_budget(CriterionResult& r, double budget_seconds) {
  if (r.seconds > budget_seconds) {
    r.passed = false;
    r.detail += " over time budget " + num(budget_seconds) + " s";
  }
}

std::vector<std::size_t> trend_grid() { return geometric_grid(6, 14); }

struct Timed {
  std::vector<CurvePoint> curve;
  double seconds = 0.0;
};

Timed timed_run(const ScenarioConfig& config, unsigned workers) {
  const auto start = Clock::now();
  Timed t;
  t.curve = run_scenario(config, workers);
  t.seconds = seconds_since(start);
  return t;
}

// A failed run still has to produce one line for every criterion using it.
CriterionResult failed_run(std::string id, std::string name, const std::string& what) {
  CriterionResult r;
  r.id = std::move(id);
  r.name = std::move(name);
  r.measured = std::numeric_limits<double>::quiet_NaN();
  r.detail = "error: " + what;
  return r;
}

void emit(std::vector<CriterionResult>& out, std::ostream& report, CriterionResult r) {
  report << format_result(r) << std::endl;
  out.push_back(std::move(r));
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name << " measured=" << num(r.measured)
     << " threshold=\"" << r.requirement << "\" time=" << fmt("%.1f", r.seconds) << "s";
  if (!r.detail.empty()) os << " | " << r.detail;
  return os.str();
}

ScenarioConfig trend_scenario(ChannelModel model, const Settings& settings) {
  ScenarioConfig c;
  c.model = model;
  c.name = model == ChannelModel::symmetric ? "trend_symmetric" : "trend_asymmetric";
  c.n_grid = trend_grid();
  c.trials_per_n = 20000;
  c.master_seed = settings.seed + (model == ChannelModel::symmetric ? 0 : 1);
  c.jp_enabled = false;
  c.validate();
  return c;
}

ScenarioConfig jp_scenario(ChannelModel model, const Settings& settings) {
  ScenarioConfig c;
  c.model = model;
  c.name = model == ChannelModel::symmetric ? "jp_symmetric" : "jp_asymmetric";
  c.n_grid = trend_grid();
  c.trials_per_n = 2000;
  c.master_seed = settings.seed + (model == ChannelModel::symmetric ? 10 : 11);
  c.schedulers = {SchedulerKind::cluster_free};
  c.jp_enabled = true;
  c.validate();
  return c;
}

ScenarioConfig scaled_interference_scenario(const Settings& settings) {
  ScenarioConfig c = trend_scenario(ChannelModel::symmetric, settings);
  c.name = "trend_scaled_interference";
  c.master_seed = settings.seed + 20;
  c.schedulers = {SchedulerKind::max_sinr};
  RngStream scales(settings.seed, 0x5ca1e);
  c.interferer_gain_scale.clear();
  for (std::size_t j = 0; j < c.interferers; ++j) {
    c.interferer_gain_scale.push_back(0.25 + 3.75 * scales.uniform());
  }
  c.validate();
  return c;
}

CriterionResult check_per_drop_ordering(std::size_t drops_per_model, std::uint64_t seed,
                                        double budget_seconds) {
  auto r = guarded("C1", "per-drop-ordering", [&] {
    CriterionResult out;
    std::size_t violations = 0;
    std::size_t drops = 0;
    for (ChannelModel model : {ChannelModel::symmetric, ChannelModel::asymmetric}) {
      ScenarioConfig config;
      config.model = model;
      const NetworkGeometry geometry = config.geometry();
      const LinkBudget budget = config.link_budget();
      for (std::size_t d = 0; d < drops_per_model; ++d) {
        const std::size_t n = 1 + d % 64;
        RngStream stream(seed + static_cast<std::uint64_t>(model), d);
        const Drop drop = draw_drop(model, geometry, config.path_loss, budget, n, stream);
        const double up = schedule(drop, SchedulerKind::no_interference).rate_bpcu;
        const double best = schedule(drop, SchedulerKind::max_sinr).rate_bpcu;
        const double gain = schedule(drop, SchedulerKind::max_gain).rate_bpcu;
        if (!(up >= best) || !(best >= gain)) ++violations;
        ++drops;
      }
    }
    out.measured = static_cast<double>(violations);
    out.requirement = "== 0";
    out.passed = violations == 0;
    out.detail = std::to_string(drops) + " drops, n in 1..64, both models";
    return out;
  });
  check_budget(r, budget_seconds);
  return r;
}

CriterionResult check_gumbel_limit(std::size_t n, std::size_t trials, std::uint64_t seed,
                                   const std::function<double(double)>& reference_cdf,
                                   double budget_seconds) {
  auto r = guarded("C2", "gumbel-limit", [&] {
    CriterionResult out;
    std::vector<double> maxima(trials);
    const double shift = std::log(static_cast<double>(n));
    for (std::size_t t = 0; t < trials; ++t) {
      RngStream stream(seed, t);
      double m = 0.0;
      for (std::size_t k = 0; k < n; ++k) m = std::max(m, stream.exponential());
      maxima[t] = m - shift;
    }
    out.measured = ks_distance(maxima, reference_cdf);
    out.requirement = "<= 0.01";
    out.passed = out.measured <= 0.01;
    out.detail = "n=" + std::to_string(n) + " trials=" + std::to_string(trials) +
                 " ks_1pct=" + num(ks_critical_value_1pct(trials));
    return out;
  });
  check_budget(r, budget_seconds);
  return r;
}

CriterionResult check_frechet_limit(std::size_t n, std::size_t trials, double epsilon,
                                    std::uint64_t seed, double budget_seconds) {
  auto r = guarded("C3", "frechet-limit", [&] {
    CriterionResult out;
    // Unit disc, lambda = 1 and unit SNR: the normaliser assumes all three.
    const NetworkGeometry geometry = first_ring_geometry(1.0, 6, 1.0);
    const PathLossSpec spec = GenericPathLoss{1.0, epsilon};
    const LinkBudget budget{0.0, 0.0, {}};
    const double scale = asymptotics::frechet_scale(static_cast<double>(n), 1.0, epsilon);
    std::vector<double> ratios(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      RngStream stream(seed, t);
      const Drop drop = drop_asymmetric(geometry, spec, budget, n, stream);
      double best = 0.0;
      for (const auto& u : drop.users) best = std::max(best, u.alpha);
      ratios[t] = best / scale;
    }
    out.measured = ks_distance(ratios, [epsilon](double t) {
      return t > 0.0 ? asymptotics::frechet_cdf(t, epsilon) : 0.0;
    });
    out.requirement = "<= 0.03";
    out.passed = out.measured <= 0.03;
    out.detail = "n=" + std::to_string(n) + " trials=" + std::to_string(trials) +
                 " epsilon=" + num(epsilon);
    return out;
  });
  check_budget(r, budget_seconds);
  return r;
}

CriterionResult check_rate_gap_trend(std::span<const CurvePoint> curve, std::size_t interferers,
                                     double run_seconds, double budget_seconds) {
  auto r = guarded("C4", "rate-gap-trend", [&] {
    CriterionResult out;
    const auto series = extract_series(curve, CurveQuantity::delta_r());
    const bool decreasing = decreasing_within_ci(series);
    const double coef = rate_gap_coefficient(series);
    const double lo = 0.5 * (static_cast<double>(interferers) - 2.0);
    const double hi = 1.5 * (static_cast<double>(interferers) + 2.0);
    out.measured = coef;
    out.requirement = "in [" + num(lo) + ", " + num(hi) + "] and decreasing";
    out.passed = decreasing && coef > 0.0 && coef >= lo && coef <= hi;
    out.detail = std::string("decreasing=") + (decreasing ? "yes" : "no") + " delta_R " +
                 num(series.front().value) + " -> " + num(series.back().value);
    out.seconds = run_seconds;
    return out;
  });
  check_budget(r, budget_seconds);
  return r;
}

CriterionResult check_vanishing_interference(std::span<const CurvePoint> curve) {
  return guarded("C5", "vanishing-interference", [&] {
    CriterionResult out;
    const auto series = extract_series(curve, CurveQuantity::beta_norm(SchedulerKind::max_sinr));
    const bool decreasing = decreasing_within_ci(series);
    const double ratio = series.front().value / series.back().value;
    const auto verdict = convergence_verdict(series, QuantityScale::interference, "beta_norm");
    const bool verdict_ok = verdict.verdict == Verdict::vanishing ||
                            verdict.verdict == Verdict::inconclusive_decreasing;
    out.measured = ratio;
    out.requirement = ">= 2, decreasing, not positive-limit";
    out.passed = decreasing && ratio >= 2.0 && verdict_ok;
    out.detail = std::string("decreasing=") + (decreasing ? "yes" : "no") +
                 " verdict=" + std::string(to_string(verdict.verdict)) + " beta " +
                 num(series.front().value) + " -> " + num(series.back().value);
    return out;
  });
}

CriterionResult check_positive_interference_limit(std::span<const CurvePoint> curve,
                                                  double run_seconds, double budget_seconds) {
  auto r = guarded("C6", "positive-interference-limit", [&] {
    CriterionResult out;
    const auto beta = extract_series(curve, CurveQuantity::beta_norm(SchedulerKind::max_sinr));
    const auto gap = extract_series(curve, CurveQuantity::delta_r());
    const auto vb = convergence_verdict(beta, QuantityScale::interference, "beta_norm");
    const auto vg = convergence_verdict(gap, QuantityScale::rate_gap, "delta_R");
    const auto& last = beta.back();
    out.measured = vb.diagnostics.max_relative_step;
    out.requirement = "< 0.05, both verdicts positive-limit";
    out.passed = vb.verdict == Verdict::positive_limit && vg.verdict == Verdict::positive_limit &&
                 out.measured < 0.05 && last.value - last.ci > 0.0;
    out.detail = "beta=" + num(last.value) + "+-" + num(last.ci) +
                 " verdict(beta)=" + std::string(to_string(vb.verdict)) +
                 " verdict(delta_R)=" + std::string(to_string(vg.verdict)) +
                 " delta_R=" + num(gap.back().value);
    out.seconds = run_seconds;
    return out;
  });
  check_budget(r, budget_seconds);
  return r;
}

CriterionResult check_max_gain_overlap(std::span<const CurvePoint> curve, std::size_t min_n,
                                       double tolerance) {
  return guarded("C7", "max-gain-overlap", [&] {
    CriterionResult out;
    double worst = 0.0;
    std::size_t checked = 0;
    for (const auto& p : curve) {
      if (p.n < min_n) continue;
      const auto* s = p.find(SchedulerKind::max_sinr);
      const auto* g = p.find(SchedulerKind::max_gain);
      if (!s || !g) throw std::invalid_argument("curve lacks max_sinr or max_gain");
      worst = std::max(worst, std::abs(s->rate.mean - g->rate.mean) / s->rate.mean);
      ++checked;
    }
    if (checked == 0) throw std::invalid_argument("no grid point at or above min_n");
    out.measured = worst;
    out.requirement = "<= " + num(tolerance);
    out.passed = worst <= tolerance;
    out.detail = std::to_string(checked) + " points with n >= " + std::to_string(min_n);
    return out;
  });
}

CriterionResult check_jp_matches_bound(std::span<const CurvePoint> symmetric,
                                       std::span<const CurvePoint> asymmetric, double tolerance) {
  return guarded("C8", "jp-matches-bound", [&] {
    CriterionResult out;
    double worst = 0.0;
    std::string where;
    for (auto curve : {symmetric, asymmetric}) {
      for (const auto& p : curve) {
        const auto* cf = p.find(SchedulerKind::cluster_free);
        if (!cf || !p.jp_rate) throw std::invalid_argument("curve lacks cluster_free or jp_rate");
        const double rel = std::abs(p.jp_rate->mean - cf->rate.mean) / cf->rate.mean;
        if (rel >= worst) {
          worst = rel;
          where = (curve.data() == symmetric.data() ? "symmetric" : "asymmetric") +
                  std::string(" n=") + std::to_string(p.n) + " jp=" + num(p.jp_rate->mean) +
                  " bound=" + num(cf->rate.mean);
        }
      }
    }
    out.measured = worst;
    out.requirement = "<= " + num(tolerance);
    out.passed = worst <= tolerance;
    out.detail = "worst at " + where;
    return out;
  });
}

double grid_search_sum_rate(std::span<const double, 3> gains, double total_power, double step) {
  if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("grid_search_sum_rate: bad step");
  if (!(total_power > 0.0)) throw std::invalid_argument("grid_search_sum_rate: bad power");
  const auto cells = static_cast<std::size_t>(std::llround(1.0 / step));
  std::array<std::vector<double>, 3> table;
  for (std::size_t i = 0; i < 3; ++i) {
    table[i].resize(cells + 1);
    for (std::size_t k = 0; k <= cells; ++k) {
      const double p = total_power * static_cast<double>(k) / static_cast<double>(cells);
      table[i][k] = std::log2(1.0 + gains[i] * p);
    }
  }
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a <= cells; ++a) {
    for (std::size_t b = 0; a + b <= cells; ++b) {
      best = std::max(best, table[0][a] + table[1][b] + table[2][cells - a - b]);
    }
  }
  return best;
}

CriterionResult check_waterfilling_oracle(std::size_t instances, std::uint64_t seed) {
  return guarded("C9", "waterfilling-oracle", [&] {
    CriterionResult out;
    RngStream rng(seed, 9);
    double worst_gap = -std::numeric_limits<double>::infinity();
    double worst_sum = 0.0;
    for (std::size_t i = 0; i < instances; ++i) {
      std::array<double, 3> g{};
      for (double& x : g) x = std::pow(10.0, -2.0 + 4.0 * rng.uniform());
      const double total = 0.1 + 9.9 * rng.uniform();
      const PowerAllocation alloc = waterfilling(g, total);
      const double rate = parallel_sum_rate(g, alloc.per_stream);
      double sum = 0.0;
      for (double p : alloc.per_stream) sum += p;
      worst_sum = std::max(worst_sum, std::abs(sum - total) / total);
      worst_gap = std::max(worst_gap, grid_search_sum_rate(g, total, 1e-3) - rate);
    }
    out.measured = worst_gap;
    out.requirement = "oracle - waterfilling <= 1e-4 bits, power sum within 1e-12";
    out.passed = worst_gap <= 1e-4 && worst_sum <= 1e-12;
    out.detail = std::to_string(instances) + " instances, worst power-sum error " + num(worst_sum);
    return out;
  });
}

CriterionResult check_zero_forcing(std::size_t instances, std::uint64_t seed) {
  return guarded("C10", "zero-forcing", [&] {
    CriterionResult out;
    RngStream rng(seed, 10);
    constexpr double kConditionCap = 100.0;
    constexpr double kPower = 1.0;
    double worst_offdiag = 0.0;
    double worst_peak = 0.0;
    double worst_excess = 0.0;
    std::size_t rejected = 0;
    for (std::size_t i = 0; i < instances;) {
      ClusterChannel ch;
      for (Eigen::Index u = 0; u < 3; ++u) {
        for (Eigen::Index b = 0; b < 3; ++b) {
          const double mag = std::sqrt(rng.exponential());
          ch.gains(u, b) = std::polar(mag, 2.0 * std::numbers::pi * rng.uniform());
        }
      }
      if (condition_number(ch.gains) > kConditionCap) {
        ++rejected;
        continue;
      }
      ++i;
      ClusterMatrix w = zf_precoder(ch);
      const ClusterMatrix hw = ch.gains * w;
      double diag = 0.0;
      double off = 0.0;
      for (Eigen::Index u = 0; u < 3; ++u) {
        for (Eigen::Index b = 0; b < 3; ++b) {
          double& slot = u == b ? diag : off;
          slot = std::max(slot, std::abs(hw(u, b)));
        }
      }
      worst_offdiag = std::max(worst_offdiag, off / diag);

      w.colwise().normalize();
      const ClusterMatrix eff = ch.gains * w;
      std::array<double, 3> g{};
      for (Eigen::Index u = 0; u < 3; ++u) g[static_cast<std::size_t>(u)] = std::norm(eff(u, u));
      const PowerAllocation alloc = waterfilling(g, 3.0 * kPower);
      const NormalizedPrecoder np = per_bs_normalize(w, alloc, kPower);
      const auto bs = bs_transmit_power(np.precoder, alloc.per_stream);
      const double peak = *std::max_element(bs.begin(), bs.end());
      worst_peak = std::max(worst_peak, std::abs(peak - kPower) / kPower);
      worst_excess = std::max(worst_excess, (peak - kPower) / kPower);
    }
    out.measured = worst_offdiag;
    out.requirement = "off-diagonal <= 1e-10, peak BS power within 1e-12 of P";
    out.passed = worst_offdiag <= 1e-10 && worst_peak <= 1e-12 && worst_excess <= 1e-12;
    out.detail = std::to_string(instances) + " channels (cond <= 100, " + std::to_string(rejected) +
                 " redrawn), worst peak error " + num(worst_peak);
    return out;
  });
}

CriterionResult check_path_loss_invariance(std::span<const CurvePoint> scaled_curve) {
  return guarded("C11", "path-loss-invariance", [&] {
    CriterionResult out;
    const auto series = extract_series(scaled_curve, CurveQuantity::delta_r());
    const bool decreasing = decreasing_within_ci(series);
    const double coef = rate_gap_coefficient(series);
    out.measured = coef;
    out.requirement = "> 0 and decreasing";
    out.passed = decreasing && coef > 0.0;
    out.detail = std::string("decreasing=") + (decreasing ? "yes" : "no") + " delta_R " +
                 num(series.front().value) + " -> " + num(series.back().value);
    return out;
  });
}

CriterionResult check_worker_determinism(unsigned workers_a, unsigned workers_b, std::uint64_t seed) {
  return guarded("C12", "worker-determinism", [&] {
    CriterionResult out;
    std::size_t mismatches = 0;
    std::size_t bytes = 0;
    for (ChannelModel model : {ChannelModel::symmetric, ChannelModel::asymmetric}) {
      ScenarioConfig c;
      c.name = "determinism";
      c.model = model;
      c.n_grid = {1, 4, 32, 256};
      c.trials_per_n = 300;
      c.master_seed = seed;
      c.jp_enabled = true;
      std::ostringstream a;
      std::ostringstream b;
      write_curve_csv(a, c, run_scenario(c, workers_a));
      write_curve_csv(b, c, run_scenario(c, workers_b));
      if (a.str() != b.str()) ++mismatches;
      bytes += a.str().size();
    }
    out.measured = static_cast<double>(mismatches);
    out.requirement = "== 0 differing CSVs";
    out.passed = mismatches == 0;
    out.detail = std::to_string(workers_a) + " vs " + std::to_string(workers_b) + " workers, " +
                 std::to_string(bytes) + " CSV bytes compared";
    return out;
  });
}

Suite parse_suite(const std::string& text) {
  if (text == "symmetric-bounds") return Suite::symmetric_bounds;
  if (text == "asymmetric-limits") return Suite::asymmetric_limits;
  if (text == "evt-cdf") return Suite::evt_cdf;
  if (text == "jp-sanity") return Suite::jp_sanity;
  throw std::invalid_argument("unknown validation suite '" + text +
                              "' (expected symmetric-bounds, asymmetric-limits, evt-cdf, jp-sanity)");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::symmetric_bounds: return "symmetric-bounds";
    case Suite::asymmetric_limits: return "asymmetric-limits";
    case Suite::evt_cdf: return "evt-cdf";
    case Suite::jp_sanity: return "jp-sanity";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kOrderingDrops = 100000;
constexpr std::size_t kInterferers = 6;

void run_evt(const Settings& s, std::vector<CriterionResult>& out, std::ostream& report) {
  emit(out, report, check_gumbel_limit(1000, 100000, s.seed + 2, asymptotics::gumbel_cdf_approx));
  emit(out, report, check_frechet_limit(4096, 10000, 4.0, s.seed + 3));
}

void run_symmetric(const Settings& s, std::vector<CriterionResult>& out, std::ostream& report,
                   bool with_scaled) {
  Timed trend;
  std::string error;
  try {
    trend = timed_run(trend_scenario(ChannelModel::symmetric, s), s.workers);
  } catch (const std::exception& e) {
    error = e.what();
  }
  if (error.empty()) {
    emit(out, report, check_rate_gap_trend(trend.curve, kInterferers, trend.seconds));
    emit(out, report, check_vanishing_interference(trend.curve));
  } else {
    emit(out, report, failed_run("C4", "rate-gap-trend", error));
    emit(out, report, failed_run("C5", "vanishing-interference", error));
  }
  if (!with_scaled) return;
  try {
    const Timed scaled = timed_run(scaled_interference_scenario(s), s.workers);
    auto r = check_path_loss_invariance(scaled.curve);
    r.seconds += scaled.seconds;
    emit(out, report, std::move(r));
  } catch (const std::exception& e) {
    emit(out, report, failed_run("C11", "path-loss-invariance", e.what()));
  }
}

void run_asymmetric(const Settings& s, std::vector<CriterionResult>& out, std::ostream& report) {
  try {
    const Timed trend = timed_run(trend_scenario(ChannelModel::asymmetric, s), s.workers);
    emit(out, report, check_positive_interference_limit(trend.curve, trend.seconds));
    emit(out, report, check_max_gain_overlap(trend.curve));
  } catch (const std::exception& e) {
    emit(out, report, failed_run("C6", "positive-interference-limit", e.what()));
    emit(out, report, failed_run("C7", "max-gain-overlap", e.what()));
  }
}

void run_jp(const Settings& s, std::vector<CriterionResult>& out, std::ostream& report) {
  try {
    const Timed sym = timed_run(jp_scenario(ChannelModel::symmetric, s), s.workers);
    const Timed asym = timed_run(jp_scenario(ChannelModel::asymmetric, s), s.workers);
    auto r = check_jp_matches_bound(sym.curve, asym.curve);
    r.seconds += sym.seconds + asym.seconds;
    emit(out, report, std::move(r));
  } catch (const std::exception& e) {
    emit(out, report, failed_run("C8", "jp-matches-bound", e.what()));
  }
  emit(out, report, check_waterfilling_oracle(1000, s.seed + 9));
  emit(out, report, check_zero_forcing(10000, s.seed + 10));
}

}  // namespace

std::vector<CriterionResult> run_suite(Suite suite, const Settings& settings, std::ostream& report) {
  std::vector<CriterionResult> out;
  switch (suite) {
    case Suite::evt_cdf:
      run_evt(settings, out, report);
      break;
    case Suite::symmetric_bounds:
      emit(out, report, check_per_drop_ordering(kOrderingDrops, settings.seed + 1));
      run_symmetric(settings, out, report, true);
      break;
    case Suite::asymmetric_limits:
      run_asymmetric(settings, out, report);
      break;
    case Suite::jp_sanity:
      run_jp(settings, out, report);
      break;
  }
  return out;
}

std::vector<CriterionResult> run_all(const Settings& settings, std::ostream& report) {
  std::vector<CriterionResult> out;
  emit(out, report, check_per_drop_ordering(kOrderingDrops, settings.seed + 1));
  run_evt(settings, out, report);
  run_symmetric(settings, out, report, false);
  run_asymmetric(settings, out, report);
  run_jp(settings, out, report);
  try {
    const Timed scaled = timed_run(scaled_interference_scenario(settings), settings.workers);
    auto r = check_path_loss_invariance(scaled.curve);
    r.seconds += scaled.seconds;
    emit(out, report, std::move(r));
  } catch (const std::exception& e) {
    emit(out, report, failed_run("C11", "path-loss-invariance", e.what()));
  }
  emit(out, report, check_worker_determinism(1, 8, settings.seed + 12));
  return out;
}

CriterionResult run_criterion(const std::string& id, const Settings& s) {
  const auto symmetric = [&] { return timed_run(trend_scenario(ChannelModel::symmetric, s), s.workers); };
  const auto asymmetric = [&] { return timed_run(trend_scenario(ChannelModel::asymmetric, s), s.workers); };
  // Sweeps run inside guarded() so a failing run still yields a result.
  const auto with_run = [](std::string cid, std::string name, auto&& body) {
    try {
      return body();
    } catch (const std::exception& e) {
      return failed_run(std::move(cid), std::move(name), e.what());
    }
  };

  if (id == "C1") return check_per_drop_ordering(kOrderingDrops, s.seed + 1);
  if (id == "C2") return check_gumbel_limit(1000, 100000, s.seed + 2, asymptotics::gumbel_cdf_approx);
  if (id == "C3") return check_frechet_limit(4096, 10000, 4.0, s.seed + 3);
  if (id == "C4") {
    return with_run("C4", "rate-gap-trend", [&] {
      const Timed t = symmetric();
      return check_rate_gap_trend(t.curve, kInterferers, t.seconds);
    });
  }
  if (id == "C5") {
    return with_run("C5", "vanishing-interference", [&] {
      const Timed t = symmetric();
      auto r = check_vanishing_interference(t.curve);
      r.seconds += t.seconds;
      return r;
    });
  }
  if (id == "C6") {
    return with_run("C6", "positive-interference-limit", [&] {
      const Timed t = asymmetric();
      return check_positive_interference_limit(t.curve, t.seconds);
    });
  }
  if (id == "C7") {
    return with_run("C7", "max-gain-overlap", [&] {
      const Timed t = asymmetric();
      auto r = check_max_gain_overlap(t.curve);
      r.seconds += t.seconds;
      return r;
    });
  }
  if (id == "C8") {
    return with_run("C8", "jp-matches-bound", [&] {
      const Timed sym = timed_run(jp_scenario(ChannelModel::symmetric, s), s.workers);
      const Timed asym = timed_run(jp_scenario(ChannelModel::asymmetric, s), s.workers);
      auto r = check_jp_matches_bound(sym.curve, asym.curve);
      r.seconds += sym.seconds + asym.seconds;
      return r;
    });
  }
  if (id == "C9") return check_waterfilling_oracle(1000, s.seed + 9);
  if (id == "C10") return check_zero_forcing(10000, s.seed + 10);
  if (id == "C11") {
    return with_run("C11", "path-loss-invariance", [&] {
      const Timed t = timed_run(scaled_interference_scenario(s), s.workers);
      auto r = check_path_loss_invariance(t.curve);
      r.seconds += t.seconds;
      return r;
    });
  }
  if (id == "C12") return check_worker_determinism(1, 8, s.seed + 12);
  throw std::invalid_argument("unknown criterion '" + id + "' (expected C1..C12)");
}

}  // namespace cellsim::validation
