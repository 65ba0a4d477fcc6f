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

#include "cellsim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "cellsim/joint_processing.hpp"

namespace cellsim {

namespace {

constexpr std::uint64_t kDropSubstream = 0;
constexpr std::uint64_t kClusterSubstreamBase = 1;
constexpr std::size_t kMaxSingularRedraws = 64;

struct Context {
  const ScenarioConfig& config;
  NetworkGeometry geometry;
  LinkBudget budget;
  std::optional<ClusterLayout> cluster;
  std::vector<SchedulerKind> kinds;
};

// Column-major per-trial results; reduced in trial order afterwards.
struct TrialTable {
  std::vector<std::vector<double>> rate;
  std::vector<std::vector<double>> beta;
  std::vector<double> gap;
  std::vector<double> jp;
  std::vector<std::size_t> redraws;

  TrialTable(std::size_t kinds, std::size_t trials, bool with_jp)
      : rate(kinds, std::vector<double>(trials)),
        beta(kinds, std::vector<double>(trials)),
        gap(trials),
        jp(with_jp ? trials : 0),
        redraws(trials, 0) {}
};

// One joint-processing attempt. Cells 1 and 2 are drawn from \p stream; the
// serving cell reuses the trial's drop and cluster-free selection.
double jp_attempt(const Context& ctx, std::size_t n, const Drop& serving,
                  const SchedulerDecision& serving_choice, const RngStream& stream) {
  const ClusterLayout& layout = *ctx.cluster;
  const LinkBudget budget{ctx.config.power_dbm, ctx.config.noise_dbm, {}};

  std::array<Drop, kClusterSize> drops;
  std::array<std::size_t, kClusterSize> chosen{};
  chosen[0] = serving_choice.selected_index;
  for (std::size_t c = 1; c < kClusterSize; ++c) {
    RngStream cell_stream = stream.substream(c);
    drops[c] = draw_drop(ctx.config.model, layout.cells[c], ctx.config.path_loss, budget, n, cell_stream);
    chosen[c] = schedule(drops[c], SchedulerKind::cluster_free).selected_index;
  }

  RngStream phases = stream.substream(0);
  ClusterChannel channel;
  std::array<double, kClusterSize> beta_out{};
  for (std::size_t u = 0; u < kClusterSize; ++u) {
    const Drop& drop = u == 0 ? serving : drops[u];
    const UserSample& user = drop.users[chosen[u]];
    const auto terms = drop.terms_of(chosen[u]);
    beta_out[u] = user.beta_out_of_cluster;
    for (std::size_t b = 0; b < kClusterSize; ++b) {
      const double power = u == b ? user.alpha : terms[layout.link[u][b]];
      const double phase = 2.0 * std::numbers::pi * phases.uniform();
      channel.gains(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(b)) =
          std::polar(std::sqrt(power), phase);
    }
  }
  return jp_rate(channel, 1.0, beta_out);
}

void run_trial(const Context& ctx, std::size_t n, std::size_t trial, TrialTable& table) {
  const RngStream trial_stream(ctx.config.master_seed, trial_stream_id(n, trial));
  RngStream drop_stream = trial_stream.substream(kDropSubstream);
  const Drop drop =
      draw_drop(ctx.config.model, ctx.geometry, ctx.config.path_loss, ctx.budget, n, drop_stream);

  const SchedulerDecision up = schedule(drop, SchedulerKind::no_interference);
  const SchedulerDecision best = schedule(drop, SchedulerKind::max_sinr);
  table.gap[trial] = rate_gap(up, best);

  std::optional<SchedulerDecision> cluster_free;
  for (std::size_t i = 0; i < ctx.kinds.size(); ++i) {
    SchedulerDecision d;
    switch (ctx.kinds[i]) {
      case SchedulerKind::no_interference: d = up; break;
      case SchedulerKind::max_sinr: d = best; break;
      default: d = schedule(drop, ctx.kinds[i]); break;
    }
    if (ctx.kinds[i] == SchedulerKind::cluster_free) cluster_free = d;
    table.rate[i][trial] = d.rate_bpcu;
    table.beta[i][trial] = d.residual_beta;
  }

  if (!ctx.cluster) return;
  if (!cluster_free) cluster_free = schedule(drop, SchedulerKind::cluster_free);
  for (std::size_t attempt = 0;; ++attempt) {
    try {
      table.jp[trial] =
          jp_attempt(ctx, n, drop, *cluster_free, trial_stream.substream(kClusterSubstreamBase + attempt));
      table.redraws[trial] = attempt;
      return;
    } catch (const SingularChannelError&) {
      if (attempt + 1 >= kMaxSingularRedraws) throw;
    }
  }
}

template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      pool.emplace_back([&, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

const SchedulerStats* CurvePoint::find(SchedulerKind kind) const noexcept {
  for (const auto& s : schedulers) {
    if (s.kind == kind) return &s;
  }
  return nullptr;
}

std::uint64_t trial_stream_id(std::size_t n, std::size_t trial) noexcept {
  return combine_ids(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial));
}

unsigned resolve_workers(unsigned requested) noexcept {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

CurvePoint run_point(const ScenarioConfig& config, std::size_t n, unsigned workers) {
  config.validate();
  if (n < 1) throw std::invalid_argument("run_point: n must be >= 1");

  Context ctx{config, config.geometry(), config.link_budget(), std::nullopt, config.schedulers};
  if (config.jp_enabled) ctx.cluster = make_cluster_layout(ctx.geometry);

  const std::size_t trials = config.trials_per_n;
  TrialTable table(ctx.kinds.size(), trials, config.jp_enabled);
  parallel_for(trials, workers, [&](std::size_t trial) { run_trial(ctx, n, trial, table); });

  CurvePoint point;
  point.n = n;
  for (std::size_t i = 0; i < ctx.kinds.size(); ++i) {
    point.schedulers.push_back({ctx.kinds[i], summarize(table.rate[i]), summarize(table.beta[i])});
  }
  point.delta_r = summarize(table.gap);
  if (config.jp_enabled) point.jp_rate = summarize(table.jp);
  for (std::size_t r : table.redraws) point.singular_redraws += r;

  if (config.model == ChannelModel::symmetric && n >= 3) {
    const double rho = config.link_budget().snr_scale() *
                       path_gain(config.path_loss, config.symmetric_radius_km);
    const double nd = static_cast<double>(n);
    point.lemma1 = asymptotics::lemma1_bounds(nd, rho);
    point.lemma2 = asymptotics::lemma2_bounds(nd, rho, config.interferers);
    point.theorem1 = asymptotics::theorem1_envelope(nd, config.interferers);
  }
  return point;
}

std::vector<CurvePoint> run_scenario(const ScenarioConfig& config, unsigned workers) {
  config.validate();
  std::vector<CurvePoint> curve;
  curve.reserve(config.n_grid.size());
  for (std::size_t n : config.n_grid) curve.push_back(run_point(config, n, workers));
  return curve;
}

}  // namespace cellsim
