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

#include "cellsim/csv_writer.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "cellsim/config_io.hpp"

namespace cellsim {

namespace {

std::string number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.9g", v);
  return buffer;
}

void put(std::ostream& out, const std::optional<double>& v) {
  out << ',';
  if (v) out << number(*v);
}

}  // namespace

std::vector<std::string> csv_columns(const ScenarioConfig& config) {
  std::vector<std::string> columns = {"n"};
  for (SchedulerKind kind : config.schedulers) {
    const std::string k(to_string(kind));
    columns.push_back(k + "_mean_rate");
    columns.push_back(k + "_rate_ci");
    columns.push_back(k + "_mean_beta_norm");
    columns.push_back(k + "_beta_ci");
  }
  for (const char* c : {"delta_R", "delta_R_ci", "jp_rate", "jp_rate_ci", "lemma1_lo", "lemma1_hi",
                        "lemma2_lo", "lemma2_hi", "thm1_lo", "thm1_hi"}) {
    columns.emplace_back(c);
  }
  return columns;
}

void write_curve_csv(std::ostream& out, const ScenarioConfig& config,
                     std::span<const CurvePoint> curve) {
  const auto columns = csv_columns(config);
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';

  for (const CurvePoint& p : curve) {
    out << p.n;
    for (SchedulerKind kind : config.schedulers) {
      const SchedulerStats* s = p.find(kind);
      put(out, s ? std::optional(s->rate.mean) : std::nullopt);
      put(out, s ? std::optional(s->rate.ci) : std::nullopt);
      put(out, s ? std::optional(s->beta_norm.mean) : std::nullopt);
      put(out, s ? std::optional(s->beta_norm.ci) : std::nullopt);
    }
    put(out, p.delta_r.mean);
    put(out, p.delta_r.ci);
    put(out, p.jp_rate ? std::optional(p.jp_rate->mean) : std::nullopt);
    put(out, p.jp_rate ? std::optional(p.jp_rate->ci) : std::nullopt);
    for (const auto* b : {&p.lemma1, &p.lemma2, &p.theorem1}) {
      put(out, *b ? std::optional((*b)->lower) : std::nullopt);
      put(out, *b ? std::optional((*b)->upper) : std::nullopt);
    }
    out << '\n';
  }
}

OutputPaths write_scenario_outputs(const std::filesystem::path& dir, const ScenarioConfig& config,
                                   std::span<const CurvePoint> curve) {
  std::filesystem::create_directories(dir);
  OutputPaths paths{dir / (config.name + ".csv"), dir / (config.name + ".cfg")};

  std::ofstream csv(paths.csv, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write '" + paths.csv.string() + "'");
  write_curve_csv(csv, config, curve);

  std::ofstream meta(paths.metadata, std::ios::binary);
  if (!meta) throw std::runtime_error("cannot write '" + paths.metadata.string() + "'");
  write_config(meta, config);

  if (!csv.flush() || !meta.flush()) throw std::runtime_error("failed writing outputs to " + dir.string());
  return paths;
}

}  // namespace cellsim
