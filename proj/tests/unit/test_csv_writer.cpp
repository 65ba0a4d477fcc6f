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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cellsim/config_io.hpp"
#include "cellsim/csv_writer.hpp"
#include "cellsim/montecarlo.hpp"

namespace cellsim {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

ScenarioConfig tiny() {
  ScenarioConfig c;
  c.name = "tiny";
  c.n_grid = {1, 4, 16};
  c.trials_per_n = 50;
  c.schedulers = {SchedulerKind::max_sinr, SchedulerKind::max_gain};
  return c;
}

TEST(Csv, Columns) {
  const auto cols = csv_columns(tiny());
  const std::vector<std::string> expected = {
      "n", "max_sinr_mean_rate", "max_sinr_rate_ci", "max_sinr_mean_beta_norm", "max_sinr_beta_ci",
      "max_gain_mean_rate", "max_gain_rate_ci", "max_gain_mean_beta_norm", "max_gain_beta_ci",
      "delta_R", "delta_R_ci", "jp_rate", "jp_rate_ci", "lemma1_lo", "lemma1_hi", "lemma2_lo",
      "lemma2_hi", "thm1_lo", "thm1_hi"};
  EXPECT_EQ(cols, expected);
}

TEST(Csv, RowsMatchHeaderAndLeaveAbsentValuesEmpty) {
  const ScenarioConfig c = tiny();
  const auto curve = run_scenario(c);
  std::ostringstream out;
  write_curve_csv(out, c, curve);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  const auto header = split(line);
  const auto jp = std::find(header.begin(), header.end(), "jp_rate") - header.begin();
  const auto l1 = std::find(header.begin(), header.end(), "lemma1_lo") - header.begin();
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto cells = split(line);
    ASSERT_EQ(cells.size(), header.size()) << line;
    EXPECT_TRUE(cells[static_cast<std::size_t>(jp)].empty());
    EXPECT_EQ(cells[0], std::to_string(curve[rows].n));
    // Overlays need n >= 3.
    EXPECT_EQ(cells[static_cast<std::size_t>(l1)].empty(), curve[rows].n < 3);
    ++rows;
  }
  EXPECT_EQ(rows, curve.size());
}

TEST(Csv, OutputsIncludeResolvedConfig) {
  const auto dir = std::filesystem::temp_directory_path() / "cellsim_csv_test";
  std::filesystem::remove_all(dir);
  const ScenarioConfig c = tiny();
  const auto curve = run_scenario(c);
  const OutputPaths paths = write_scenario_outputs(dir, c, curve);
  EXPECT_EQ(paths.csv, dir / "tiny.csv");
  EXPECT_TRUE(std::filesystem::exists(paths.csv));
  const ScenarioConfig again = read_config(paths.metadata);
  EXPECT_EQ(to_config_string(again), to_config_string(c));

  std::ostringstream a, b;
  write_curve_csv(a, c, curve);
  write_curve_csv(b, again, run_scenario(again, 4));
  EXPECT_EQ(a.str(), b.str());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace cellsim
