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

// Acceptance run: one PASS/FAIL line per criterion C1..C12.
// Usage: cellsim_acceptance [--criterion C<k>] [--workers K]

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cellsim/montecarlo.hpp"
#include "cellsim/validation.hpp"

int main(int argc, char** argv) {
  namespace v = cellsim::validation;
  v::Settings settings;
  std::string only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = argv[++i];
    } else if (arg == "--workers" && i + 1 < argc) {
      settings.workers = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    } else {
      std::cerr << "usage: cellsim_acceptance [--criterion C<k>] [--workers K]\n";
      return 2;
    }
  }
  std::cout << "cellsim " << CELLSIM_VERSION << " acceptance, "
            << cellsim::resolve_workers(settings.workers) << " worker(s)" << std::endl;

  std::vector<v::CriterionResult> results;
  if (only.empty()) {
    results = v::run_all(settings, std::cout);
  } else {
    try {
      results.push_back(v::run_criterion(only, settings));
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    std::cout << v::format_result(results.back()) << std::endl;
  }

  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  double total = 0.0;
  for (const auto& r : results) total += r.seconds;
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size()
            << " criteria passed in " << total << " s" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
