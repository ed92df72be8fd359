/*
 Copyright 2026 The nrflow Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef NRFLOW_SUITE_HPP
#define NRFLOW_SUITE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nrflow/sim_harness.hpp"

namespace nrflow {

// The five standard benchmark trajectories plus the two sped-up vertical
// figure-eights (period halved to 3.14 s).
struct Scenario {
  std::string label;
  TrajectorySpec spec;
};

std::vector<Scenario> benchmark_suite();

struct CompareEntry {
  std::string label;
  RunMetrics newton_raphson;
  RunMetrics baseline;
};

// Runs both controllers over the full suite with the benchmark protocol
// (10 periods, 2 skipped) and `base`'s tuning/parameters. When csv_dir is
// set, writes one CSV per run as <label>_<controller>.csv.
std::vector<CompareEntry> run_compare_suite(
    const SimConfig& base, const std::optional<std::filesystem::path>& csv_dir);

std::string format_compare_table(const std::vector<CompareEntry>& entries);

struct AlphaSweepEntry {
  double alpha;
  RunMetrics metrics;
};

// Fixed trajectory, one flow-controller run per speedup value.
std::vector<AlphaSweepEntry> run_alpha_sweep(const SimConfig& base,
                                             const std::vector<double>& alphas);

std::string format_alpha_table(const std::vector<AlphaSweepEntry>& entries);

}  // namespace nrflow

#endif  // NRFLOW_SUITE_HPP
