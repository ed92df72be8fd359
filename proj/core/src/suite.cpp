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

#include "nrflow/suite.hpp"

#include <cstdio>

namespace nrflow {
namespace {

constexpr double kFastPeriod = 3.14;  // s

SimConfig scenario_config(const SimConfig& base, const Scenario& scenario,
                          ControllerType controller) {
  SimConfig cfg = base;
  cfg.trajectory = scenario.spec;
  cfg.controller = controller;
  cfg.duration = 10.0 * scenario.spec.period;
  cfg.transient_skip = 2.0 * scenario.spec.period;
  return cfg;
}

std::string fixed(double v, int width, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%*.*f", width, precision, v);
  return buf;
}

}  // namespace

std::vector<Scenario> benchmark_suite() {
  std::vector<Scenario> suite;
  for (TrajectoryKind kind : kAllTrajectoryKinds) {
    suite.push_back({std::string(to_name(kind)), standard_spec(kind)});
  }
  for (TrajectoryKind kind : {TrajectoryKind::kVerticalTallLemniscate,
                              TrajectoryKind::kVerticalShortLemniscate}) {
    Scenario fast{std::string(to_name(kind)) + "-fast", standard_spec(kind)};
    fast.spec.period = kFastPeriod;
    suite.push_back(std::move(fast));
  }
  return suite;
}

std::vector<CompareEntry> run_compare_suite(
    const SimConfig& base, const std::optional<std::filesystem::path>& csv_dir) {
  if (csv_dir) {
    std::filesystem::create_directories(*csv_dir);
  }

  std::vector<CompareEntry> entries;
  for (const Scenario& scenario : benchmark_suite()) {
    CompareEntry entry;
    entry.label = scenario.label;
    for (ControllerType controller :
         {ControllerType::kNewtonRaphson, ControllerType::kBaseline}) {
      const SimConfig cfg = scenario_config(base, scenario, controller);
      const TrajectoryLog log = run_closed_loop(cfg);
      const RunMetrics metrics = tail_metrics(log, cfg.trajectory, cfg);
      if (csv_dir) {
        write_csv(log, *csv_dir / (scenario.label + "_" + std::string(to_name(controller)) +
                                   ".csv"));
      }
      (controller == ControllerType::kNewtonRaphson ? entry.newton_raphson
                                                    : entry.baseline) = metrics;
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string format_compare_table(const std::vector<CompareEntry>& entries) {
  std::string out;
  out += "Trajectory                          RMSE NR [m]  RMSE baseline [m]  max|rate| NR [rad/s]\n";
  double max_rate = 0.0;
  for (const CompareEntry& e : entries) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-35s %11.5f %18.5f %21.3f\n", e.label.c_str(),
                  e.newton_raphson.rmse, e.baseline.rmse, e.newton_raphson.max_abs_rate);
    out += line;
    max_rate = std::max(max_rate, e.newton_raphson.max_abs_rate);
  }
  out += "suite max |rate| (flow controller): " + fixed(max_rate, 0, 4) + " rad/s\n";
  return out;
}

std::vector<AlphaSweepEntry> run_alpha_sweep(const SimConfig& base,
                                             const std::vector<double>& alphas) {
  std::vector<AlphaSweepEntry> entries;
  for (double alpha : alphas) {
    SimConfig cfg = base;
    cfg.controller = ControllerType::kNewtonRaphson;
    cfg.nr.speedup = alpha;
    const TrajectoryLog log = run_closed_loop(cfg);
    entries.push_back({alpha, tail_metrics(log, cfg.trajectory, cfg)});
  }
  return entries;
}

std::string format_alpha_table(const std::vector<AlphaSweepEntry>& entries) {
  std::string out;
  out += "alpha   tail sup error [m]   RMSE [m]   nu1_hat [m]\n";
  for (const AlphaSweepEntry& e : entries) {
    char line[120];
    std::snprintf(line, sizeof(line), "%5.1f %20.5f %10.5f %13.5f\n", e.alpha,
                  e.metrics.tail_sup_error, e.metrics.rmse, e.metrics.nu1_hat);
    out += line;
  }
  return out;
}

}  // namespace nrflow
