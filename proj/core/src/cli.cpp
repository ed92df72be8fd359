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

#include "nrflow/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nrflow/config.hpp"
#include "nrflow/errors.hpp"
#include "nrflow/suite.hpp"

namespace nrflow {
namespace {

// Shared scenario flags, bound straight onto a ScenarioRequest.
void add_scenario_flags(CLI::App& sub, ScenarioRequest& req, bool& no_icbf) {
  sub.add_option("--trajectory", req.trajectory,
                 "Reference trajectory (" + valid_kind_names() + ")");
  sub.add_option("--controller", req.controller, "newton-raphson or baseline");
  sub.add_option("--alpha", req.alpha, "Flow speedup");
  sub.add_option("--horizon", req.horizon, "Prediction lookahead T [s]");
  sub.add_option("--gamma", req.gamma, "Barrier class-K gain [1/s]");
  sub.add_option("--rate-limit", req.rate_limit, "Symmetric angular-rate bound [rad/s]");
  sub.add_option("--period", req.period, "Trajectory period [s]");
  sub.add_option("--duration", req.duration, "Run length [s] (default 10 periods)");
  sub.add_option("--dt-ctrl", req.dt_ctrl, "Controller update period [s]");
  sub.add_option("--dt-plant", req.dt_plant, "Plant integration step [s]");
  sub.add_option("--transient-skip", req.transient_skip,
                 "Metrics skip window [s] (default 2 periods)");
  sub.add_flag("--no-icbf", no_icbf, "Disable the input-rate barrier filter");
}

ScenarioRequest load_base_request(const std::optional<std::string>& config_path) {
  std::optional<std::string> path = config_path;
  if (!path) {
    if (const char* env = std::getenv("NRFLOW_CONFIG")) {
      path = std::string(env);
    }
  }
  return path ? parse_config_file(*path) : ScenarioRequest{};
}

void print_run_summary(const SimConfig& cfg, const RunMetrics& m) {
  std::printf("trajectory:       %s\n", std::string(to_name(cfg.trajectory.kind)).c_str());
  std::printf("controller:       %s\n", std::string(to_name(cfg.controller)).c_str());
  std::printf("duration:         %.3f s (skip %.3f s)\n", cfg.duration, cfg.transient_skip);
  std::printf("RMSE (position):  %.6f m\n", m.rmse);
  std::printf("RMSE (yaw):       %.6f rad\n", m.rmse_yaw);
  std::printf("tail sup error:   %.6f m\n", m.tail_sup_error);
  std::printf("nu1_hat:          %.6f m\n", m.nu1_hat);
  std::printf("nu2:              %.6f m/s\n", m.nu2);
  std::printf("nu2/alpha:        %.6f m\n", m.nu2 / cfg.nr.speedup);
  std::printf("max |rate|:       %.6f rad/s\n", m.max_abs_rate);
  std::printf("controller step:  mean %.3g s, max %.3g s\n", m.mean_step_seconds,
              m.max_step_seconds);
}

int do_run(const ScenarioRequest& req) {
  const SimConfig cfg = req.resolve();
  const TrajectoryLog log = run_closed_loop(cfg);
  const RunMetrics metrics = tail_metrics(log, cfg.trajectory, cfg);
  print_run_summary(cfg, metrics);
  if (req.out) {
    write_csv(log, *req.out);
    std::printf("csv:              %s\n", req.out->c_str());
  }
  return 0;
}

int do_compare(const ScenarioRequest& req, const std::string& out_dir) {
  const SimConfig base = req.resolve();
  const auto entries = run_compare_suite(base, std::filesystem::path(out_dir));
  std::fputs(format_compare_table(entries).c_str(), stdout);
  std::printf("per-run CSVs in:  %s\n", out_dir.c_str());
  return 0;
}

int do_sweep(const ScenarioRequest& req, const std::vector<double>& alphas) {
  if (alphas.empty()) {
    throw std::invalid_argument("sweep-alpha: need at least one alpha value");
  }
  const SimConfig base = req.resolve();
  const auto entries = run_alpha_sweep(base, alphas);
  std::printf("trajectory: %s\n", std::string(to_name(base.trajectory.kind)).c_str());
  std::fputs(format_alpha_table(entries).c_str(), stdout);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Newton-Raphson flow trajectory tracking: simulator and benchmarks"};
  app.require_subcommand(1);

  ScenarioRequest run_req, compare_req, sweep_req;
  bool run_no_icbf = false, compare_no_icbf = false, sweep_no_icbf = false;
  std::optional<std::string> run_cfg, compare_cfg, sweep_cfg;
  std::string out_dir = "compare_out";
  std::vector<double> alphas{10.0, 20.0, 30.0, 60.0};

  CLI::App* run = app.add_subcommand("run", "Run one closed-loop scenario");
  add_scenario_flags(*run, run_req, run_no_icbf);
  run->add_option("--out", run_req.out, "Write the trajectory log to this CSV");
  run->add_option("--config", run_cfg, "JSON config file (flags override it)");

  CLI::App* compare = app.add_subcommand(
      "compare", "Both controllers over the benchmark suite, RMSE table");
  add_scenario_flags(*compare, compare_req, compare_no_icbf);
  compare->add_option("--out-dir", out_dir, "Directory for per-run CSVs");
  compare->add_option("--config", compare_cfg, "JSON config file (flags override it)");

  CLI::App* sweep = app.add_subcommand(
      "sweep-alpha", "Fixed trajectory, one flow-controller run per alpha");
  add_scenario_flags(*sweep, sweep_req, sweep_no_icbf);
  sweep->add_option("--alphas", alphas, "Speedup values")->delimiter(',');
  sweep->add_option("--config", sweep_cfg, "JSON config file (flags override it)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) {
      if (run_no_icbf) run_req.icbf_enabled = false;
      ScenarioRequest base = load_base_request(run_cfg);
      base.merge_over(run_req);
      return do_run(base);
    }
    if (compare->parsed()) {
      if (compare_no_icbf) compare_req.icbf_enabled = false;
      ScenarioRequest base = load_base_request(compare_cfg);
      base.merge_over(compare_req);
      return do_compare(base, out_dir);
    }
    if (sweep->parsed()) {
      if (sweep_no_icbf) sweep_req.icbf_enabled = false;
      ScenarioRequest base = load_base_request(sweep_cfg);
      base.merge_over(sweep_req);
      return do_sweep(base, alphas);
    }
  } catch (const SimulationFault& e) {
    std::fprintf(stderr, "simulation fault: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}

}  // namespace nrflow
