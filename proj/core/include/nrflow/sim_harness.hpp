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

#ifndef NRFLOW_SIM_HARNESS_HPP
#define NRFLOW_SIM_HARNESS_HPP

#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "nrflow/baseline_pid.hpp"
#include "nrflow/icbf_filter.hpp"
#include "nrflow/nr_controller.hpp"
#include "nrflow/trajectories.hpp"
#include "nrflow/types.hpp"

namespace nrflow {

enum class ControllerType { kNewtonRaphson, kBaseline };

std::string_view to_name(ControllerType controller);
std::optional<ControllerType> controller_from_name(std::string_view name);

struct SimConfig {
  TrajectorySpec trajectory;
  ControllerType controller = ControllerType::kNewtonRaphson;
  NrConfig nr;
  IcbfConfig icbf;
  bool icbf_enabled = true;
  PidGains gains = PidGains::tuned_defaults();
  QuadParams params;
  double dt_plant = 0.001;      // s; must divide nr.dt_ctrl exactly
  double duration = 31.4;       // s
  double transient_skip = 6.28; // s; samples before this are excluded from metrics
  unsigned seed = 0;            // reserved; every run is deterministic

  void validate() const;

  // Benchmark protocol: 10 periods long, first 2 periods skipped.
  static SimConfig standard(TrajectoryKind kind, ControllerType controller);
};

struct LogRow {
  double t;
  State9 x;      // plant state sampled at t
  Input4 u;      // input held over [t, t + dt_ctrl)
  Output4 r;     // reference at t
  Output4 y_hat; // output predicted at t for t + horizon
};

struct TrajectoryLog {
  std::vector<LogRow> rows;                 // one per control step, t strictly increasing
  std::vector<double> controller_seconds;   // wall time of each controller update
  double dt_ctrl = 0.01;
  double horizon = 0.8;
};

// Runs the closed loop: the controller updates every dt_ctrl, the plant
// integrates at dt_plant under a zero-order hold, thrust is clamped at the
// plant boundary. Identical configs produce identical logs.
// Throws SimulationFault (with the failing time) on pitch-singularity or
// non-finite states.
TrajectoryLog run_closed_loop(const SimConfig& cfg);

// Root-mean-square position error over samples with t >= skip (yaw excluded).
double rmse(const TrajectoryLog& log, double skip);

struct RunMetrics {
  double rmse = 0.0;            // position RMSE over the tail [m]
  double rmse_yaw = 0.0;        // yaw-only RMSE over the tail [rad]
  double nu1_hat = 0.0;         // sup of realized prediction error over the tail [m]
  double nu2 = 0.0;             // sup of the reference speed [m/s]
  double tail_sup_error = 0.0;  // sup of ||r - y|| over the tail [m]
  double max_abs_rate = 0.0;    // max |u_p|,|u_q|,|u_r| over the whole run [rad/s]
  double mean_step_seconds = 0.0;
  double max_step_seconds = 0.0;
};

// Tail metrics over t >= cfg.transient_skip. The prediction made at t is
// scored against the logged output at the sample nearest t + horizon.
RunMetrics tail_metrics(const TrajectoryLog& log, const TrajectorySpec& spec,
                        const SimConfig& cfg);

// CSV export, one row per control step, shortest round-trip decimal values.
// Header:
// t,px,py,pz,vx,vy,vz,phi,theta,psi,u_tau,u_p,u_q,u_r,rx,ry,rz,rpsi,
// yhat_x,yhat_y,yhat_z,yhat_psi
void write_csv(const TrajectoryLog& log, const std::filesystem::path& path);

}  // namespace nrflow

#endif  // NRFLOW_SIM_HARNESS_HPP
