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

#ifndef NRFLOW_BASELINE_PID_HPP
#define NRFLOW_BASELINE_PID_HPP

#include "nrflow/types.hpp"

namespace nrflow {

// Attitude setpoints are clamped to +/-0.5 rad and rate commands to
// +/-0.8 rad/s, the same rate bound the flow controller runs under.
inline constexpr double kBaselineTiltLimit = 0.5;
inline constexpr double kBaselineRateLimit = 0.8;

struct PidGains {
  double kp_pos = 0.0;        // position -> velocity setpoint [1/s]
  double kp_vel = 0.0;        // velocity loop P [1/s]
  double ki_vel = 0.0;        // velocity loop I [1/s^2]
  double kd_vel = 0.0;        // velocity loop D [-]
  double kp_att = 0.0;        // attitude -> rate command [1/s]
  double vel_int_limit = 1.0; // per-axis integrator clamp [m/s * s]

  // Frozen result of a grid search minimizing horizontal-circle RMSE
  // (tools/tune_baseline.cpp); used for every benchmark trajectory.
  static PidGains tuned_defaults();

  void validate() const;
};

// One cascaded-PID update: position P with velocity feed-forward, velocity
// PID with integrator clamping, then the nonlinear map from desired
// acceleration to thrust along the current axis and small-angle attitude
// setpoints, closed by a proportional attitude-to-rate stage.
// `velocity_integral` is the caller-owned integrator state, one per run.
Input4 baseline_step(const State9& x, const Output4& ref, const Output4& ref_rate,
                     const PidGains& gains, const QuadParams& params, double dt,
                     Vec3& velocity_integral);

}  // namespace nrflow

#endif  // NRFLOW_BASELINE_PID_HPP
