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

#include "nrflow/baseline_pid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nrflow/quad_model.hpp"

namespace nrflow {

PidGains PidGains::tuned_defaults() {
  PidGains g;
  g.kp_pos = 0.5;
  g.kp_vel = 3.0;
  g.ki_vel = 0.0;
  g.kd_vel = 0.4;
  g.kp_att = 12.0;
  g.vel_int_limit = 2.0;
  return g;
}

void PidGains::validate() const {
  if (kp_pos < 0.0 || kp_vel < 0.0 || ki_vel < 0.0 || kd_vel < 0.0 || kp_att < 0.0) {
    throw std::invalid_argument("PidGains: gains must be non-negative");
  }
  if (!(vel_int_limit > 0.0)) {
    throw std::invalid_argument("PidGains: vel_int_limit must be positive");
  }
}

Input4 baseline_step(const State9& x, const Output4& ref, const Output4& ref_rate,
                     const PidGains& gains, const QuadParams& params, double dt,
                     Vec3& velocity_integral) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("baseline_step: dt must be positive");
  }

  const Vec3 ref_pos = ref.head<3>();
  const Vec3 ref_vel = ref_rate.head<3>();

  // Position P with velocity feed-forward.
  const Vec3 vel_des = gains.kp_pos * (ref_pos - x.position) + ref_vel;

  // Velocity PID. The D-term acts on the computable part of the error
  // derivative, kp_pos * (ref_vel - v); the reference acceleration and the
  // vehicle acceleration are not available here.
  const Vec3 vel_err = vel_des - x.velocity;
  velocity_integral += vel_err * dt;
  velocity_integral = velocity_integral.cwiseMax(-gains.vel_int_limit)
                          .cwiseMin(gains.vel_int_limit);
  const Vec3 vel_err_rate = gains.kp_pos * (ref_vel - x.velocity);
  const Vec3 accel_des = gains.kp_vel * vel_err + gains.ki_vel * velocity_integral +
                         gains.kd_vel * vel_err_rate;

  // Desired specific force, mapped to thrust along the current axis.
  const Vec3 force_dir = accel_des + params.gravity * Vec3::UnitZ();
  const double thrust =
      clamp_thrust(params.mass * force_dir.dot(thrust_direction(x.angles)), params);

  // Small-angle attitude setpoints from the yaw-aligned force direction:
  // undo the current yaw, then (-roll, pitch, 1) ~ f / f_z.
  const double yaw = x.yaw();
  const double fx = std::cos(yaw) * force_dir.x() + std::sin(yaw) * force_dir.y();
  const double fy = -std::sin(yaw) * force_dir.x() + std::cos(yaw) * force_dir.y();
  const double fz = std::max(force_dir.z(), 0.1 * params.gravity);

  const double roll_des = std::clamp(-fx / fz, -kBaselineTiltLimit, kBaselineTiltLimit);
  const double pitch_des = std::clamp(fy / fz, -kBaselineTiltLimit, kBaselineTiltLimit);
  const double yaw_des = ref[kOutYaw];

  const Vec3 att_des{roll_des, pitch_des, yaw_des};
  Vec3 rates = gains.kp_att * (att_des - x.angles);
  rates = rates.cwiseMax(-kBaselineRateLimit).cwiseMin(kBaselineRateLimit);

  return Input4{thrust, rates};
}

}  // namespace nrflow
