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

#include "nrflow/quad_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nrflow {

Vec3 thrust_direction(const Vec3& angles) {
  const double roll = angles.x();
  const double pitch = angles.y();
  const double yaw = angles.z();

  const Vec3 tilt{-std::sin(roll), std::sin(pitch) * std::cos(roll),
                  std::cos(pitch) * std::cos(roll)};

  const double c = std::cos(yaw);
  const double s = std::sin(yaw);
  return Vec3{c * tilt.x() - s * tilt.y(), s * tilt.x() + c * tilt.y(), tilt.z()};
}

State9 plant_derivative(const State9& x, const Input4& u, const QuadParams& params) {
  if (!x.is_finite() || !u.is_finite()) {
    throw std::domain_error("plant_derivative: non-finite state or input");
  }
  if (std::abs(x.pitch()) >= std::numbers::pi / 2.0) {
    throw std::domain_error("plant_derivative: |pitch| >= pi/2");
  }

  State9 dx;
  dx.position = x.velocity;
  dx.velocity = (u.thrust / params.mass) * thrust_direction(x.angles) -
                params.gravity * Vec3::UnitZ();
  dx.angles = u.rates;
  return dx;
}

State9 rk4_step(const State9& x, const Input4& u, double dt, const QuadParams& params) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("rk4_step: dt must be positive");
  }

  auto advance = [](const State9& base, const State9& d, double h) {
    State9 out;
    out.position = base.position + h * d.position;
    out.velocity = base.velocity + h * d.velocity;
    out.angles = base.angles + h * d.angles;
    return out;
  };

  const State9 k1 = plant_derivative(x, u, params);
  const State9 k2 = plant_derivative(advance(x, k1, dt / 2.0), u, params);
  const State9 k3 = plant_derivative(advance(x, k2, dt / 2.0), u, params);
  const State9 k4 = plant_derivative(advance(x, k3, dt), u, params);

  State9 out;
  out.position =
      x.position + dt / 6.0 * (k1.position + 2.0 * (k2.position + k3.position) + k4.position);
  out.velocity =
      x.velocity + dt / 6.0 * (k1.velocity + 2.0 * (k2.velocity + k3.velocity) + k4.velocity);
  out.angles = x.angles + dt / 6.0 * (k1.angles + 2.0 * (k2.angles + k3.angles) + k4.angles);
  return out;
}

Input4 hover_input(const QuadParams& params) {
  return Input4{params.mass * params.gravity, Vec3::Zero()};
}

double clamp_thrust(double thrust, const QuadParams& params) {
  return std::clamp(thrust, 0.0, kThrustCeilingFactor * params.mass * params.gravity);
}

}  // namespace nrflow
