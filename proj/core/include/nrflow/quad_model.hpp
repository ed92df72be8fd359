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

#ifndef NRFLOW_QUAD_MODEL_HPP
#define NRFLOW_QUAD_MODEL_HPP

#include "nrflow/types.hpp"

namespace nrflow {

// Net thrust is clamped to [0, kThrustCeilingFactor * m * g] before it
// reaches the plant; rotors cannot pull and the ceiling stops runaway inputs.
inline constexpr double kThrustCeilingFactor = 4.0;

// A run aborts once |pitch| >= pi/2 - kPitchAbortMargin: the thrust-direction
// model degenerates near vertical pitch.
inline constexpr double kPitchAbortMargin = 0.01;

// Unit vector along the thrust axis for the given roll/pitch/yaw attitude.
// Reduces to (-roll, pitch, 1) to first order at zero yaw, so the hover
// linearization has d(v_x)/d(roll) = -g and d(v_y)/d(pitch) = +g.
Vec3 thrust_direction(const Vec3& angles);

// Continuous-time plant: d(position) = velocity, d(angles) = commanded rates
// (the autopilot's inner rate loop is modeled as ideal), and
// d(velocity) = (thrust/m) * thrust_direction - g * e_z.
// Throws std::domain_error on non-finite arguments or |pitch| >= pi/2.
State9 plant_derivative(const State9& x, const Input4& u, const QuadParams& params);

// Classical 4th-order Runge-Kutta step with the input held constant.
State9 rk4_step(const State9& x, const Input4& u, double dt, const QuadParams& params);

// The unique input equilibrium: thrust m*g, zero rates.
Input4 hover_input(const QuadParams& params);

// Clamp thrust to the physical range [0, kThrustCeilingFactor * m * g].
double clamp_thrust(double thrust, const QuadParams& params);

}  // namespace nrflow

#endif  // NRFLOW_QUAD_MODEL_HPP
