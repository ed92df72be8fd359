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

#ifndef NRFLOW_TYPES_HPP
#define NRFLOW_TYPES_HPP

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

namespace nrflow {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat9 = Eigen::Matrix<double, 9, 9>;
using Mat9x4 = Eigen::Matrix<double, 9, 4>;
using Mat4x9 = Eigen::Matrix<double, 4, 9>;
using Mat4 = Eigen::Matrix4d;

// Index layout of the flattened state vector, shared by the nonlinear plant
// and the linear prediction model.
enum StateIndex : int {
  kPx = 0,
  kPy = 1,
  kPz = 2,
  kVx = 3,
  kVy = 4,
  kVz = 5,
  kRoll = 6,
  kPitch = 7,
  kYaw = 8,
};

enum InputIndex : int {
  kThrust = 0,
  kRateRoll = 1,
  kRatePitch = 2,
  kRateYaw = 3,
};

enum OutputIndex : int {
  kOutX = 0,
  kOutY = 1,
  kOutZ = 2,
  kOutYaw = 3,
};

struct QuadParams {
  double mass = 1.69;     // kg
  double gravity = 9.81;  // m/s^2

  void validate() const {
    if (!(mass > 0.0) || !(gravity > 0.0)) {
      throw std::invalid_argument("QuadParams: mass and gravity must be positive");
    }
  }
};

// World-frame position and velocity plus roll/pitch/yaw attitude.
struct State9 {
  Vec3 position = Vec3::Zero();  // m
  Vec3 velocity = Vec3::Zero();  // m/s
  Vec3 angles = Vec3::Zero();    // roll, pitch, yaw [rad]

  double roll() const { return angles.x(); }
  double pitch() const { return angles.y(); }
  double yaw() const { return angles.z(); }

  Vec9 to_vector() const {
    Vec9 v;
    v << position, velocity, angles;
    return v;
  }

  static State9 from_vector(const Vec9& v) {
    State9 x;
    x.position = v.segment<3>(kPx);
    x.velocity = v.segment<3>(kVx);
    x.angles = v.segment<3>(kRoll);
    return x;
  }

  bool is_finite() const { return to_vector().allFinite(); }
};

// Collective thrust plus the three commanded body angular rates.
struct Input4 {
  double thrust = 0.0;         // N
  Vec3 rates = Vec3::Zero();   // roll, pitch, yaw rate commands [rad/s]

  Vec4 to_vector() const { return Vec4{thrust, rates.x(), rates.y(), rates.z()}; }

  static Input4 from_vector(const Vec4& v) {
    return Input4{v[kThrust], Vec3{v[kRateRoll], v[kRatePitch], v[kRateYaw]}};
  }

  bool is_finite() const { return std::isfinite(thrust) && rates.allFinite(); }
};

// Tracked output: world position plus yaw, in that order.
using Output4 = Vec4;

}  // namespace nrflow

#endif  // NRFLOW_TYPES_HPP
