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

#include "nrflow/predictor.hpp"

#include <Eigen/LU>

#include <stdexcept>

#include "nrflow/errors.hpp"

namespace nrflow {

SystemMatrices build_system_matrices(const QuadParams& params) {
  params.validate();

  SystemMatrices sys;
  sys.A(kPx, kVx) = 1.0;
  sys.A(kPy, kVy) = 1.0;
  sys.A(kPz, kVz) = 1.0;
  sys.A(kVx, kRoll) = -params.gravity;
  sys.A(kVy, kPitch) = params.gravity;

  sys.B(kVz, kThrust) = 1.0 / params.mass;
  sys.B(kRoll, kRateRoll) = 1.0;
  sys.B(kPitch, kRatePitch) = 1.0;
  sys.B(kYaw, kRateYaw) = 1.0;

  sys.C(kOutX, kPx) = 1.0;
  sys.C(kOutY, kPy) = 1.0;
  sys.C(kOutZ, kPz) = 1.0;
  sys.C(kOutYaw, kYaw) = 1.0;

  sys.drift(kVz) = -params.gravity;
  return sys;
}

PredictorMatrices discretize(const SystemMatrices& sys, double horizon) {
  if (!(horizon > 0.0)) {
    throw std::invalid_argument("discretize: horizon must be positive");
  }

  const double T = horizon;
  const Mat9 A2 = sys.A * sys.A;

  PredictorMatrices mats;
  mats.horizon = T;
  mats.A_tilde = Mat9::Identity() + sys.A * T + A2 * (T * T / 2.0);

  // Integral of exp(A s) over [0, T], closed because A^3 = 0.
  const Mat9 S = Mat9::Identity() * T + sys.A * (T * T / 2.0) + A2 * (T * T * T / 6.0);
  mats.B_tilde = S * sys.B;
  mats.drift = S * sys.drift;

  mats.CA_tilde = sys.C * mats.A_tilde;
  mats.CB_tilde = sys.C * mats.B_tilde;
  mats.y_drift = sys.C * mats.drift;

  Eigen::FullPivLU<Mat4> lu(mats.CB_tilde);
  if (!lu.isInvertible()) {
    throw SingularJacobianError("discretize: output Jacobian C*B_tilde is singular");
  }
  mats.CB_tilde_inv = lu.inverse();
  return mats;
}

Output4 predict_output(const State9& x, const Input4& u, const PredictorMatrices& mats) {
  return mats.CA_tilde * x.to_vector() + mats.CB_tilde * u.to_vector() + mats.y_drift;
}

OutputJacobian output_jacobian(const PredictorMatrices& mats) {
  return OutputJacobian{mats.CB_tilde, mats.CB_tilde_inv};
}

}  // namespace nrflow
