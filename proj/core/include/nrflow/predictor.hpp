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

#ifndef NRFLOW_PREDICTOR_HPP
#define NRFLOW_PREDICTOR_HPP

#include "nrflow/types.hpp"

namespace nrflow {

// Hover-referenced small-angle model  dx = A x + B u + drift.
//
// A couples position to velocity and velocity to attitude
// (dVx/droll = -g, dVy/dpitch = +g); B maps thrust to dVz and the rate
// commands one-to-one onto the attitude rates; C selects (x, y, z, yaw).
// drift is the constant gravity term -g e_vz, so that the model has its
// equilibrium at the hover input rather than at zero thrust.
struct SystemMatrices {
  Mat9 A = Mat9::Zero();
  Mat9x4 B = Mat9x4::Zero();
  Mat4x9 C = Mat4x9::Zero();
  Vec9 drift = Vec9::Zero();
};

SystemMatrices build_system_matrices(const QuadParams& params);

// Exact zero-order-hold discretization of the model over one lookahead
// horizon. A is nilpotent (A^3 = 0), so the exponential series closes after
// the quadratic term and everything here is exact:
//
//   A_tilde = I + A T + A^2 T^2/2
//   B_tilde = (I T + A T^2/2 + A^2 T^3/6) B      (same series applied to drift)
//
// CA_tilde, CB_tilde and the 4x4 inverse are precomputed once; the per-step
// prediction is two small matrix-vector products.
struct PredictorMatrices {
  double horizon = 0.0;             // T [s]
  Mat9 A_tilde = Mat9::Identity();
  Mat9x4 B_tilde = Mat9x4::Zero();
  Vec9 drift = Vec9::Zero();        // integrated gravity term over the horizon
  Mat4x9 CA_tilde = Mat4x9::Zero();
  Mat4 CB_tilde = Mat4::Zero();     // input Jacobian of the predicted output
  Mat4 CB_tilde_inv = Mat4::Zero();
  Vec4 y_drift = Vec4::Zero();      // C * drift
};

// Throws std::invalid_argument for horizon <= 0 and SingularJacobianError if
// CB_tilde is not invertible.
PredictorMatrices discretize(const SystemMatrices& sys, double horizon);

// Predicted output one horizon ahead under a zero-order hold on the input:
// C A_tilde x + C B_tilde u + C drift. Affine in u with constant Jacobian
// CB_tilde; the hover input at rest is a fixed point.
Output4 predict_output(const State9& x, const Input4& u, const PredictorMatrices& mats);

struct OutputJacobian {
  Mat4 jacobian;
  Mat4 inverse;
};

// d(predicted output)/d(input) and its inverse; state-independent.
OutputJacobian output_jacobian(const PredictorMatrices& mats);

}  // namespace nrflow

#endif  // NRFLOW_PREDICTOR_HPP
