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

#ifndef NRFLOW_NR_CONTROLLER_HPP
#define NRFLOW_NR_CONTROLLER_HPP

#include <Eigen/Core>

#include "nrflow/icbf_filter.hpp"
#include "nrflow/predictor.hpp"
#include "nrflow/types.hpp"

namespace nrflow {

struct NrConfig {
  double speedup = 30.0;  // flow gain (alpha), dimensionless
  double horizon = 0.8;   // lookahead T [s]
  double dt_ctrl = 0.01;  // controller update period [s]

  // Positivity plus the explicit-Euler sanity bound speedup * dt_ctrl < 1.
  void validate() const;
};

// The controller integrates an input rate, so the current input is state.
struct ControllerState {
  Input4 u;
};

// Newton-Raphson flow rate for a memoryless map y = g(u):
// jacobian^{-1} * (target - output). Driving u with this rate makes the
// tracking error target - g(u) decay as exp(-t).
// Throws SingularJacobianError when the Jacobian is not invertible.
Eigen::VectorXd memoryless_nr_rate(const Eigen::VectorXd& output,
                                   const Eigen::MatrixXd& jacobian,
                                   const Eigen::VectorXd& target);

// Unscaled input rate for the predictive tracker:
// CB_tilde^{-1} * (future_reference - predicted output). The speedup is
// applied at integration time, after the barrier filter.
Vec4 nominal_rate(const State9& x, const Input4& u, const Output4& future_reference,
                  const PredictorMatrices& mats);

// One discrete controller update: compute the nominal rate, pass each
// angular-rate axis through the barrier clamp (thrust rate is unfiltered;
// the plant boundary limits thrust instead), then integrate
// u += speedup * rate * dt_ctrl. Returns the updated input, which is also
// stored in `state`. `filter` may be null to run unconstrained.
// The reference enters only as its value one horizon ahead; no reference
// derivatives are consumed.
Input4 controller_step(ControllerState& state, const State9& x,
                       const Output4& future_reference, const NrConfig& cfg,
                       const PredictorMatrices& mats, const IcbfConfig* filter);

}  // namespace nrflow

#endif  // NRFLOW_NR_CONTROLLER_HPP
