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

#include "nrflow/nr_controller.hpp"

#include <Eigen/LU>

#include <stdexcept>

#include "nrflow/errors.hpp"

namespace nrflow {

void NrConfig::validate() const {
  if (!(speedup > 0.0) || !(horizon > 0.0) || !(dt_ctrl > 0.0)) {
    throw std::invalid_argument("NrConfig: speedup, horizon and dt_ctrl must be positive");
  }
  if (!(speedup * dt_ctrl < 1.0)) {
    throw std::invalid_argument("NrConfig: explicit Euler requires speedup * dt_ctrl < 1");
  }
}

Eigen::VectorXd memoryless_nr_rate(const Eigen::VectorXd& output,
                                   const Eigen::MatrixXd& jacobian,
                                   const Eigen::VectorXd& target) {
  if (jacobian.rows() != jacobian.cols() || jacobian.rows() != output.size() ||
      output.size() != target.size()) {
    throw std::invalid_argument("memoryless_nr_rate: dimension mismatch");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(jacobian);
  if (!lu.isInvertible()) {
    throw SingularJacobianError("memoryless_nr_rate: Jacobian is singular");
  }
  return lu.solve(target - output);
}

Vec4 nominal_rate(const State9& x, const Input4& u, const Output4& future_reference,
                  const PredictorMatrices& mats) {
  return mats.CB_tilde_inv * (future_reference - predict_output(x, u, mats));
}

Input4 controller_step(ControllerState& state, const State9& x,
                       const Output4& future_reference, const NrConfig& cfg,
                       const PredictorMatrices& mats, const IcbfConfig* filter) {
  if (!x.is_finite() || !future_reference.allFinite() || !state.u.is_finite()) {
    throw std::runtime_error("controller_step: non-finite state, input or reference");
  }

  Vec4 rate = nominal_rate(x, state.u, future_reference, mats);
  if (filter != nullptr) {
    for (int axis = 0; axis < 3; ++axis) {
      rate[kRateRoll + axis] =
          clamp_rate_axis(state.u.rates[axis], rate[kRateRoll + axis], *filter);
    }
  }

  const Vec4 u_new = state.u.to_vector() + cfg.speedup * cfg.dt_ctrl * rate;
  state.u = Input4::from_vector(u_new);
  return state.u;
}

}  // namespace nrflow
