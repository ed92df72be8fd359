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

#ifndef NRFLOW_ICBF_FILTER_HPP
#define NRFLOW_ICBF_FILTER_HPP

#include <Eigen/Core>

#include <algorithm>
#include <stdexcept>

namespace nrflow {

// Integral control barrier filter for dynamically defined control laws: the
// barrier acts on the input *rate*, nudging the nominal rate just enough to
// keep the integrated input inside its limits.
struct IcbfConfig {
  double rate_min = -0.8;  // rad/s
  double rate_max = 0.8;   // rad/s
  double gamma = 1.0;      // linear class-K gain [1/s]

  void validate() const {
    if (!(rate_min < 0.0) || !(rate_max > 0.0)) {
      throw std::invalid_argument("IcbfConfig: need rate_min < 0 < rate_max");
    }
    if (!(gamma > 0.0)) {
      throw std::invalid_argument("IcbfConfig: gamma must be positive");
    }
  }
};

// One evaluation of a scalar barrier b(x, u) along the closed loop:
//   db(x,u,eta) = db_dx * f + db_du * (psi + eta)
//   lambda      = -(db_dx * f + db_du * psi + gamma * b)
//   xi          = db_du^T
// The barrier condition db + gamma*b >= 0 holds with eta = 0 iff lambda <= 0.
struct BarrierEval {
  double b = 0.0;
  Eigen::RowVectorXd db_dx;
  Eigen::RowVectorXd db_du;
  Eigen::VectorXd xi;
  double lambda = 0.0;

  // f is the plant drift at (x, u); psi the nominal input rate.
  static BarrierEval assemble(double b, const Eigen::RowVectorXd& db_dx,
                              const Eigen::RowVectorXd& db_du, const Eigen::VectorXd& f,
                              const Eigen::VectorXd& psi, double gamma);
};

// Minimal intervention term: lambda/||xi||^2 * xi when lambda > 0, else zero.
// The returned correction is the smallest-norm rate adjustment that restores
// db + gamma*b >= 0, meeting it with equality when active.
// Throws DegenerateBarrierError when lambda > 0 but xi = 0.
Eigen::VectorXd eta_general(const BarrierEval& eval);

// Which barrier the negative half-line of the per-axis clamp uses.
// kLowerDistance is the standard lower-bound barrier b = u_s - rate_min.
// kMirroredDistance measures against the negated limit (-rate_min) instead;
// it activates too late to keep u_s above rate_min and exists only so a
// regression test can demonstrate that failure mode.
enum class LowerBarrierForm { kLowerDistance, kMirroredDistance };

// Scalar barrier clamp for one angular-rate axis. For u_s >= 0 the upper
// barrier b = rate_max - u_s applies; for u_s < 0 the lower barrier per
// `Form`. Returns the filtered rate (nominal + eta).
template <LowerBarrierForm Form = LowerBarrierForm::kLowerDistance>
double clamp_rate_axis(double u_s, double nominal_rate, const IcbfConfig& cfg) {
  if (u_s >= 0.0) {
    const double eta = std::min(cfg.gamma * (cfg.rate_max - u_s) - nominal_rate, 0.0);
    return nominal_rate + eta;
  }
  double eta = 0.0;
  if constexpr (Form == LowerBarrierForm::kLowerDistance) {
    eta = std::max(-cfg.gamma * (u_s - cfg.rate_min) - nominal_rate, 0.0);
  } else {
    eta = std::max(-cfg.gamma * (-cfg.rate_min - u_s) - nominal_rate, 0.0);
  }
  return nominal_rate + eta;
}

}  // namespace nrflow

#endif  // NRFLOW_ICBF_FILTER_HPP
