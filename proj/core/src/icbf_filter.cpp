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

#include "nrflow/icbf_filter.hpp"

#include "nrflow/errors.hpp"

namespace nrflow {

BarrierEval BarrierEval::assemble(double b, const Eigen::RowVectorXd& db_dx,
                                  const Eigen::RowVectorXd& db_du, const Eigen::VectorXd& f,
                                  const Eigen::VectorXd& psi, double gamma) {
  if (db_dx.size() != f.size() || db_du.size() != psi.size()) {
    throw std::invalid_argument("BarrierEval: gradient/vector dimension mismatch");
  }
  BarrierEval eval;
  eval.b = b;
  eval.db_dx = db_dx;
  eval.db_du = db_du;
  eval.xi = db_du.transpose();
  eval.lambda = -(db_dx.dot(f) + db_du.dot(psi) + gamma * b);
  return eval;
}

Eigen::VectorXd eta_general(const BarrierEval& eval) {
  if (eval.lambda <= 0.0) {
    return Eigen::VectorXd::Zero(eval.xi.size());
  }
  const double xi_norm2 = eval.xi.squaredNorm();
  if (xi_norm2 == 0.0) {
    throw DegenerateBarrierError(
        "eta_general: barrier violated but insensitive to the input (xi = 0)");
  }
  return (eval.lambda / xi_norm2) * eval.xi;
}

}  // namespace nrflow
