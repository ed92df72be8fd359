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

#ifndef NRFLOW_ERRORS_HPP
#define NRFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nrflow {

// The output Jacobian (or a user-supplied Jacobian) is not invertible.
class SingularJacobianError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A barrier is violated through a direction the input cannot influence
// (lambda > 0 with a zero input gradient).
class DegenerateBarrierError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed-loop run aborted (pitch singularity, non-finite state, ...).
// Carries the simulation time at which the fault occurred.
class SimulationFault : public std::runtime_error {
 public:
  SimulationFault(const std::string& what, double t_fault)
      : std::runtime_error(what + " (at t=" + std::to_string(t_fault) + " s)"),
        t_fault_(t_fault) {}

  double fault_time() const { return t_fault_; }

 private:
  double t_fault_;
};

}  // namespace nrflow

#endif  // NRFLOW_ERRORS_HPP
