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

#ifndef NRFLOW_CONFIG_HPP
#define NRFLOW_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "nrflow/sim_harness.hpp"

namespace nrflow {

// A partially specified scenario, assembled from a config file and/or
// command-line flags before being resolved into a SimConfig. Every field
// mirrors one config key / flag; unset fields fall back to the benchmark
// defaults (duration and transient skip default to 10 and 2 periods).
struct ScenarioRequest {
  std::optional<std::string> trajectory;
  std::optional<std::string> controller;
  std::optional<double> alpha;
  std::optional<double> horizon;
  std::optional<double> gamma;
  std::optional<double> rate_limit;
  std::optional<double> period;
  std::optional<double> duration;
  std::optional<double> dt_ctrl;
  std::optional<double> dt_plant;
  std::optional<double> transient_skip;
  std::optional<bool> icbf_enabled;
  std::optional<std::string> out;

  std::optional<double> mass;
  std::optional<double> gravity;
  std::optional<Vec3> center;
  std::optional<double> major;
  std::optional<double> minor;
  std::optional<double> yaw_ref;

  std::optional<double> kp_pos;
  std::optional<double> kp_vel;
  std::optional<double> ki_vel;
  std::optional<double> kd_vel;
  std::optional<double> kp_att;
  std::optional<double> vel_int_limit;

  // Fields set in `overrides` win over this request's.
  void merge_over(const ScenarioRequest& overrides);

  // Builds and validates the SimConfig. Throws std::invalid_argument with a
  // user-facing message (unknown names list the valid options).
  SimConfig resolve() const;
};

// Parses a JSON config file. Unknown or mistyped keys are errors.
ScenarioRequest parse_config_file(const std::filesystem::path& path);

}  // namespace nrflow

#endif  // NRFLOW_CONFIG_HPP
