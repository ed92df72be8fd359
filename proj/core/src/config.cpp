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

#include "nrflow/config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace nrflow {
namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
  if (!j.is_number()) {
    throw std::invalid_argument("config: key '" + key + "' must be a number");
  }
  return j.get<double>();
}

void read_number(const json& j, const std::string& key, std::optional<double>& out) {
  if (j.contains(key)) {
    out = require_number(j.at(key), key);
  }
}

void read_string(const json& j, const std::string& key, std::optional<std::string>& out) {
  if (j.contains(key)) {
    if (!j.at(key).is_string()) {
      throw std::invalid_argument("config: key '" + key + "' must be a string");
    }
    out = j.at(key).get<std::string>();
  }
}

template <typename T>
void merge_field(std::optional<T>& base, const std::optional<T>& over) {
  if (over.has_value()) {
    base = over;
  }
}

}  // namespace

void ScenarioRequest::merge_over(const ScenarioRequest& o) {
  merge_field(trajectory, o.trajectory);
  merge_field(controller, o.controller);
  merge_field(alpha, o.alpha);
  merge_field(horizon, o.horizon);
  merge_field(gamma, o.gamma);
  merge_field(rate_limit, o.rate_limit);
  merge_field(period, o.period);
  merge_field(duration, o.duration);
  merge_field(dt_ctrl, o.dt_ctrl);
  merge_field(dt_plant, o.dt_plant);
  merge_field(transient_skip, o.transient_skip);
  merge_field(icbf_enabled, o.icbf_enabled);
  merge_field(out, o.out);
  merge_field(mass, o.mass);
  merge_field(gravity, o.gravity);
  merge_field(center, o.center);
  merge_field(major, o.major);
  merge_field(minor, o.minor);
  merge_field(yaw_ref, o.yaw_ref);
  merge_field(kp_pos, o.kp_pos);
  merge_field(kp_vel, o.kp_vel);
  merge_field(ki_vel, o.ki_vel);
  merge_field(kd_vel, o.kd_vel);
  merge_field(kp_att, o.kp_att);
  merge_field(vel_int_limit, o.vel_int_limit);
}

SimConfig ScenarioRequest::resolve() const {
  const std::string traj_name = trajectory.value_or("horizontal-circle");
  const auto kind = kind_from_name(traj_name);
  if (!kind) {
    throw std::invalid_argument("unknown trajectory '" + traj_name +
                                "'; valid names: " + valid_kind_names());
  }

  const std::string ctrl_name = controller.value_or("newton-raphson");
  const auto ctrl = controller_from_name(ctrl_name);
  if (!ctrl) {
    throw std::invalid_argument("unknown controller '" + ctrl_name +
                                "'; valid names: newton-raphson, baseline");
  }

  SimConfig cfg;
  cfg.trajectory = standard_spec(*kind);
  cfg.controller = *ctrl;

  if (period) cfg.trajectory.period = *period;
  if (center) cfg.trajectory.center = *center;
  if (major) cfg.trajectory.major = *major;
  if (minor) cfg.trajectory.minor = *minor;
  if (yaw_ref) cfg.trajectory.yaw_ref = *yaw_ref;

  cfg.duration = duration.value_or(10.0 * cfg.trajectory.period);
  cfg.transient_skip = transient_skip.value_or(2.0 * cfg.trajectory.period);

  if (alpha) cfg.nr.speedup = *alpha;
  if (horizon) cfg.nr.horizon = *horizon;
  if (dt_ctrl) cfg.nr.dt_ctrl = *dt_ctrl;
  if (dt_plant) cfg.dt_plant = *dt_plant;

  if (gamma) cfg.icbf.gamma = *gamma;
  if (rate_limit) {
    if (!(*rate_limit > 0.0)) {
      throw std::invalid_argument("rate-limit must be positive");
    }
    cfg.icbf.rate_max = *rate_limit;
    cfg.icbf.rate_min = -*rate_limit;
  }
  if (icbf_enabled) cfg.icbf_enabled = *icbf_enabled;

  if (mass) cfg.params.mass = *mass;
  if (gravity) cfg.params.gravity = *gravity;

  if (kp_pos) cfg.gains.kp_pos = *kp_pos;
  if (kp_vel) cfg.gains.kp_vel = *kp_vel;
  if (ki_vel) cfg.gains.ki_vel = *ki_vel;
  if (kd_vel) cfg.gains.kd_vel = *kd_vel;
  if (kp_att) cfg.gains.kp_att = *kp_att;
  if (vel_int_limit) cfg.gains.vel_int_limit = *vel_int_limit;

  cfg.validate();
  return cfg;
}

ScenarioRequest parse_config_file(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::invalid_argument("config: cannot open " + path.string());
  }

  json j;
  try {
    j = json::parse(file);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("config: top level must be an object");
  }

  static const std::set<std::string> known{
      "trajectory", "controller", "alpha",   "horizon",       "gamma",
      "rate-limit", "period",     "duration", "dt-ctrl",      "dt-plant",
      "transient-skip", "icbf",   "out",     "mass",          "gravity",
      "center",     "major",      "minor",   "yaw-ref",       "gains"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  ScenarioRequest req;
  read_string(j, "trajectory", req.trajectory);
  read_string(j, "controller", req.controller);
  read_number(j, "alpha", req.alpha);
  read_number(j, "horizon", req.horizon);
  read_number(j, "gamma", req.gamma);
  read_number(j, "rate-limit", req.rate_limit);
  read_number(j, "period", req.period);
  read_number(j, "duration", req.duration);
  read_number(j, "dt-ctrl", req.dt_ctrl);
  read_number(j, "dt-plant", req.dt_plant);
  read_number(j, "transient-skip", req.transient_skip);
  read_string(j, "out", req.out);
  read_number(j, "mass", req.mass);
  read_number(j, "gravity", req.gravity);
  read_number(j, "major", req.major);
  read_number(j, "minor", req.minor);
  read_number(j, "yaw-ref", req.yaw_ref);

  if (j.contains("icbf")) {
    if (!j.at("icbf").is_boolean()) {
      throw std::invalid_argument("config: key 'icbf' must be a boolean");
    }
    req.icbf_enabled = j.at("icbf").get<bool>();
  }

  if (j.contains("center")) {
    const json& c = j.at("center");
    if (!c.is_array() || c.size() != 3) {
      throw std::invalid_argument("config: 'center' must be an array of 3 numbers");
    }
    req.center = Vec3{require_number(c[0], "center"), require_number(c[1], "center"),
                      require_number(c[2], "center")};
  }

  if (j.contains("gains")) {
    const json& g = j.at("gains");
    if (!g.is_object()) {
      throw std::invalid_argument("config: 'gains' must be an object");
    }
    static const std::set<std::string> known_gains{"kp-pos", "kp-vel", "ki-vel",
                                                   "kd-vel", "kp-att", "vel-int-limit"};
    for (const auto& [key, value] : g.items()) {
      if (!known_gains.contains(key)) {
        throw std::invalid_argument("config: unknown gains key '" + key + "'");
      }
    }
    read_number(g, "kp-pos", req.kp_pos);
    read_number(g, "kp-vel", req.kp_vel);
    read_number(g, "ki-vel", req.ki_vel);
    read_number(g, "kd-vel", req.kd_vel);
    read_number(g, "kp-att", req.kp_att);
    read_number(g, "vel-int-limit", req.vel_int_limit);
  }

  return req;
}

}  // namespace nrflow
