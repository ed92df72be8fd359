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

#include "nrflow/sim_harness.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <system_error>

#include "nrflow/errors.hpp"
#include "nrflow/predictor.hpp"
#include "nrflow/quad_model.hpp"

namespace nrflow {
namespace {

constexpr double kTimeEps = 1e-9;

int64_t exact_ratio(double coarse, double fine, const char* what) {
  const auto n = static_cast<int64_t>(std::llround(coarse / fine));
  if (n < 1 || std::abs(coarse - static_cast<double>(n) * fine) > kTimeEps) {
    throw std::invalid_argument(std::string("SimConfig: ") + what);
  }
  return n;
}

void check_state(const State9& x, double t) {
  if (!x.is_finite()) {
    throw SimulationFault("simulation diverged: non-finite state", t);
  }
  if (std::abs(x.pitch()) >= std::numbers::pi / 2.0 - kPitchAbortMargin) {
    throw SimulationFault("pitch approached the thrust-model singularity", t);
  }
}

void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace

std::string_view to_name(ControllerType controller) {
  switch (controller) {
    case ControllerType::kNewtonRaphson:
      return "newton-raphson";
    case ControllerType::kBaseline:
      return "baseline";
  }
  return "unknown";
}

std::optional<ControllerType> controller_from_name(std::string_view name) {
  if (name == "newton-raphson") {
    return ControllerType::kNewtonRaphson;
  }
  if (name == "baseline") {
    return ControllerType::kBaseline;
  }
  return std::nullopt;
}

void SimConfig::validate() const {
  trajectory.validate();
  nr.validate();
  icbf.validate();
  gains.validate();
  params.validate();
  if (!(dt_plant > 0.0)) {
    throw std::invalid_argument("SimConfig: dt_plant must be positive");
  }
  exact_ratio(nr.dt_ctrl, dt_plant, "dt_plant must divide dt_ctrl exactly");
  if (!(duration > transient_skip) || transient_skip < 0.0) {
    throw std::invalid_argument("SimConfig: need 0 <= transient_skip < duration");
  }
}

SimConfig SimConfig::standard(TrajectoryKind kind, ControllerType controller_type) {
  SimConfig cfg;
  cfg.trajectory = standard_spec(kind);
  cfg.controller = controller_type;
  cfg.duration = 10.0 * cfg.trajectory.period;
  cfg.transient_skip = 2.0 * cfg.trajectory.period;
  return cfg;
}

TrajectoryLog run_closed_loop(const SimConfig& cfg) {
  cfg.validate();

  const double dt_ctrl = cfg.nr.dt_ctrl;
  const auto n_ctrl =
      static_cast<int64_t>(std::floor(cfg.duration / dt_ctrl + kTimeEps));
  const int64_t n_sub = exact_ratio(dt_ctrl, cfg.dt_plant, "dt_plant must divide dt_ctrl");

  const SystemMatrices sys = build_system_matrices(cfg.params);
  const PredictorMatrices mats = discretize(sys, cfg.nr.horizon);
  const IcbfConfig* filter = cfg.icbf_enabled ? &cfg.icbf : nullptr;

  // Start on the reference at rest, hover attitude, reference yaw.
  const Output4 r0 = reference(cfg.trajectory, 0.0);
  State9 x;
  x.position = r0.head<3>();
  x.angles = Vec3{0.0, 0.0, r0[kOutYaw]};

  ControllerState nr_state{hover_input(cfg.params)};
  Vec3 vel_integral = Vec3::Zero();

  TrajectoryLog log;
  log.dt_ctrl = dt_ctrl;
  log.horizon = cfg.nr.horizon;
  log.rows.reserve(static_cast<size_t>(n_ctrl) + 1);
  log.controller_seconds.reserve(static_cast<size_t>(n_ctrl) + 1);

  for (int64_t k = 0; k <= n_ctrl; ++k) {
    const double t = static_cast<double>(k) * dt_ctrl;
    check_state(x, t);

    const Output4 r_now = reference(cfg.trajectory, t);

    // The update computed from the state at t is applied over [t, t+dt):
    // the controller publishes within a fraction of the period.
    Input4 u_held;
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.controller == ControllerType::kNewtonRaphson) {
      const Output4 r_future = reference(cfg.trajectory, t + cfg.nr.horizon);
      u_held = controller_step(nr_state, x, r_future, cfg.nr, mats, filter);
    } else {
      u_held = baseline_step(x, r_now, reference_derivative(cfg.trajectory, t), cfg.gains,
                             cfg.params, dt_ctrl, vel_integral);
    }
    const auto t1 = std::chrono::steady_clock::now();
    log.controller_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());

    log.rows.push_back(LogRow{t, x, u_held, r_now, predict_output(x, u_held, mats)});

    if (k == n_ctrl) {
      break;
    }

    Input4 u_plant = u_held;
    u_plant.thrust = clamp_thrust(u_plant.thrust, cfg.params);
    for (int64_t s = 0; s < n_sub; ++s) {
      x = rk4_step(x, u_plant, cfg.dt_plant, cfg.params);
    }
  }
  return log;
}

double rmse(const TrajectoryLog& log, double skip) {
  double sum = 0.0;
  int64_t count = 0;
  for (const LogRow& row : log.rows) {
    if (row.t < skip - kTimeEps) {
      continue;
    }
    sum += (row.r.head<3>() - row.x.position).squaredNorm();
    ++count;
  }
  if (count == 0) {
    throw std::invalid_argument("rmse: no samples past the skip window");
  }
  return std::sqrt(sum / static_cast<double>(count));
}

RunMetrics tail_metrics(const TrajectoryLog& log, const TrajectorySpec& spec,
                        const SimConfig& cfg) {
  if (log.rows.empty()) {
    throw std::invalid_argument("tail_metrics: empty log");
  }
  const double skip = cfg.transient_skip;
  const auto shift = static_cast<size_t>(std::llround(log.horizon / log.dt_ctrl));

  RunMetrics m;
  m.rmse = rmse(log, skip);
  m.nu2 = sup_ref_speed(spec);

  double yaw_sq = 0.0;
  int64_t tail_count = 0;
  for (size_t i = 0; i < log.rows.size(); ++i) {
    const LogRow& row = log.rows[i];
    for (int axis = 0; axis < 3; ++axis) {
      m.max_abs_rate = std::max(m.max_abs_rate, std::abs(row.u.rates[axis]));
    }
    if (row.t < skip - kTimeEps) {
      continue;
    }
    ++tail_count;

    const Output4 y{row.x.position.x(), row.x.position.y(), row.x.position.z(),
                    row.x.yaw()};
    m.tail_sup_error = std::max(m.tail_sup_error, (row.r - y).norm());
    yaw_sq += (row.r[kOutYaw] - row.x.yaw()) * (row.r[kOutYaw] - row.x.yaw());

    if (i + shift < log.rows.size()) {
      const LogRow& future = log.rows[i + shift];
      const Output4 y_future{future.x.position.x(), future.x.position.y(),
                             future.x.position.z(), future.x.yaw()};
      m.nu1_hat = std::max(m.nu1_hat, (row.y_hat - y_future).norm());
    }
  }
  if (tail_count == 0) {
    throw std::invalid_argument("tail_metrics: no samples past the skip window");
  }
  m.rmse_yaw = std::sqrt(yaw_sq / static_cast<double>(tail_count));

  for (double s : log.controller_seconds) {
    m.mean_step_seconds += s;
    m.max_step_seconds = std::max(m.max_step_seconds, s);
  }
  m.mean_step_seconds /= static_cast<double>(log.controller_seconds.size());
  return m;
}

void write_csv(const TrajectoryLog& log, const std::filesystem::path& path) {
  std::string out;
  out.reserve(log.rows.size() * 220 + 256);
  out +=
      "t,px,py,pz,vx,vy,vz,phi,theta,psi,u_tau,u_p,u_q,u_r,rx,ry,rz,rpsi,"
      "yhat_x,yhat_y,yhat_z,yhat_psi\n";

  for (const LogRow& row : log.rows) {
    append_double(out, row.t);
    const Vec9 xv = row.x.to_vector();
    for (int i = 0; i < 9; ++i) {
      out += ',';
      append_double(out, xv[i]);
    }
    const Vec4 uv = row.u.to_vector();
    for (int i = 0; i < 4; ++i) {
      out += ',';
      append_double(out, uv[i]);
    }
    for (int i = 0; i < 4; ++i) {
      out += ',';
      append_double(out, row.r[i]);
    }
    for (int i = 0; i < 4; ++i) {
      out += ',';
      append_double(out, row.y_hat[i]);
    }
    out += '\n';
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("write_csv: cannot open " + path.string());
  }
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) {
    throw std::runtime_error("write_csv: write failed for " + path.string());
  }
}

}  // namespace nrflow
