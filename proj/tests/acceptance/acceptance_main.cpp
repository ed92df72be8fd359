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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria. Criteria 4-6, 8 and
// 10-11 share one benchmark-suite execution.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nrflow/errors.hpp"
#include "nrflow/icbf_filter.hpp"
#include "nrflow/nr_controller.hpp"
#include "nrflow/predictor.hpp"
#include "nrflow/quad_model.hpp"
#include "nrflow/suite.hpp"

#include "../oracles.hpp"

namespace {

using namespace nrflow;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) {
    ++failures;
  }
}

std::string fmt(const char* f, ...) {
  va_list args;
  va_start(args, f);
  char buf[512];
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ---- criterion 1 -----------------------------------------------------

void criterion_predictor_exactness() {
  const auto t0 = Clock::now();
  const QuadParams params;
  const SystemMatrices sys = build_system_matrices(params);
  const PredictorMatrices mats = discretize(sys, 0.8);
  const auto brute = oracles::integrate_zoh(sys.A, sys.B, sys.drift, 0.8, 1e-5);

  const double da = (mats.A_tilde - brute.A_tilde).cwiseAbs().maxCoeff();
  const double db = (mats.B_tilde - brute.B_tilde).cwiseAbs().maxCoeff();
  const bool spots = std::abs(mats.A_tilde(kPx, kRoll) + 3.1392) <= 1e-6 &&
                     std::abs(mats.B_tilde(kPz, kThrust) - 0.189349) <= 1e-6 &&
                     std::abs(mats.B_tilde(kPx, kRateRoll) + 0.837120) <= 1e-6;
  const double elapsed = seconds_since(t0);

  report(1, "discretization matches fine-step integration",
         da <= 1e-8 && db <= 1e-8 && spots && elapsed < 1.0,
         fmt("max|dA|=%.2e max|dB|=%.2e spots=%s %.2fs", da, db, spots ? "ok" : "BAD",
             elapsed));
}

// ---- criterion 2 -----------------------------------------------------

void criterion_memoryless_decay() {
  const auto t0 = Clock::now();
  const double target = 8.0;
  const double dt = 1e-4;
  double u = 1.0;
  double max_rel_dev = 0.0;
  for (int k = 0; k * dt <= 5.0; ++k) {
    const double t = k * dt;
    const double expected = 7.0 * std::exp(-t);
    const double err = std::abs(target - u * u * u);
    max_rel_dev = std::max(max_rel_dev, std::abs(err - expected) / expected);
    Eigen::VectorXd g(1), r(1);
    Eigen::MatrixXd jac(1, 1);
    g[0] = u * u * u;
    r[0] = target;
    jac(0, 0) = 3.0 * u * u;
    u += dt * memoryless_nr_rate(g, jac, r)[0];
  }
  const double elapsed = seconds_since(t0);
  report(2, "memoryless flow error decays as 7*exp(-t) within 1%",
         max_rel_dev < 0.01 && elapsed < 1.0,
         fmt("max rel dev %.4f%% %.2fs", 100.0 * max_rel_dev, elapsed));
}

// ---- criterion 3 -----------------------------------------------------

void criterion_plant_predictor_consistency() {
  const QuadParams params;
  const SystemMatrices sys = build_system_matrices(params);
  const Mat9 jx = oracles::plant_state_jacobian(State9{}, hover_input(params), params);
  const Mat9x4 ju = oracles::plant_input_jacobian(State9{}, hover_input(params), params);
  const double da = (jx - sys.A).cwiseAbs().maxCoeff();
  const double db = (ju - sys.B).cwiseAbs().maxCoeff();
  report(3, "plant hover Jacobian equals the linear model", da <= 1e-5 && db <= 1e-5,
         fmt("max|dA|=%.2e max|dB|=%.2e", da, db));
}

// ---- criteria 4, 5, 6, 8, 10: shared suite run ------------------------

struct SuiteOutcome {
  std::vector<CompareEntry> entries;
  double elapsed = 0.0;
};

SuiteOutcome run_suite(const std::filesystem::path& csv_dir) {
  const auto t0 = Clock::now();
  SuiteOutcome out;
  out.entries = run_compare_suite(SimConfig{}, csv_dir);
  out.elapsed = seconds_since(t0);
  return out;
}

void criterion_rate_limits(const SuiteOutcome& suite) {
  const IcbfConfig icbf;
  const NrConfig nr;
  const double hard_bound =
      icbf.rate_max * (1.0 + nr.speedup * nr.dt_ctrl * icbf.gamma);  // 1.04

  double max_rate = 0.0;
  for (const CompareEntry& e : suite.entries) {
    max_rate = std::max(max_rate, e.newton_raphson.max_abs_rate);
  }

  SimConfig unfiltered = SimConfig::standard(TrajectoryKind::kHorizontalCircle,
                                             ControllerType::kNewtonRaphson);
  unfiltered.icbf_enabled = false;
  const TrajectoryLog log = run_closed_loop(unfiltered);
  const double unfiltered_max =
      tail_metrics(log, unfiltered.trajectory, unfiltered).max_abs_rate;

  const bool pass = max_rate <= hard_bound && max_rate <= 0.85 && unfiltered_max > 0.8;
  report(4, "barrier keeps all commanded rates within limits",
         pass,
         fmt("suite max |rate| %.4f (bound %.2f, expected <= 0.85); unfiltered max %.4f",
             max_rate, hard_bound, unfiltered_max));
}

void criterion_comparative_tracking(const SuiteOutcome& suite) {
  bool all_better = true;
  std::string detail;
  for (const CompareEntry& e : suite.entries) {
    const bool better = e.newton_raphson.rmse < e.baseline.rmse;
    all_better = all_better && better;
    if (!better) {
      detail += fmt("%s: %.4f !< %.4f; ", e.label.c_str(), e.newton_raphson.rmse,
                    e.baseline.rmse);
    }
  }
  detail += fmt("suite of %zu scenarios x 2 controllers in %.1fs", suite.entries.size(),
                suite.elapsed);
  report(5, "flow controller beats the tuned baseline on every trajectory",
         all_better && suite.elapsed < 60.0, detail);
}

void criterion_error_bound(const SuiteOutcome& suite) {
  const NrConfig nr;
  bool all_hold = true;
  double worst_margin = 1e9;
  std::string worst;
  for (const CompareEntry& e : suite.entries) {
    const RunMetrics& m = e.newton_raphson;
    const double bound = m.nu1_hat + m.nu2 / nr.speedup + 0.02;
    const double margin = bound - m.tail_sup_error;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst = fmt("%s: sup %.4f <= %.4f + %.4f/%.0f + 0.02", e.label.c_str(),
                  m.tail_sup_error, m.nu1_hat, m.nu2, nr.speedup);
    }
    all_hold = all_hold && (margin >= 0.0);
  }
  report(6, "asymptotic error bound holds on every benchmark run", all_hold,
         fmt("tightest margin %.4f m (%s)", worst_margin, worst.c_str()));
}

void criterion_alpha_trend() {
  const std::vector<double> alphas{10.0, 20.0, 30.0, 60.0};
  const SimConfig base = SimConfig::standard(TrajectoryKind::kHorizontalCircle,
                                             ControllerType::kNewtonRaphson);
  std::string detail = "tail sup error:";
  try {
    const auto entries = run_alpha_sweep(base, alphas);
    bool non_increasing = true;
    for (size_t i = 0; i < entries.size(); ++i) {
      detail += fmt(" a=%.0f: %.4f", entries[i].alpha, entries[i].metrics.tail_sup_error);
      if (i > 0) {
        non_increasing = non_increasing &&
                         entries[i].metrics.tail_sup_error <=
                             1.05 * entries[i - 1].metrics.tail_sup_error;
      }
    }
    report(7, "tail error is non-increasing in the speedup (5% band)", non_increasing,
           detail);
  } catch (const SimulationFault& e) {
    report(7, "tail error is non-increasing in the speedup (5% band)", false,
           fmt("sweep aborted: %s", e.what()));
  }
}

void criterion_fast_degradation(const SuiteOutcome& suite) {
  std::map<std::string, const CompareEntry*> by_label;
  for (const CompareEntry& e : suite.entries) {
    by_label[e.label] = &e;
  }

  bool pass = true;
  std::string detail;
  for (const char* name : {"vertical-tall-lemniscate", "vertical-short-lemniscate"}) {
    const CompareEntry& slow = *by_label.at(name);
    const CompareEntry& fast = *by_label.at(std::string(name) + "-fast");

    const double nr_increase = fast.newton_raphson.rmse - slow.newton_raphson.rmse;
    const double bl_increase = fast.baseline.rmse - slow.baseline.rmse;
    const double nr_ratio = fast.newton_raphson.rmse / slow.newton_raphson.rmse;
    const double bl_ratio = fast.baseline.rmse / slow.baseline.rmse;

    pass = pass && bl_increase > nr_increase;
    detail += fmt("%s: d_baseline +%.3f > d_flow +%.3f (ratios %.2fx vs %.2fx); ", name,
                  bl_increase, nr_increase, bl_ratio, nr_ratio);
  }
  report(8, "halving the period degrades the baseline more", pass, detail);
}

// ---- criterion 9 -----------------------------------------------------

void criterion_icbf_algebra() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  auto rand_row = [&](int n) {
    Eigen::RowVectorXd v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = dist(rng);
    }
    return v;
  };

  bool substitution_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const double b = dist(rng);
    const double gamma = std::abs(dist(rng)) + 0.25;
    const Eigen::RowVectorXd db_dx = rand_row(9);
    const Eigen::RowVectorXd db_du = rand_row(4);
    const Eigen::VectorXd f = rand_row(9).transpose();
    const Eigen::VectorXd psi = rand_row(4).transpose();

    const auto eval = BarrierEval::assemble(b, db_dx, db_du, f, psi, gamma);
    const Eigen::VectorXd eta = eta_general(eval);
    const double margin = db_dx.dot(f) + db_du.dot(psi + eta) + gamma * b;

    if (margin < -1e-10) {
      substitution_ok = false;
    }
    if (eta.norm() > 0.0 && std::abs(margin) > 1e-10) {
      substitution_ok = false;
    }
  }

  const IcbfConfig cfg;
  bool axis_ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    const double u_s = 0.99 * cfg.rate_max * dist(rng) / 2.0;
    const double nominal = 2.0 * dist(rng);
    Eigen::RowVectorXd db_du = Eigen::RowVectorXd::Zero(4);
    db_du[1] = u_s >= 0.0 ? -1.0 : 1.0;
    const double b = u_s >= 0.0 ? cfg.rate_max - u_s : u_s - cfg.rate_min;
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(4);
    psi[1] = nominal;
    const auto eval = BarrierEval::assemble(b, Eigen::RowVectorXd::Zero(9), db_du,
                                            Eigen::VectorXd::Zero(9), psi, cfg.gamma);
    const double general = nominal + eta_general(eval)[1];
    const double axis = clamp_rate_axis(u_s, nominal, cfg);
    if (std::abs(general - axis) > 1e-12) {
      axis_ok = false;
    }
  }

  report(9, "barrier algebra: substitution identity and axis consistency",
         substitution_ok && axis_ok,
         fmt("100 random evals, 200 axis cases: %s/%s",
             substitution_ok ? "ok" : "BAD", axis_ok ? "ok" : "BAD"));
}

// ---- criterion 10 ----------------------------------------------------

void criterion_timing() {
  // Re-run the flow controller on the standard circle for >= 1e4 steps and
  // average the measured per-step times.
  SimConfig cfg = SimConfig::standard(TrajectoryKind::kHorizontalCircle,
                                      ControllerType::kNewtonRaphson);
  cfg.duration = 110.0;
  cfg.transient_skip = 6.28;
  const TrajectoryLog log = run_closed_loop(cfg);

  double sum = 0.0;
  for (double s : log.controller_seconds) {
    sum += s;
  }
  const double mean = sum / static_cast<double>(log.controller_seconds.size());
  report(10, "mean controller step under 100 microseconds",
         log.controller_seconds.size() >= 10000 && mean < 1e-4,
         fmt("mean %.3g s over %zu steps", mean, log.controller_seconds.size()));
}

// ---- criterion 11 ----------------------------------------------------

void criterion_determinism(const SuiteOutcome& first,
                           const std::filesystem::path& dir_a,
                           const std::filesystem::path& dir_b) {
  const SuiteOutcome second = run_suite(dir_b);
  (void)first;

  bool identical = true;
  int compared = 0;
  std::string mismatch;
  for (const auto& entry : std::filesystem::directory_iterator(dir_a)) {
    const auto other = dir_b / entry.path().filename();
    ++compared;
    if (!std::filesystem::exists(other) || slurp(entry.path()) != slurp(other)) {
      identical = false;
      mismatch = entry.path().filename().string();
    }
  }
  report(11, "repeated comparison runs are byte-identical", identical && compared == 14,
         fmt("%d CSV pairs compared%s%s", compared, identical ? "" : "; first mismatch ",
             mismatch.c_str()));
}

}  // namespace

int main() {
  const auto tmp = std::filesystem::temp_directory_path();
  const auto dir_a = tmp / "nrflow_acceptance_a";
  const auto dir_b = tmp / "nrflow_acceptance_b";
  std::filesystem::remove_all(dir_a);
  std::filesystem::remove_all(dir_b);
  std::filesystem::create_directories(dir_a);
  std::filesystem::create_directories(dir_b);

  criterion_predictor_exactness();
  criterion_memoryless_decay();
  criterion_plant_predictor_consistency();

  const SuiteOutcome suite = run_suite(dir_a);
  criterion_rate_limits(suite);
  criterion_comparative_tracking(suite);
  criterion_error_bound(suite);
  criterion_alpha_trend();
  criterion_fast_degradation(suite);
  criterion_icbf_algebra();
  criterion_timing();
  criterion_determinism(suite, dir_a, dir_b);

  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures;
}
