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

// Tuning procedure behind PidGains::tuned_defaults().
//
// Grid search minimizing the baseline's post-transient RMSE on the
// horizontal circle, over gain ranges a multicopter autopilot would accept
// (position loop that actually converges, attitude loop that stays linear
// within the +/-0.8 rad/s rate budget). Candidates are ranked by circle
// RMSE and the winner is the best one that also completes every standard
// benchmark trajectory with RMSE <= 1 m: the flown baseline was a
// flight-worthy tune, so a gain set that falls off any of the slow
// trajectories is not an admissible stand-in, however well it scores on the
// tuning circle. The winning gains are frozen into the library; rerun this
// tool after changing the baseline structure.

#include <algorithm>
#include <cstdio>
#include <limits>
#include <vector>

#include "nrflow/sim_harness.hpp"

namespace {

using namespace nrflow;

double rmse_on(TrajectoryKind kind, const PidGains& gains) {
  SimConfig cfg = SimConfig::standard(kind, ControllerType::kBaseline);
  cfg.gains = gains;
  try {
    const TrajectoryLog log = run_closed_loop(cfg);
    return rmse(log, cfg.transient_skip);
  } catch (const std::exception&) {
    return std::numeric_limits<double>::infinity();  // diverged or faulted
  }
}

struct Candidate {
  PidGains gains;
  double circle_rmse = std::numeric_limits<double>::infinity();
};

bool flies_whole_suite(const PidGains& gains) {
  for (TrajectoryKind kind : kAllTrajectoryKinds) {
    if (!(rmse_on(kind, gains) <= 1.0)) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  // Ranges bracketing stock autopilot defaults (position P ~1, velocity P
  // ~2-4 with a small integrator, attitude P ~6-12).
  const std::vector<double> kp_pos_grid{0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
  const std::vector<double> kp_vel_grid{1.5, 2.0, 3.0, 4.0, 5.0, 6.0};
  const std::vector<double> ki_vel_grid{0.0, 0.25, 0.5, 1.0, 2.0};
  const std::vector<double> kd_vel_grid{0.0, 0.1, 0.2, 0.4};
  const std::vector<double> kp_att_grid{4.0, 6.0, 8.0, 10.0, 12.0};

  std::vector<Candidate> candidates;
  for (double kp_pos : kp_pos_grid)
    for (double kp_vel : kp_vel_grid)
      for (double ki_vel : ki_vel_grid)
        for (double kd_vel : kd_vel_grid)
          for (double kp_att : kp_att_grid) {
            Candidate c;
            c.gains.kp_pos = kp_pos;
            c.gains.kp_vel = kp_vel;
            c.gains.ki_vel = ki_vel;
            c.gains.kd_vel = kd_vel;
            c.gains.kp_att = kp_att;
            c.gains.vel_int_limit = 2.0;
            c.circle_rmse = rmse_on(TrajectoryKind::kHorizontalCircle, c.gains);
            candidates.push_back(c);
          }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return a.circle_rmse < b.circle_rmse;
            });

  for (size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    if (!std::isfinite(c.circle_rmse)) {
      break;
    }
    if (flies_whole_suite(c.gains)) {
      std::printf("winner (rank %zu): circle rmse %.6f\n", i, c.circle_rmse);
      std::printf("kp_pos %.4f kp_vel %.4f ki_vel %.4f kd_vel %.4f kp_att %.4f\n",
                  c.gains.kp_pos, c.gains.kp_vel, c.gains.ki_vel, c.gains.kd_vel,
                  c.gains.kp_att);
      for (TrajectoryKind kind : kAllTrajectoryKinds) {
        std::printf("  %-28s rmse %.5f\n", std::string(to_name(kind)).c_str(),
                    rmse_on(kind, c.gains));
      }
      return 0;
    }
    std::printf("rank %zu (circle rmse %.5f) rejected: unstable elsewhere\n", i,
                c.circle_rmse);
  }
  std::printf("no admissible candidate found\n");
  return 1;
}
