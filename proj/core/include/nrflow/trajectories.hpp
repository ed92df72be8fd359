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

#ifndef NRFLOW_TRAJECTORIES_HPP
#define NRFLOW_TRAJECTORIES_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "nrflow/types.hpp"

namespace nrflow {

enum class TrajectoryKind {
  kVerticalCircle,
  kHorizontalCircle,
  kHorizontalLemniscate,
  kVerticalTallLemniscate,
  kVerticalShortLemniscate,
};

inline constexpr std::array<TrajectoryKind, 5> kAllTrajectoryKinds = {
    TrajectoryKind::kVerticalCircle,          TrajectoryKind::kHorizontalCircle,
    TrajectoryKind::kHorizontalLemniscate,    TrajectoryKind::kVerticalTallLemniscate,
    TrajectoryKind::kVerticalShortLemniscate,
};

// Periodic benchmark reference. Circles are center + major*(cos, sin) in the
// designated plane; figure-eights use the Gerono form
// center + (major*sin wt, minor*sin wt*cos wt). Yaw is held constant.
struct TrajectorySpec {
  TrajectoryKind kind = TrajectoryKind::kHorizontalCircle;
  double period = 3.14;                // s
  Vec3 center = Vec3{0.0, 0.0, 1.5};   // m
  double major = 0.8;                  // circle radius / figure-eight long axis [m]
  double minor = 0.8;                  // figure-eight cross axis [m]; unused for circles
  double yaw_ref = 0.0;                // rad

  void validate() const;
};

// Benchmark defaults: circles 0.8 m radius with a 3.14 s period, figure
// eights 6.28 s; tall and short verticals differ in the cross-axis scale.
TrajectorySpec standard_spec(TrajectoryKind kind);

Output4 reference(const TrajectorySpec& spec, double t);

// Analytic time derivative of `reference`. Consumed by metrics and by the
// baseline's velocity feed-forward only.
Output4 reference_derivative(const TrajectorySpec& spec, double t);

// Supremum of the reference speed over one period: exact for circles,
// dense-grid maximum for figure-eights.
double sup_ref_speed(const TrajectorySpec& spec);

std::string_view to_name(TrajectoryKind kind);
std::optional<TrajectoryKind> kind_from_name(std::string_view name);

// "vertical-circle, horizontal-circle, ..." for error messages.
std::string valid_kind_names();

}  // namespace nrflow

#endif  // NRFLOW_TRAJECTORIES_HPP
