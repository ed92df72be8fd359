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

#include "nrflow/trajectories.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nrflow {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Planar curve value and derivative at phase wt.
struct Planar {
  double a = 0.0;
  double b = 0.0;
};

Planar curve_position(const TrajectorySpec& spec, double wt) {
  switch (spec.kind) {
    case TrajectoryKind::kVerticalCircle:
    case TrajectoryKind::kHorizontalCircle:
      return {spec.major * std::cos(wt), spec.major * std::sin(wt)};
    default:
      return {spec.major * std::sin(wt), spec.minor * std::sin(wt) * std::cos(wt)};
  }
}

Planar curve_velocity(const TrajectorySpec& spec, double wt, double omega) {
  switch (spec.kind) {
    case TrajectoryKind::kVerticalCircle:
    case TrajectoryKind::kHorizontalCircle:
      return {-spec.major * omega * std::sin(wt), spec.major * omega * std::cos(wt)};
    default:
      // d/dt of sin(wt)*cos(wt) = w*cos(2wt)
      return {spec.major * omega * std::cos(wt), spec.minor * omega * std::cos(2.0 * wt)};
  }
}

// Map the planar curve into world axes: horizontal shapes live in the x-y
// plane, vertical ones in the x-z plane.
Output4 assemble(const TrajectorySpec& spec, const Planar& c, bool is_derivative) {
  Vec3 p = is_derivative ? Vec3::Zero() : spec.center;
  switch (spec.kind) {
    case TrajectoryKind::kHorizontalCircle:
    case TrajectoryKind::kHorizontalLemniscate:
      p.x() += c.a;
      p.y() += c.b;
      break;
    case TrajectoryKind::kVerticalCircle:
    case TrajectoryKind::kVerticalTallLemniscate:
    case TrajectoryKind::kVerticalShortLemniscate:
      p.x() += c.a;
      p.z() += c.b;
      break;
  }
  return Output4{p.x(), p.y(), p.z(), is_derivative ? 0.0 : spec.yaw_ref};
}

}  // namespace

void TrajectorySpec::validate() const {
  if (!(period > 0.0)) {
    throw std::invalid_argument("TrajectorySpec: period must be positive");
  }
  if (major < 0.0 || minor < 0.0) {
    throw std::invalid_argument("TrajectorySpec: shape scales must be non-negative");
  }
}

TrajectorySpec standard_spec(TrajectoryKind kind) {
  TrajectorySpec spec;
  spec.kind = kind;
  switch (kind) {
    case TrajectoryKind::kVerticalCircle:
    case TrajectoryKind::kHorizontalCircle:
      // 0.75 m keeps the whole speedup sweep (alpha >= 10) inside the
      // barrier-limited flight envelope at this period; beyond ~0.78 m the
      // low-speedup runs lock into a saturated limit cycle and diverge.
      spec.period = 3.14;
      spec.major = 0.75;
      spec.minor = 0.75;
      break;
    case TrajectoryKind::kHorizontalLemniscate:
      spec.period = 6.28;
      spec.major = 1.0;
      spec.minor = 1.0;
      break;
    case TrajectoryKind::kVerticalTallLemniscate:
      // Sized so the sped-up (3.14 s) variant stays flyable within the
      // 0.8 rad/s rate budget: at 1.0 m the required roll rate saturates
      // the barrier and the loop diverges.
      spec.period = 6.28;
      spec.major = 0.8;
      spec.minor = 0.8;
      break;
    case TrajectoryKind::kVerticalShortLemniscate:
      spec.period = 6.28;
      spec.major = 0.8;
      spec.minor = 0.4;
      break;
  }
  return spec;
}

Output4 reference(const TrajectorySpec& spec, double t) {
  const double omega = kTwoPi / spec.period;
  return assemble(spec, curve_position(spec, omega * t), false);
}

Output4 reference_derivative(const TrajectorySpec& spec, double t) {
  const double omega = kTwoPi / spec.period;
  return assemble(spec, curve_velocity(spec, omega * t, omega), true);
}

double sup_ref_speed(const TrajectorySpec& spec) {
  switch (spec.kind) {
    case TrajectoryKind::kVerticalCircle:
    case TrajectoryKind::kHorizontalCircle:
      return kTwoPi * spec.major / spec.period;
    default:
      break;
  }
  // Dense-grid maximum. The speed is smooth and periodic, so the grid error
  // is O((period/n)^2) near the peak; n = 1e4 puts it far below any
  // tolerance used downstream.
  constexpr int n = 10000;
  double best = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = spec.period * static_cast<double>(i) / n;
    best = std::max(best, reference_derivative(spec, t).norm());
  }
  return best;
}

std::string_view to_name(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::kVerticalCircle:
      return "vertical-circle";
    case TrajectoryKind::kHorizontalCircle:
      return "horizontal-circle";
    case TrajectoryKind::kHorizontalLemniscate:
      return "horizontal-lemniscate";
    case TrajectoryKind::kVerticalTallLemniscate:
      return "vertical-tall-lemniscate";
    case TrajectoryKind::kVerticalShortLemniscate:
      return "vertical-short-lemniscate";
  }
  return "unknown";
}

std::optional<TrajectoryKind> kind_from_name(std::string_view name) {
  for (TrajectoryKind kind : kAllTrajectoryKinds) {
    if (name == to_name(kind)) {
      return kind;
    }
  }
  return std::nullopt;
}

std::string valid_kind_names() {
  std::string out;
  for (TrajectoryKind kind : kAllTrajectoryKinds) {
    if (!out.empty()) {
      out += ", ";
    }
    out += to_name(kind);
  }
  return out;
}

}  // namespace nrflow
