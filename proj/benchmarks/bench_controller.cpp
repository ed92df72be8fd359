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

#include <benchmark/benchmark.h>

#include "nrflow/nr_controller.hpp"
#include "nrflow/quad_model.hpp"
#include "nrflow/sim_harness.hpp"

namespace {

using namespace nrflow;

void BM_ControllerStep(benchmark::State& state) {
  const QuadParams params;
  const PredictorMatrices mats = discretize(build_system_matrices(params), 0.8);
  const NrConfig cfg;
  const IcbfConfig filter;

  ControllerState ctrl{hover_input(params)};
  State9 x;
  x.position = Vec3{0.2, -0.1, 1.5};
  x.velocity = Vec3{0.4, 0.3, -0.1};
  x.angles = Vec3{0.05, -0.03, 0.0};
  const Output4 r{0.5, 0.2, 1.6, 0.0};

  for (auto _ : state) {
    benchmark::DoNotOptimize(controller_step(ctrl, x, r, cfg, mats, &filter));
  }
}
BENCHMARK(BM_ControllerStep);

void BM_PredictOutput(benchmark::State& state) {
  const QuadParams params;
  const PredictorMatrices mats = discretize(build_system_matrices(params), 0.8);
  State9 x;
  x.velocity = Vec3{0.4, 0.3, -0.1};
  const Input4 u = hover_input(params);

  for (auto _ : state) {
    benchmark::DoNotOptimize(predict_output(x, u, mats));
  }
}
BENCHMARK(BM_PredictOutput);

void BM_PlantRk4Step(benchmark::State& state) {
  const QuadParams params;
  State9 x;
  x.angles = Vec3{0.1, -0.05, 0.2};
  const Input4 u = hover_input(params);

  for (auto _ : state) {
    x = rk4_step(x, u, 0.001, params);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_PlantRk4Step);

void BM_ClosedLoopSecond(benchmark::State& state) {
  SimConfig cfg = SimConfig::standard(TrajectoryKind::kHorizontalCircle,
                                      ControllerType::kNewtonRaphson);
  cfg.duration = 1.0;
  cfg.transient_skip = 0.5;

  for (auto _ : state) {
    benchmark::DoNotOptimize(run_closed_loop(cfg));
  }
}
BENCHMARK(BM_ClosedLoopSecond)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
