// Copyright 2026 The SITP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Micro benchmarks for the LP engine and the solvers.
// Run: ./sitp_benchmarks --benchmark_filter=Heuristic

#include <benchmark/benchmark.h>

#include "sitp/exact.h"
#include "sitp/generator.h"
#include "sitp/heuristic.h"
#include "sitp/lp.h"

namespace {

sitp::Instance make(int centers, int zones, int items, int s) {
  sitp::GenConfig cfg;
  cfg.num_centers = centers;
  cfg.num_zones = zones;
  cfg.num_items = items;
  cfg.sparsity_budget = s;
  cfg.seed = 7;
  return sitp::generate(cfg);
}

void BM_RelaxedLp(benchmark::State& state) {
  const sitp::Instance inst = make(30, 100, static_cast<int>(state.range(0)), 5);
  const sitp::LpProblem lp = sitp::build_lp(inst);
  const sitp::Tolerances tol;
  for (auto _ : state) {
    sitp::LpSolution sol = sitp::solve_lp(lp, tol);
    benchmark::DoNotOptimize(sol.objective);
  }
  state.SetLabel("|I|=" + std::to_string(state.range(0)));
}
BENCHMARK(BM_RelaxedLp)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

// Re-solve after toggling one fixing, warm from the previous basis.
void BM_WarmResolve(benchmark::State& state) {
  const sitp::Instance inst = make(30, 100, 4, 5);
  sitp::LpProblem lp = sitp::build_lp(inst);
  const sitp::Tolerances tol;
  const sitp::LpSolution base = sitp::solve_lp(lp, tol);
  int u = 0;
  for (auto _ : state) {
    lp.deactivate(u, 0);
    sitp::LpSolution sol = sitp::solve_lp(lp, tol, 5'000'000, &base.basis);
    benchmark::DoNotOptimize(sol.objective);
    lp.activate(u, 0);
    u = (u + 1) % inst.num_centers();
  }
}
BENCHMARK(BM_WarmResolve)->Unit(benchmark::kMicrosecond);

void BM_Heuristic(benchmark::State& state) {
  const sitp::Instance inst = make(30, 100, static_cast<int>(state.range(0)), 5);
  const sitp::SolverParams params = sitp::SolverParams::defaults_for(inst);
  for (auto _ : state) {
    sitp::SolveResult r = sitp::solve(inst, params);
    benchmark::DoNotOptimize(r.solution.objective);
  }
}
BENCHMARK(BM_Heuristic)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BranchAndBound(benchmark::State& state) {
  const sitp::Instance inst = make(10, 20, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    sitp::ExactResult r = sitp::solve_exact_bnb(inst);
    benchmark::DoNotOptimize(r.objective);
  }
}
BENCHMARK(BM_BranchAndBound)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
