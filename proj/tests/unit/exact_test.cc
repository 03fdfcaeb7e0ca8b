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

#include "sitp/exact.h"

#include <gtest/gtest.h>

#include "sitp/generator.h"
#include "sitp/heuristic.h"
#include "test_support.h"

namespace sitp {
namespace {

using testing::tiny_instance;

Instance small(std::uint64_t seed, int centers, int zones, int items, int s,
               double capacity_factor = 2.0) {
  GenConfig cfg;
  cfg.num_centers = centers;
  cfg.num_zones = zones;
  cfg.num_items = items;
  cfg.sparsity_budget = s;
  cfg.capacity_factor = capacity_factor;
  cfg.seed = seed;
  return generate(cfg);
}

TEST(CountPatterns, Examples) {
  EXPECT_EQ(count_sparse_patterns(tiny_instance()), 2u);
  EXPECT_EQ(count_sparse_patterns(small(1, 4, 6, 2, 2)), 36u);
  EXPECT_EQ(count_sparse_patterns(small(1, 4, 6, 2, 4)), 1u);
  EXPECT_EQ(count_sparse_patterns(small(1, 60, 2, 8, 30)), UINT64_MAX);
}

TEST(Enumerate, Tiny) {
  const ExactResult r = solve_exact_enum(tiny_instance());
  ASSERT_EQ(r.status, ExactStatus::kOptimal);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_EQ(r.pattern_count, 2u);
  EXPECT_NEAR(r.objective, 15.0, 1e-9);
  EXPECT_EQ(r.pattern, SparsePattern::from_inactive_sets(2, {{1}}));
  EXPECT_TRUE(check_solution(tiny_instance(), r.solution).feasible());
}

TEST(Enumerate, VacuousBudgetIsRelaxedLp) {
  const Instance inst = small(3, 4, 6, 2, 4);
  const ExactResult r = solve_exact_enum(inst);
  ASSERT_EQ(r.status, ExactStatus::kOptimal);
  EXPECT_EQ(r.pattern_count, 1u);
  EXPECT_NEAR(r.objective, solve_lp(build_lp(inst)).objective, 1e-9);
}

TEST(Enumerate, CountsAllPatterns) {
  const Instance inst = small(2, 4, 6, 2, 2);
  const ExactResult r = solve_exact_enum(inst);
  ASSERT_EQ(r.status, ExactStatus::kOptimal);
  EXPECT_EQ(r.pattern_count, 36u);
  EXPECT_EQ(r.lp_solve_count, 36);
  EXPECT_NEAR(r.objective, testing::brute_force_sparse_optimum(inst),
              1e-6 * r.objective);
}

TEST(Enumerate, RefusesLargeSpaces) {
  const ExactResult r = solve_exact_enum(small(2, 4, 6, 2, 2), 35);
  EXPECT_EQ(r.status, ExactStatus::kRefused);
  EXPECT_EQ(r.pattern_count, 36u);
  EXPECT_FALSE(r.has_solution());
}

TEST(Enumerate, Infeasible) {
  const Instance inst(2, 1, 1, {1, 2}, {6, 6}, {10}, {1});
  const ExactResult r = solve_exact_enum(inst);
  EXPECT_EQ(r.status, ExactStatus::kInfeasible);
  EXPECT_TRUE(r.proven_optimal);
}

TEST(BranchAndBound, Tiny) {
  const ExactResult r = solve_exact_bnb(tiny_instance());
  ASSERT_EQ(r.status, ExactStatus::kOptimal);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_NEAR(r.objective, 15.0, 1e-9);
}

TEST(BranchAndBound, NodeLimitZeroReturnsIncumbent) {
  const Instance inst = small(4, 6, 10, 3, 2);
  BnbBudget budget;
  budget.node_limit = 0;
  const ExactResult r = solve_exact_bnb(inst, budget);
  const SolveResult h = solve(inst, SolverParams::defaults_for(inst));
  ASSERT_EQ(r.status, ExactStatus::kFeasible);
  EXPECT_FALSE(r.proven_optimal);
  EXPECT_EQ(r.node_count, 0);
  EXPECT_DOUBLE_EQ(r.objective, h.solution.objective);
}

TEST(BranchAndBound, ZeroTimeLimit) {
  BnbBudget budget;
  budget.time_limit_s = 0.0;
  const ExactResult r = solve_exact_bnb(small(4, 6, 10, 3, 2), budget);
  EXPECT_EQ(r.status, ExactStatus::kFeasible);
  EXPECT_FALSE(r.proven_optimal);
}

TEST(BranchAndBound, Infeasible) {
  const Instance inst(2, 1, 1, {1, 2}, {6, 6}, {10}, {1});
  const ExactResult r = solve_exact_bnb(inst);
  EXPECT_EQ(r.status, ExactStatus::kInfeasible);
  const Instance short_cap(2, 1, 1, {1, 2}, {3, 3}, {10}, {1});
  EXPECT_EQ(solve_exact_bnb(short_cap).status, ExactStatus::kInfeasible);
}

// Tight capacities make the root bound weak so the search must branch.
TEST(BranchAndBound, AgreesWithEnumerationUnderTightCapacity) {
  long branched = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    for (double factor : {1.05, 1.3}) {
      const Instance inst = small(seed, 5, 8, 2, 2, factor);
      const ExactResult e = solve_exact_enum(inst);
      const ExactResult b = solve_exact_bnb(inst);
      ASSERT_EQ(e.status, b.status) << "seed " << seed;
      if (!e.has_solution()) continue;
      EXPECT_TRUE(testing::near_rel(e.objective, b.objective, 1e-6))
          << "seed " << seed << " factor " << factor;
      EXPECT_TRUE(check_solution(inst, b.solution).feasible());
      EXPECT_TRUE(b.pattern.is_sparse(inst));
      branched += b.node_count > 1;
    }
  }
  EXPECT_GT(branched, 10);
}

TEST(BranchAndBound, MatchesFlowOracleBruteForce) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = small(seed, 4, 5, 2, 1, 1.2);
    const double oracle = testing::brute_force_sparse_optimum(inst);
    const ExactResult b = solve_exact_bnb(inst);
    if (std::isinf(oracle)) {
      EXPECT_EQ(b.status, ExactStatus::kInfeasible);
    } else {
      ASSERT_EQ(b.status, ExactStatus::kOptimal);
      EXPECT_TRUE(testing::near_rel(oracle, b.objective, 1e-6)) << seed;
    }
  }
}

TEST(BranchAndBound, NeverWorseThanHeuristic) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance inst = small(seed, 10, 20, 4, 3);
    const ExactResult b = solve_exact_bnb(inst);
    const SolveResult h = solve(inst, SolverParams::defaults_for(inst));
    ASSERT_EQ(b.status, ExactStatus::kOptimal);
    EXPECT_LE(b.objective, h.solution.objective + 1e-9);
    EXPECT_GE(b.objective, h.relaxed_bound - 1e-9);
  }
}

TEST(ExactStatus, Names) {
  EXPECT_EQ(to_string(ExactStatus::kOptimal), "optimal");
  EXPECT_EQ(to_string(ExactStatus::kFeasible), "feasible");
  EXPECT_EQ(to_string(ExactStatus::kInfeasible), "infeasible");
  EXPECT_EQ(to_string(ExactStatus::kNoSolution), "no_solution");
  EXPECT_EQ(to_string(ExactStatus::kRefused), "refused");
}

}  // namespace
}  // namespace sitp
