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

#include "sitp/simplex.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

namespace sitp {
namespace {

LinearProgram dense_lp(int rows, int cols, const std::vector<double>& a,
                       std::vector<double> cost, std::vector<double> rhs,
                       std::vector<RowSense> sense) {
  std::vector<SparseMatrix::Triplet> t;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (a[r * cols + c] != 0.0) t.push_back({r, c, a[r * cols + c]});
    }
  }
  LinearProgram lp;
  lp.matrix = SparseMatrix::from_triplets(rows, cols, std::move(t));
  lp.cost = std::move(cost);
  lp.lower.assign(cols, 0.0);
  lp.upper.assign(cols, kInfinity);
  lp.rhs = std::move(rhs);
  lp.sense = std::move(sense);
  return lp;
}

// d = c - A'y must hold for the reported duals.
void expect_consistent_duals(const LinearProgram& lp, const SimplexResult& r) {
  for (int c = 0; c < lp.num_cols(); ++c) {
    double d = lp.cost[c];
    for (int k = lp.matrix.col_start[c]; k < lp.matrix.col_start[c + 1]; ++k) {
      d -= lp.matrix.value[k] * r.row_duals[lp.matrix.row_index[k]];
    }
    EXPECT_NEAR(d, r.reduced_costs[c], 1e-9);
  }
}

TEST(SparseMatrix, TripletsSumDuplicates) {
  const SparseMatrix m =
      SparseMatrix::from_triplets(2, 2, {{1, 1, 2.0}, {0, 1, 1.0}, {1, 1, 3.0}});
  EXPECT_EQ(m.col_start, (std::vector<int>{0, 0, 2}));
  EXPECT_EQ(m.row_index, (std::vector<int>{0, 1}));
  EXPECT_EQ(m.value, (std::vector<double>{1.0, 5.0}));
  EXPECT_THROW(SparseMatrix::from_triplets(2, 2, {{2, 0, 1.0}}),
               std::invalid_argument);
}

TEST(Simplex, TextbookTwoVariable) {
  // min -x - y, x + 2y <= 4, 3x + y <= 6.
  const LinearProgram lp = dense_lp(2, 2, {1, 2, 3, 1}, {-1, -1}, {4, 6},
                                    {RowSense::kLessEqual, RowSense::kLessEqual});
  const SimplexResult r = solve_simplex(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -14.0 / 5.0, 1e-12);
  EXPECT_NEAR(r.x[0], 8.0 / 5.0, 1e-12);
  EXPECT_NEAR(r.x[1], 6.0 / 5.0, 1e-12);
  expect_consistent_duals(lp, r);
  EXPECT_NEAR(r.row_duals[0], -2.0 / 5.0, 1e-12);
  EXPECT_NEAR(r.row_duals[1], -1.0 / 5.0, 1e-12);
}

TEST(Simplex, EqualityAndGreaterRows) {
  // min 2x + 3y, x + y = 10, x >= 3 (row), y >= 4 (row).
  const LinearProgram lp =
      dense_lp(3, 2, {1, 1, 1, 0, 0, 1}, {2, 3}, {10, 3, 4},
               {RowSense::kEqual, RowSense::kGreaterEqual, RowSense::kGreaterEqual});
  const SimplexResult r = solve_simplex(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, 2 * 6 + 3 * 4, 1e-12);
  EXPECT_GT(r.phase1_iterations, 0);
  expect_consistent_duals(lp, r);
}

TEST(Simplex, Infeasible) {
  const LinearProgram lp = dense_lp(2, 1, {1, 1}, {1}, {2, 1},
                                    {RowSense::kGreaterEqual, RowSense::kLessEqual});
  EXPECT_EQ(solve_simplex(lp).status, LpStatus::kInfeasible);
}

TEST(Simplex, Unbounded) {
  const LinearProgram lp =
      dense_lp(1, 2, {1, -1}, {-1, 0}, {1}, {RowSense::kLessEqual});
  EXPECT_EQ(solve_simplex(lp).status, LpStatus::kUnbounded);
}

TEST(Simplex, BoundedAndFreeColumns) {
  // min -x + y, x + y >= -5, x in [0, 3], y free.
  LinearProgram lp =
      dense_lp(1, 2, {1, 1}, {-1, 1}, {-5}, {RowSense::kGreaterEqual});
  lp.upper[0] = 3.0;
  lp.lower[1] = -kInfinity;
  const SimplexResult r = solve_simplex(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.x[0], 3.0, 1e-12);
  EXPECT_NEAR(r.x[1], -8.0, 1e-12);
  EXPECT_NEAR(r.objective, -11.0, 1e-12);
}

TEST(Simplex, BealeCyclingExampleTerminates) {
  const LinearProgram lp = dense_lp(
      3, 4,
      {0.25, -8, -1, 9, 0.5, -12, -0.5, 3, 0, 0, 1, 0},
      {-0.75, 20, -0.5, 6}, {0, 0, 1},
      {RowSense::kLessEqual, RowSense::kLessEqual, RowSense::kLessEqual});
  SimplexOptions opt;
  opt.bland_after_degenerate = 1;
  const SimplexResult r = solve_simplex(lp, opt);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -1.25, 1e-12);
  EXPECT_EQ(solve_simplex(lp).status, LpStatus::kOptimal);
}

TEST(Simplex, IterationLimit) {
  const LinearProgram lp = dense_lp(2, 2, {1, 2, 3, 1}, {-1, -1}, {4, 6},
                                    {RowSense::kLessEqual, RowSense::kLessEqual});
  SimplexOptions opt;
  opt.iteration_limit = 1;
  EXPECT_EQ(solve_simplex(lp, opt).status, LpStatus::kIterationLimit);
}

TEST(Simplex, WarmStartAfterBoundChange) {
  const LinearProgram lp = dense_lp(2, 2, {1, 2, 3, 1}, {-1, -1}, {4, 6},
                                    {RowSense::kLessEqual, RowSense::kLessEqual});
  const SimplexResult cold = solve_simplex(lp);
  std::vector<double> upper = lp.upper;
  upper[0] = 1.0;
  const SimplexResult warm = solve_simplex(lp, lp.lower, upper, {}, &cold.basis);
  const SimplexResult fresh = solve_simplex(lp, lp.lower, upper);
  ASSERT_EQ(warm.status, LpStatus::kOptimal);
  EXPECT_NEAR(warm.objective, fresh.objective, 1e-12);
  EXPECT_NEAR(warm.objective, -1.0 - 1.5, 1e-12);

  const SimplexResult again = solve_simplex(lp, {}, &cold.basis);
  EXPECT_EQ(again.iterations, 0);
  EXPECT_NEAR(again.objective, cold.objective, 1e-12);
}

TEST(Simplex, GarbageWarmBasisFallsBack) {
  const LinearProgram lp = dense_lp(2, 2, {1, 2, 3, 1}, {-1, -1}, {4, 6},
                                    {RowSense::kLessEqual, RowSense::kLessEqual});
  Basis junk;
  junk.basic = {0, 0};
  junk.state.assign(4, VarState::kBasic);
  const SimplexResult r = solve_simplex(lp, {}, &junk);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -14.0 / 5.0, 1e-12);
}

TEST(Simplex, DimensionMismatchThrows) {
  LinearProgram lp = dense_lp(1, 2, {1, 1}, {1, 1}, {1}, {RowSense::kLessEqual});
  lp.cost.pop_back();
  EXPECT_THROW(solve_simplex(lp), std::invalid_argument);
}

// Brute force over vertices of {Ax <= b, 0 <= x <= ub} for n = 3.
double vertex_brute_force(const std::vector<double>& a, const std::vector<double>& b,
                          const std::vector<double>& ub, const std::vector<double>& c,
                          int m) {
  constexpr int n = 3;
  // Constraint rows: m rows of A, then x_j >= 0, then x_j <= ub_j.
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (int r = 0; r < m; ++r) {
    rows.push_back({a[r * n], a[r * n + 1], a[r * n + 2]});
    rhs.push_back(b[r]);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> e(n, 0.0);
    e[j] = -1.0;
    rows.push_back(e);
    rhs.push_back(0.0);
    e[j] = 1.0;
    rows.push_back(e);
    rhs.push_back(ub[j]);
  }
  const int k = static_cast<int>(rows.size());
  double best = kInfinity;
  for (int p = 0; p < k; ++p) {
    for (int q = p + 1; q < k; ++q) {
      for (int s = q + 1; s < k; ++s) {
        double m3[3][4];
        const int pick[3] = {p, q, s};
        for (int r = 0; r < 3; ++r) {
          for (int j = 0; j < n; ++j) m3[r][j] = rows[pick[r]][j];
          m3[r][3] = rhs[pick[r]];
        }
        bool singular = false;
        for (int col = 0; col < 3 && !singular; ++col) {
          int piv = col;
          for (int r = col + 1; r < 3; ++r) {
            if (std::abs(m3[r][col]) > std::abs(m3[piv][col])) piv = r;
          }
          if (std::abs(m3[piv][col]) < 1e-10) {
            singular = true;
            break;
          }
          std::swap(m3[piv], m3[col]);
          for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m3[r][col] / m3[col][col];
            for (int j = col; j < 4; ++j) m3[r][j] -= f * m3[col][j];
          }
        }
        if (singular) continue;
        double x[3];
        for (int j = 0; j < 3; ++j) x[j] = m3[j][3] / m3[j][j];
        bool ok = true;
        for (int r = 0; r < k && ok; ++r) {
          double lhs = 0.0;
          for (int j = 0; j < n; ++j) lhs += rows[r][j] * x[j];
          ok = lhs <= rhs[r] + 1e-9;
        }
        if (!ok) continue;
        best = std::min(best, c[0] * x[0] + c[1] * x[1] + c[2] * x[2]);
      }
    }
  }
  return best;
}

TEST(Simplex, MatchesVertexEnumerationOnRandomBoxedLps) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> coef(-3.0, 5.0);
  std::uniform_real_distribution<double> pos(0.5, 6.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 3;
    std::vector<double> a(m * 3), b(m), ub(3), c(3);
    for (double& v : a) v = coef(gen);
    for (double& v : b) v = pos(gen);
    for (double& v : ub) v = pos(gen);
    for (double& v : c) v = coef(gen);
    LinearProgram lp =
        dense_lp(m, 3, a, c, b, std::vector<RowSense>(m, RowSense::kLessEqual));
    lp.upper = ub;
    const SimplexResult r = solve_simplex(lp);
    ASSERT_EQ(r.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(r.objective, vertex_brute_force(a, b, ub, c, m), 1e-7)
        << "trial " << trial;
    expect_consistent_duals(lp, r);
  }
}

TEST(LpStatus, Names) {
  EXPECT_EQ(to_string(LpStatus::kOptimal), "optimal");
  EXPECT_EQ(to_string(LpStatus::kInfeasible), "infeasible");
  EXPECT_EQ(to_string(LpStatus::kUnbounded), "unbounded");
  EXPECT_EQ(to_string(LpStatus::kIterationLimit), "iteration_limit");
}

}  // namespace
}  // namespace sitp
