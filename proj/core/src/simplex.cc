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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace sitp {

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

SparseMatrix SparseMatrix::from_triplets(int num_rows, int num_cols,
                                         std::vector<Triplet> triplets) {
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= num_rows || t.col < 0 || t.col >= num_cols) {
      throw std::invalid_argument("triplet index out of range");
    }
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) {
              return a.col != b.col ? a.col < b.col : a.row < b.row;
            });
  SparseMatrix m;
  m.num_rows = num_rows;
  m.num_cols = num_cols;
  m.col_start.assign(num_cols + 1, 0);
  int prev_row = -1;
  int prev_col = -1;
  for (const Triplet& t : triplets) {
    if (t.row == prev_row && t.col == prev_col) {
      m.value.back() += t.value;
      continue;
    }
    m.row_index.push_back(t.row);
    m.value.push_back(t.value);
    ++m.col_start[t.col + 1];
    prev_row = t.row;
    prev_col = t.col;
  }
  for (int j = 0; j < num_cols; ++j) m.col_start[j + 1] += m.col_start[j];
  return m;
}

namespace {

constexpr double kDropTol = 1e-13;
constexpr double kSingularTol = 1e-11;

using SparseColumn = std::vector<std::pair<int, double>>;

// LU factors of the basis matrix plus a product-form eta file.
class BasisFactor {
 public:
  // columns[pos] lists the (row, value) entries of the basic column at pos.
  // On a singular basis returns false and reports the positions and rows the
  // elimination could not pivot, in matching order.
  bool factorize(int m, const std::vector<SparseColumn>& columns,
                 std::vector<int>* unpivoted_positions,
                 std::vector<int>* unpivoted_rows);

  // rows: right-hand side indexed by row, overwritten. out: by position.
  void ftran(std::vector<double>& rows, std::vector<double>& out) const;
  // pos: right-hand side indexed by position, overwritten. out: by row.
  void btran(std::vector<double>& pos, std::vector<double>& out) const;

  void add_eta(int position, const std::vector<double>& alpha);
  int num_etas() const { return static_cast<int>(etas_.size()); }

 private:
  struct Step {
    int row;
    int col;
    double pivot;
    int l_begin, l_end;
    int u_begin, u_end;
  };
  struct Eta {
    int position;
    double pivot;
    int begin, end;
  };

  int m_ = 0;
  std::vector<Step> steps_;
  std::vector<int> l_index_;
  std::vector<double> l_value_;
  std::vector<int> u_index_;
  std::vector<double> u_value_;
  std::vector<Eta> etas_;
  std::vector<int> eta_index_;
  std::vector<double> eta_value_;
};

bool BasisFactor::factorize(int m, const std::vector<SparseColumn>& columns,
                            std::vector<int>* unpivoted_positions,
                            std::vector<int>* unpivoted_rows) {
  m_ = m;
  steps_.clear();
  l_index_.clear();
  l_value_.clear();
  u_index_.clear();
  u_value_.clear();
  etas_.clear();
  eta_index_.clear();
  eta_value_.clear();

  std::vector<SparseColumn> rows(m);  // row -> (col, value), active cols only
  std::vector<std::vector<int>> col_rows(m);
  for (int c = 0; c < m; ++c) {
    for (const auto& [r, v] : columns[c]) {
      if (v == 0.0) continue;
      rows[r].emplace_back(c, v);
      col_rows[c].push_back(r);
    }
  }
  std::vector<int> row_count(m), col_count(m);
  std::vector<char> row_active(m, 1), col_active(m, 1);
  std::vector<int> col_single, row_single;
  for (int k = 0; k < m; ++k) {
    row_count[k] = static_cast<int>(rows[k].size());
    col_count[k] = static_cast<int>(col_rows[k].size());
  }
  for (int k = m - 1; k >= 0; --k) {
    if (col_count[k] == 1) col_single.push_back(k);
    if (row_count[k] == 1) row_single.push_back(k);
  }

  auto find_entry = [&](int r, int c) -> int {
    const SparseColumn& row = rows[r];
    for (int k = 0; k < static_cast<int>(row.size()); ++k) {
      if (row[k].first == c) return k;
    }
    return -1;
  };
  auto remove_entry = [&](int r, int k) {
    rows[r][k] = rows[r].back();
    rows[r].pop_back();
  };

  int remaining = m;
  while (remaining > 0) {
    int pr = -1, pc = -1;
    while (pr < 0 && !col_single.empty()) {
      const int c = col_single.back();
      col_single.pop_back();
      if (!col_active[c] || col_count[c] != 1) continue;
      for (int r : col_rows[c]) {
        if (!row_active[r]) continue;
        const int k = find_entry(r, c);
        if (k >= 0) {
          if (std::abs(rows[r][k].second) > kSingularTol) {
            pr = r;
            pc = c;
          }
          break;
        }
      }
    }
    while (pr < 0 && !row_single.empty()) {
      const int r = row_single.back();
      row_single.pop_back();
      if (!row_active[r] || row_count[r] != 1) continue;
      if (std::abs(rows[r][0].second) > kSingularTol) {
        pr = r;
        pc = rows[r][0].first;
      }
    }
    if (pr < 0) {
      // Markowitz search with threshold partial pivoting.
      long best_score = -1;
      for (int c = 0; c < m; ++c) {
        if (!col_active[c] || col_count[c] == 0) continue;
        double col_max = 0.0;
        for (int r : col_rows[c]) {
          if (!row_active[r]) continue;
          const int k = find_entry(r, c);
          if (k >= 0) col_max = std::max(col_max, std::abs(rows[r][k].second));
        }
        if (col_max <= kSingularTol) continue;
        for (int r : col_rows[c]) {
          if (!row_active[r]) continue;
          const int k = find_entry(r, c);
          if (k < 0 || std::abs(rows[r][k].second) < 0.1 * col_max) continue;
          const long score =
              static_cast<long>(row_count[r] - 1) * (col_count[c] - 1);
          if (best_score < 0 || score < best_score) {
            best_score = score;
            pr = r;
            pc = c;
          }
        }
      }
    }
    if (pr < 0) break;

    const int pk = find_entry(pr, pc);
    const double pivot = rows[pr][pk].second;
    Step step{pr, pc, pivot, static_cast<int>(l_index_.size()), 0,
              static_cast<int>(u_index_.size()), 0};
    const SparseColumn pivot_row = rows[pr];
    for (const auto& [c, v] : pivot_row) {
      if (c == pc) continue;
      u_index_.push_back(c);
      u_value_.push_back(v);
    }
    step.u_end = static_cast<int>(u_index_.size());
    row_active[pr] = 0;
    col_active[pc] = 0;
    rows[pr].clear();
    for (const auto& [c, v] : pivot_row) {
      if (--col_count[c] == 1 && col_active[c]) col_single.push_back(c);
    }
    for (int r : col_rows[pc]) {
      if (!row_active[r]) continue;
      const int k = find_entry(r, pc);
      if (k < 0) continue;
      const double mult = rows[r][k].second / pivot;
      remove_entry(r, k);
      --row_count[r];
      l_index_.push_back(r);
      l_value_.push_back(mult);
      for (const auto& [c, v] : pivot_row) {
        if (c == pc) continue;
        const int j = find_entry(r, c);
        if (j >= 0) {
          rows[r][j].second -= mult * v;
          if (std::abs(rows[r][j].second) < kDropTol) {
            remove_entry(r, j);
            --row_count[r];
            if (--col_count[c] == 1) col_single.push_back(c);
          }
        } else {
          rows[r].emplace_back(c, -mult * v);
          ++row_count[r];
          ++col_count[c];
          col_rows[c].push_back(r);
        }
      }
      if (row_count[r] == 1) row_single.push_back(r);
    }
    step.l_end = static_cast<int>(l_index_.size());
    steps_.push_back(step);
    --remaining;
  }

  if (remaining == 0) return true;
  unpivoted_positions->clear();
  unpivoted_rows->clear();
  for (int k = 0; k < m; ++k) {
    if (col_active[k]) unpivoted_positions->push_back(k);
    if (row_active[k]) unpivoted_rows->push_back(k);
  }
  return false;
}

void BasisFactor::ftran(std::vector<double>& rows,
                        std::vector<double>& out) const {
  for (const Step& s : steps_) {
    const double br = rows[s.row];
    if (br == 0.0) continue;
    for (int l = s.l_begin; l < s.l_end; ++l) {
      rows[l_index_[l]] -= l_value_[l] * br;
    }
  }
  out.assign(m_, 0.0);
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    double val = rows[it->row];
    for (int u = it->u_begin; u < it->u_end; ++u) {
      val -= u_value_[u] * out[u_index_[u]];
    }
    out[it->col] = val / it->pivot;
  }
  for (const Eta& e : etas_) {
    const double xq = out[e.position] / e.pivot;
    out[e.position] = xq;
    if (xq == 0.0) continue;
    for (int k = e.begin; k < e.end; ++k) {
      out[eta_index_[k]] -= eta_value_[k] * xq;
    }
  }
}

void BasisFactor::btran(std::vector<double>& pos,
                        std::vector<double>& out) const {
  for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
    double sum = pos[it->position];
    for (int k = it->begin; k < it->end; ++k) {
      sum -= eta_value_[k] * pos[eta_index_[k]];
    }
    pos[it->position] = sum / it->pivot;
  }
  out.assign(m_, 0.0);
  for (const Step& s : steps_) {
    const double t = pos[s.col] / s.pivot;
    out[s.row] = t;
    if (t == 0.0) continue;
    for (int u = s.u_begin; u < s.u_end; ++u) {
      pos[u_index_[u]] -= u_value_[u] * t;
    }
  }
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    double sum = 0.0;
    for (int l = it->l_begin; l < it->l_end; ++l) {
      sum += l_value_[l] * out[l_index_[l]];
    }
    out[it->row] -= sum;
  }
}

void BasisFactor::add_eta(int position, const std::vector<double>& alpha) {
  Eta eta{position, alpha[position], static_cast<int>(eta_index_.size()), 0};
  for (int k = 0; k < m_; ++k) {
    if (k == position || std::abs(alpha[k]) <= kDropTol) continue;
    eta_index_.push_back(k);
    eta_value_.push_back(alpha[k]);
  }
  eta.end = static_cast<int>(eta_index_.size());
  etas_.push_back(eta);
}

class RevisedSimplex {
 public:
  RevisedSimplex(const LinearProgram& lp, std::span<const double> lower,
                 std::span<const double> upper, const SimplexOptions& options);
  SimplexResult run(const Basis* warm);

 private:
  double dot_column(int j, const std::vector<double>& y) const;
  void column(int j, SparseColumn* out) const;
  void load_basis(const Basis* warm);
  void place_nonbasic(int j);
  void refactor();
  void compute_basic_values();
  double violation(int var) const;
  double max_violation() const;
  LpStatus iterate(bool phase1);

  const LinearProgram& lp_;
  SimplexOptions options_;
  int m_;
  int n_;
  int total_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> cost_;
  std::vector<double> x_;
  std::vector<VarState> state_;
  std::vector<int> basic_;
  std::vector<int> position_;
  BasisFactor factor_;

  long iterations_ = 0;
  long phase1_iterations_ = 0;
  long degenerate_pivots_ = 0;
  int refactorizations_ = 0;

  std::vector<double> work_pos_;
  std::vector<double> work_rows_;
  std::vector<double> duals_;
  std::vector<double> alpha_;
};

RevisedSimplex::RevisedSimplex(const LinearProgram& lp,
                               std::span<const double> lower,
                               std::span<const double> upper,
                               const SimplexOptions& options)
    : lp_(lp),
      options_(options),
      m_(lp.num_rows()),
      n_(lp.num_cols()),
      total_(lp.num_rows() + lp.num_cols()) {
  lower_.resize(total_);
  upper_.resize(total_);
  cost_.assign(total_, 0.0);
  for (int j = 0; j < n_; ++j) {
    lower_[j] = lower[j];
    upper_[j] = upper[j];
    cost_[j] = lp.cost[j];
  }
  for (int r = 0; r < m_; ++r) {
    switch (lp.sense[r]) {
      case RowSense::kLessEqual:
        lower_[n_ + r] = 0.0;
        upper_[n_ + r] = kInfinity;
        break;
      case RowSense::kGreaterEqual:
        lower_[n_ + r] = -kInfinity;
        upper_[n_ + r] = 0.0;
        break;
      case RowSense::kEqual:
        lower_[n_ + r] = 0.0;
        upper_[n_ + r] = 0.0;
        break;
    }
  }
  x_.assign(total_, 0.0);
}

double RevisedSimplex::dot_column(int j, const std::vector<double>& y) const {
  if (j >= n_) return y[j - n_];
  double sum = 0.0;
  const SparseMatrix& a = lp_.matrix;
  for (int k = a.col_start[j]; k < a.col_start[j + 1]; ++k) {
    sum += a.value[k] * y[a.row_index[k]];
  }
  return sum;
}

void RevisedSimplex::column(int j, SparseColumn* out) const {
  out->clear();
  if (j >= n_) {
    out->emplace_back(j - n_, 1.0);
    return;
  }
  const SparseMatrix& a = lp_.matrix;
  for (int k = a.col_start[j]; k < a.col_start[j + 1]; ++k) {
    out->emplace_back(a.row_index[k], a.value[k]);
  }
}

void RevisedSimplex::place_nonbasic(int j) {
  VarState& s = state_[j];
  if (s == VarState::kAtUpper && !std::isfinite(upper_[j])) {
    s = VarState::kAtLower;
  }
  if (s == VarState::kAtLower && !std::isfinite(lower_[j])) {
    s = std::isfinite(upper_[j]) ? VarState::kAtUpper : VarState::kFreeZero;
  }
  if (s == VarState::kFreeZero && std::isfinite(lower_[j])) {
    s = VarState::kAtLower;
  }
  if (s == VarState::kAtUpper && lower_[j] == upper_[j]) s = VarState::kAtLower;
  switch (s) {
    case VarState::kAtLower:
      x_[j] = lower_[j];
      break;
    case VarState::kAtUpper:
      x_[j] = upper_[j];
      break;
    default:
      x_[j] = 0.0;
      break;
  }
}

void RevisedSimplex::load_basis(const Basis* warm) {
  bool usable = warm != nullptr &&
                static_cast<int>(warm->basic.size()) == m_ &&
                static_cast<int>(warm->state.size()) == total_;
  if (usable) {
    std::vector<char> seen(total_, 0);
    int basic_states = 0;
    for (VarState s : warm->state) basic_states += (s == VarState::kBasic);
    usable = basic_states == m_;
    for (int j : warm->basic) {
      if (!usable) break;
      if (j < 0 || j >= total_ || seen[j] ||
          warm->state[j] != VarState::kBasic) {
        usable = false;
      } else {
        seen[j] = 1;
      }
    }
  }
  if (usable) {
    basic_ = warm->basic;
    state_ = warm->state;
  } else {
    state_.assign(total_, VarState::kAtLower);
    basic_.resize(m_);
    for (int r = 0; r < m_; ++r) {
      basic_[r] = n_ + r;
      state_[n_ + r] = VarState::kBasic;
    }
  }
  position_.assign(total_, -1);
  for (int p = 0; p < m_; ++p) position_[basic_[p]] = p;
  for (int j = 0; j < total_; ++j) {
    if (state_[j] != VarState::kBasic) place_nonbasic(j);
  }
}

void RevisedSimplex::refactor() {
  std::vector<SparseColumn> columns(m_);
  for (int p = 0; p < m_; ++p) column(basic_[p], &columns[p]);
  std::vector<int> bad_positions, bad_rows;
  ++refactorizations_;
  if (factor_.factorize(m_, columns, &bad_positions, &bad_rows)) return;
  // Replace the dependent columns by logicals of the uncovered rows.
  for (std::size_t k = 0; k < bad_positions.size(); ++k) {
    const int p = bad_positions[k];
    const int out = basic_[p];
    const int in = n_ + bad_rows[k];
    state_[out] = VarState::kAtLower;
    position_[out] = -1;
    place_nonbasic(out);
    if (position_[in] >= 0) continue;
    basic_[p] = in;
    position_[in] = p;
    state_[in] = VarState::kBasic;
    column(in, &columns[p]);
  }
  factor_.factorize(m_, columns, &bad_positions, &bad_rows);
}

void RevisedSimplex::compute_basic_values() {
  work_rows_ = lp_.rhs;
  const SparseMatrix& a = lp_.matrix;
  for (int j = 0; j < total_; ++j) {
    if (state_[j] == VarState::kBasic || x_[j] == 0.0) continue;
    if (j >= n_) {
      work_rows_[j - n_] -= x_[j];
      continue;
    }
    for (int k = a.col_start[j]; k < a.col_start[j + 1]; ++k) {
      work_rows_[a.row_index[k]] -= a.value[k] * x_[j];
    }
  }
  factor_.ftran(work_rows_, work_pos_);
  for (int p = 0; p < m_; ++p) x_[basic_[p]] = work_pos_[p];
}

double RevisedSimplex::violation(int var) const {
  const double v = x_[var];
  if (v > upper_[var] + options_.primal_tol) return v - upper_[var];
  if (v < lower_[var] - options_.primal_tol) return v - lower_[var];
  return 0.0;
}

double RevisedSimplex::max_violation() const {
  double worst = 0.0;
  for (int p = 0; p < m_; ++p) {
    worst = std::max(worst, std::abs(violation(basic_[p])));
  }
  return worst;
}

LpStatus RevisedSimplex::iterate(bool phase1) {
  const double ptol = options_.primal_tol;
  const double dtol = options_.dual_tol;
  int degenerate_run = 0;
  std::vector<double> basic_cost(m_);
  SparseColumn entering_column;
  while (true) {
    if (iterations_ >= options_.iteration_limit) return LpStatus::kIterationLimit;

    bool any_cost = false;
    for (int p = 0; p < m_; ++p) {
      const int var = basic_[p];
      if (phase1) {
        const double viol = violation(var);
        basic_cost[p] = viol > 0 ? 1.0 : (viol < 0 ? -1.0 : 0.0);
      } else {
        basic_cost[p] = cost_[var];
      }
      any_cost = any_cost || basic_cost[p] != 0.0;
    }
    if (phase1 && !any_cost) return LpStatus::kOptimal;

    work_pos_ = basic_cost;
    factor_.btran(work_pos_, duals_);

    const bool bland = degenerate_run >= options_.bland_after_degenerate;
    int entering = -1;
    double entering_d = 0.0;
    double best_score = 0.0;
    for (int j = 0; j < total_; ++j) {
      const VarState s = state_[j];
      if (s == VarState::kBasic || lower_[j] == upper_[j]) continue;
      const double d = (phase1 ? 0.0 : cost_[j]) - dot_column(j, duals_);
      bool eligible = false;
      if (s == VarState::kAtLower) {
        eligible = d < -dtol;
      } else if (s == VarState::kAtUpper) {
        eligible = d > dtol;
      } else {
        eligible = std::abs(d) > dtol;
      }
      if (!eligible) continue;
      if (bland) {
        entering = j;
        entering_d = d;
        break;
      }
      if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        entering = j;
        entering_d = d;
      }
    }
    if (entering < 0) return LpStatus::kOptimal;

    const double dir = entering_d < 0 ? 1.0 : -1.0;
    column(entering, &entering_column);
    work_rows_.assign(m_, 0.0);
    for (const auto& [r, v] : entering_column) work_rows_[r] += v;
    factor_.ftran(work_rows_, alpha_);

    double best_t = (std::isfinite(upper_[entering]) &&
                     std::isfinite(lower_[entering]))
                        ? upper_[entering] - lower_[entering]
                        : kInfinity;
    int leave_pos = -1;
    bool leave_to_upper = false;
    double leave_alpha = 0.0;
    for (int p = 0; p < m_; ++p) {
      const double a = alpha_[p];
      if (std::abs(a) <= options_.pivot_tol) continue;
      const int var = basic_[p];
      const double rate = -dir * a;
      double xv = x_[var];
      const double lb = lower_[var];
      const double ub = upper_[var];
      if (!phase1) xv = std::clamp(xv, lb, ub);
      double bound;
      bool to_upper;
      if (rate > 0) {
        if (xv < lb - ptol) {
          bound = lb;
          to_upper = false;
        } else if (xv > ub + ptol) {
          continue;
        } else {
          if (!std::isfinite(ub)) continue;
          bound = ub;
          to_upper = true;
        }
      } else {
        if (xv > ub + ptol) {
          bound = ub;
          to_upper = true;
        } else if (xv < lb - ptol) {
          continue;
        } else {
          if (!std::isfinite(lb)) continue;
          bound = lb;
          to_upper = false;
        }
      }
      const double t = std::max(0.0, (bound - xv) / rate);
      bool take = t < best_t - 1e-12;
      if (!take && leave_pos >= 0 && t <= best_t + 1e-12) {
        take = bland ? var < basic_[leave_pos]
                     : std::abs(a) > std::abs(leave_alpha);
      }
      if (take) {
        best_t = t;
        leave_pos = p;
        leave_to_upper = to_upper;
        leave_alpha = a;
      }
    }
    if (leave_pos < 0 && !std::isfinite(best_t)) return LpStatus::kUnbounded;

    const double step = best_t;
    if (step > 0.0) {
      x_[entering] += dir * step;
      for (int p = 0; p < m_; ++p) {
        if (alpha_[p] != 0.0) x_[basic_[p]] -= dir * step * alpha_[p];
      }
    }
    if (step <= ptol) {
      ++degenerate_run;
      ++degenerate_pivots_;
    } else {
      degenerate_run = 0;
    }
    ++iterations_;
    if (phase1) ++phase1_iterations_;

    if (leave_pos < 0) {
      state_[entering] = dir > 0 ? VarState::kAtUpper : VarState::kAtLower;
      place_nonbasic(entering);
      continue;
    }
    const int leaving = basic_[leave_pos];
    state_[leaving] = leave_to_upper ? VarState::kAtUpper : VarState::kAtLower;
    place_nonbasic(leaving);
    position_[leaving] = -1;
    basic_[leave_pos] = entering;
    position_[entering] = leave_pos;
    state_[entering] = VarState::kBasic;
    factor_.add_eta(leave_pos, alpha_);
    if (factor_.num_etas() >= options_.refactor_interval) {
      refactor();
      compute_basic_values();
    }
  }
}

SimplexResult RevisedSimplex::run(const Basis* warm) {
  load_basis(warm);
  refactor();
  compute_basic_values();

  SimplexResult result;
  LpStatus status = LpStatus::kOptimal;
  if (max_violation() > 0.0) {
    status = iterate(/*phase1=*/true);
    if (status == LpStatus::kOptimal &&
        max_violation() > options_.infeasibility_tol) {
      status = LpStatus::kInfeasible;
    }
  }
  if (status == LpStatus::kOptimal) status = iterate(/*phase1=*/false);

  refactor();
  compute_basic_values();
  if (status == LpStatus::kOptimal &&
      max_violation() > options_.infeasibility_tol) {
    // Drift after refactorization; one more pass from the fresh factors.
    status = iterate(/*phase1=*/true);
    if (status == LpStatus::kOptimal) {
      status = max_violation() > options_.infeasibility_tol
                   ? LpStatus::kInfeasible
                   : iterate(/*phase1=*/false);
    }
    refactor();
    compute_basic_values();
  }

  std::vector<double> basic_cost(m_);
  for (int p = 0; p < m_; ++p) basic_cost[p] = cost_[basic_[p]];
  factor_.btran(basic_cost, result.row_duals);

  result.status = status;
  result.x.assign(x_.begin(), x_.begin() + n_);
  result.reduced_costs.resize(n_);
  double objective = 0.0;
  for (int j = 0; j < n_; ++j) {
    result.reduced_costs[j] = cost_[j] - dot_column(j, result.row_duals);
    objective += cost_[j] * x_[j];
  }
  result.objective = objective;
  result.basis.basic = basic_;
  result.basis.state = state_;
  result.iterations = iterations_;
  result.phase1_iterations = phase1_iterations_;
  result.degenerate_pivots = degenerate_pivots_;
  result.refactorizations = refactorizations_;
  return result;
}

}  // namespace

SimplexResult solve_simplex(const LinearProgram& lp,
                            const SimplexOptions& options, const Basis* warm) {
  return solve_simplex(lp, lp.lower, lp.upper, options, warm);
}

SimplexResult solve_simplex(const LinearProgram& lp,
                            std::span<const double> lower,
                            std::span<const double> upper,
                            const SimplexOptions& options, const Basis* warm) {
  if (static_cast<int>(lower.size()) != lp.num_cols() ||
      static_cast<int>(upper.size()) != lp.num_cols() ||
      static_cast<int>(lp.cost.size()) != lp.num_cols() ||
      static_cast<int>(lp.rhs.size()) != lp.num_rows() ||
      static_cast<int>(lp.sense.size()) != lp.num_rows()) {
    throw std::invalid_argument("linear program dimensions are inconsistent");
  }
  RevisedSimplex simplex(lp, lower, upper, options);
  return simplex.run(warm);
}

}  // namespace sitp
