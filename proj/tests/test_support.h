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

// Shared fixtures and independent reference solvers for the tests. Nothing
// here calls into the simplex engine.

#ifndef SITP_TESTS_TEST_SUPPORT_H_
#define SITP_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sitp/model.h"
#include "sitp/simplex.h"

namespace sitp::testing {

// c = [[1,2],[3,1]], z = (5,5), l = (20,20), s = 1.
inline Instance tiny_instance() {
  return Instance(2, 2, 1, {1, 2, 3, 1}, {20, 20}, {5, 5}, {1});
}

inline Instance zero_demand_instance() {
  return Instance(2, 3, 2, {1, 2, 3, 4, 5, 6}, {10, 10}, {0, 0, 0, 0, 0, 0},
                  {1, 1});
}

inline bool near_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Feasible except possibly for per-item budgets (LP solutions of patterns
// that are not sparse).
inline bool feasible_but_budget(const Instance& inst, const FlowSolution& sol) {
  for (const Violation& v : check_solution(inst, sol).violations) {
    if (v.kind != ConstraintKind::kSparsity) return false;
  }
  return true;
}

// Min-cost flow by successive shortest paths (Bellman-Ford) on
//   source -> u (cap l_u) -> (u,i) (if active) -> (v,i) (cost c_uv) -> sink.
// Returns +inf when the demand cannot be routed.
class FlowOracle {
 public:
  static double solve(const Instance& inst, const SparsePattern& pattern) {
    const int nu = inst.num_centers();
    const int nv = inst.num_zones();
    const int ni = inst.num_items();
    FlowOracle g(2 + nu + nu * ni + nv * ni);
    const int src = 0, snk = 1;
    auto center = [&](int u) { return 2 + u; };
    auto ui = [&](int u, int i) { return 2 + nu + u * ni + i; };
    auto vi = [&](int v, int i) { return 2 + nu + nu * ni + v * ni + i; };
    double need = 0.0;
    for (int u = 0; u < nu; ++u) {
      g.add(src, center(u), inst.capacity(u), 0.0);
      for (int i = 0; i < ni; ++i) {
        if (pattern.is_inactive(u, i)) continue;
        g.add(center(u), ui(u, i), kBig, 0.0);
        for (int v = 0; v < nv; ++v) g.add(ui(u, i), vi(v, i), kBig, inst.cost(u, v));
      }
    }
    for (int v = 0; v < nv; ++v) {
      for (int i = 0; i < ni; ++i) {
        g.add(vi(v, i), snk, inst.demand(v, i), 0.0);
        need += inst.demand(v, i);
      }
    }
    const auto [flow, cost] = g.run(src, snk);
    if (flow < need - 1e-6 * std::max(1.0, need)) {
      return std::numeric_limits<double>::infinity();
    }
    return cost;
  }

 private:
  static constexpr double kBig = 1e30;
  struct Arc {
    int to;
    double cap;
    double cost;
  };
  explicit FlowOracle(int n) : adj_(n) {}

  void add(int a, int b, double cap, double cost) {
    adj_[a].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({b, cap, cost});
    adj_[b].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({a, 0.0, -cost});
  }

  std::pair<double, double> run(int s, int t) {
    const int n = static_cast<int>(adj_.size());
    double flow = 0.0, cost = 0.0;
    for (;;) {
      std::vector<double> dist(n, std::numeric_limits<double>::infinity());
      std::vector<int> via(n, -1);
      std::vector<char> queued(n, 0);
      std::deque<int> q{s};
      dist[s] = 0.0;
      while (!q.empty()) {
        const int a = q.front();
        q.pop_front();
        queued[a] = 0;
        for (int e : adj_[a]) {
          if (arcs_[e].cap <= 1e-12) continue;
          const int b = arcs_[e].to;
          if (dist[a] + arcs_[e].cost < dist[b] - 1e-12) {
            dist[b] = dist[a] + arcs_[e].cost;
            via[b] = e;
            if (!queued[b]) {
              queued[b] = 1;
              q.push_back(b);
            }
          }
        }
      }
      if (via[t] < 0) break;
      double push = std::numeric_limits<double>::infinity();
      for (int b = t; b != s; b = arcs_[via[b] ^ 1].to) {
        push = std::min(push, arcs_[via[b]].cap);
      }
      for (int b = t; b != s; b = arcs_[via[b] ^ 1].to) {
        arcs_[via[b]].cap -= push;
        arcs_[via[b] ^ 1].cap += push;
      }
      flow += push;
      cost += push * dist[t];
    }
    return {flow, cost};
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

// Enumerates every pattern with at most s_i active centers per item using
// the flow oracle. Exponential; tiny instances only.
inline double brute_force_sparse_optimum(const Instance& inst) {
  const int nu = inst.num_centers();
  const int ni = inst.num_items();
  double best = std::numeric_limits<double>::infinity();
  std::vector<unsigned> mask(ni, 0);
  const unsigned full = 1u << nu;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < ni && ok; ++i) {
      ok = std::popcount(mask[i]) <= inst.sparsity(i);
    }
    if (ok) {
      SparsePattern p(nu, ni);
      for (int i = 0; i < ni; ++i) {
        for (int u = 0; u < nu; ++u) {
          if (!(mask[i] >> u & 1u)) p.deactivate(u, i);
        }
      }
      best = std::min(best, FlowOracle::solve(inst, p));
    }
    int i = 0;
    while (i < ni && ++mask[i] == full) mask[i++] = 0;
    if (i == ni) break;
  }
  return best;
}

// Free-format MPS reader: enough for the files written by export_mip.
struct ParsedMps {
  LinearProgram lp;
  std::vector<std::string> column_names;
  std::vector<std::string> row_names;
  std::vector<char> is_integer;
  std::string name;
};

inline ParsedMps parse_mps(const std::string& text) {
  ParsedMps out;
  std::istringstream in(text);
  std::string line, section, objective;
  std::unordered_map<std::string, int> row_of, col_of;
  std::vector<SparseMatrix::Triplet> trip;
  std::vector<double> obj;
  bool integer = false;
  auto col = [&](const std::string& n) {
    auto it = col_of.find(n);
    if (it != col_of.end()) return it->second;
    const int c = static_cast<int>(out.column_names.size());
    col_of.emplace(n, c);
    out.column_names.push_back(n);
    out.is_integer.push_back(integer ? 1 : 0);
    obj.push_back(0.0);
    return c;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '*') continue;
    std::istringstream f(line);
    std::vector<std::string> tok;
    for (std::string t; f >> t;) tok.push_back(t);
    if (line[0] != ' ') {
      section = tok[0];
      if (section == "NAME" && tok.size() > 1) out.name = tok[1];
      continue;
    }
    if (section == "ROWS") {
      if (tok[0] == "N") {
        objective = tok[1];
        continue;
      }
      row_of[tok[1]] = static_cast<int>(out.row_names.size());
      out.row_names.push_back(tok[1]);
      out.lp.sense.push_back(tok[0] == "E"   ? RowSense::kEqual
                             : tok[0] == "L" ? RowSense::kLessEqual
                                             : RowSense::kGreaterEqual);
    } else if (section == "COLUMNS") {
      if (tok.size() >= 3 && tok[1] == "'MARKER'") {
        integer = tok[2] == "'INTORG'";
        continue;
      }
      const int c = col(tok[0]);
      for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
        const double v = std::stod(tok[k + 1]);
        if (tok[k] == objective) {
          obj[c] += v;
        } else {
          trip.push_back({row_of.at(tok[k]), c, v});
        }
      }
    } else if (section == "RHS") {
      out.lp.rhs.resize(out.row_names.size(), 0.0);
      for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
        out.lp.rhs[row_of.at(tok[k])] = std::stod(tok[k + 1]);
      }
    } else if (section == "BOUNDS") {
      const int c = col_of.at(tok[2]);
      const double inf = std::numeric_limits<double>::infinity();
      out.lp.lower.resize(out.column_names.size(), 0.0);
      out.lp.upper.resize(out.column_names.size(), inf);
      const double v = tok.size() > 3 ? std::stod(tok[3]) : 0.0;
      if (tok[0] == "UP") out.lp.upper[c] = v;
      if (tok[0] == "LO") out.lp.lower[c] = v;
      if (tok[0] == "FX") out.lp.lower[c] = out.lp.upper[c] = v;
      if (tok[0] == "FR") out.lp.lower[c] = -inf;
      if (tok[0] == "MI") out.lp.lower[c] = -inf;
    }
  }
  const int rows = static_cast<int>(out.row_names.size());
  const int cols = static_cast<int>(out.column_names.size());
  out.lp.rhs.resize(rows, 0.0);
  out.lp.lower.resize(cols, 0.0);
  out.lp.upper.resize(cols, std::numeric_limits<double>::infinity());
  out.lp.cost = obj;
  out.lp.matrix = SparseMatrix::from_triplets(rows, cols, std::move(trip));
  return out;
}

// Solves a parsed MIP whose integer columns are binary by trying every 0/1
// assignment with the continuous columns left to the LP engine.
inline double brute_force_binary_mip(const ParsedMps& mip) {
  std::vector<int> ints;
  for (int c = 0; c < static_cast<int>(mip.is_integer.size()); ++c) {
    if (mip.is_integer[c]) ints.push_back(c);
  }
  if (ints.size() > 20) throw std::invalid_argument("too many binaries");
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> lower = mip.lp.lower, upper = mip.lp.upper;
  for (unsigned m = 0; m < (1u << ints.size()); ++m) {
    for (std::size_t k = 0; k < ints.size(); ++k) {
      lower[ints[k]] = upper[ints[k]] = (m >> k & 1u) ? 1.0 : 0.0;
    }
    const SimplexResult r = solve_simplex(mip.lp, lower, upper);
    if (r.status == LpStatus::kOptimal) best = std::min(best, r.objective);
  }
  return best;
}

}  // namespace sitp::testing

#endif  // SITP_TESTS_TEST_SUPPORT_H_
