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

// Command-line front end: gen, solve, exact, validate, export-mip, bench.
// Exit codes: 0 success, 1 infeasible or failed, 2 usage or file error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sitp/bench.h"
#include "sitp/exact.h"
#include "sitp/generator.h"
#include "sitp/heuristic.h"
#include "sitp/json_io.h"
#include "sitp/model.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Bad input files; reported with exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sitp::Instance load_instance(const std::string& path) {
  try {
    return sitp::instance_from_json(sitp::read_json_file(path));
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

sitp::FlowSolution load_solution(const std::string& path) {
  try {
    json j = sitp::read_json_file(path);
    // Accept both a bare solution and the envelope written by solve/exact.
    if (j.is_object() && j.contains("solution")) j = j.at("solution");
    return sitp::solution_from_json(j);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const std::string& out, const json& j) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(1) << '\n';
  } else {
    sitp::write_json_file(out, j);
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

struct TolFlags {
  double zero_tol = sitp::Tolerances{}.zero_tol;
  double feas_tol = sitp::Tolerances{}.feas_tol;

  void attach(CLI::App* app) {
    app->add_option("--zero-tol", zero_tol, "flows at or below count as zero")
        ->check(CLI::PositiveNumber);
    app->add_option("--feas-tol", feas_tol, "feasibility tolerance")
        ->check(CLI::PositiveNumber);
  }
  sitp::Tolerances get() const {
    sitp::Tolerances t;
    t.zero_tol = zero_tol;
    t.feas_tol = feas_tol;
    t.check();
    return t;
  }
};

json stats_json(const sitp::SolveStats& s) {
  json j;
  j["sparsify_iters"] = s.sparsify_iters;
  j["improve_iters"] = s.improve_iters;
  j["lp_solve_count"] = s.lp_solve_count;
  j["simplex_iterations"] = s.simplex_iterations;
  j["wall_time_s"] = s.wall_time_s;
  j["sparsify_objective"] = s.sparsify_objective;
  j["improve_trajectory"] = s.improve_trajectory;
  json pinned = json::array();
  for (const auto& [u, i] : s.pinned) pinned.push_back({u, i});
  j["pinned"] = pinned;
  return j;
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse-inbound transportation toolkit"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "progress on stderr");

  // gen
  sitp::GenConfig gen_cfg;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--centers", gen_cfg.num_centers)->check(CLI::PositiveNumber);
  gen->add_option("--zones", gen_cfg.num_zones)->check(CLI::PositiveNumber);
  gen->add_option("--items", gen_cfg.num_items)->check(CLI::PositiveNumber);
  gen->add_option("--sparsity", gen_cfg.sparsity_budget)->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_cfg.seed);
  gen->add_option("--demand-min", gen_cfg.demand_min);
  gen->add_option("--demand-max", gen_cfg.demand_max);
  gen->add_option("--capacity-factor", gen_cfg.capacity_factor);
  gen->add_option("--out", gen_out, "instance file (stdout if omitted)");

  // solve
  std::string solve_in, solve_out;
  int k1 = 0, k2 = 20, threads = 1, max_improve = 10000;
  TolFlags solve_tol;
  CLI::App* solve = app.add_subcommand("solve", "run Sparsify-Improve");
  solve->add_option("instance", solve_in)->required();
  solve->add_option("--k1", k1, "sparsify batch size (0: ceil(sqrt(items)))")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--k2", k2, "improve candidates per iteration")
      ->check(CLI::PositiveNumber);
  solve->add_option("--threads", threads)->check(CLI::PositiveNumber);
  solve->add_option("--max-improve", max_improve)->check(CLI::NonNegativeNumber);
  solve->add_option("--out", solve_out, "solution file (stdout if omitted)");
  solve_tol.attach(solve);

  // exact
  std::string exact_in, exact_out, method = "bnb";
  long node_limit = -1;
  double time_limit = 0.0;
  std::uint64_t pattern_limit = 1'000'000;
  TolFlags exact_tol;
  CLI::App* exact = app.add_subcommand("exact", "solve to optimality");
  exact->add_option("instance", exact_in)->required();
  exact->add_option("--method", method)->check(CLI::IsMember({"enum", "bnb"}));
  exact->add_option("--node-limit", node_limit, "branch-and-bound nodes (-1: none)");
  exact->add_option("--time-limit", time_limit, "seconds (0: none)")
      ->check(CLI::NonNegativeNumber);
  exact->add_option("--pattern-limit", pattern_limit, "enumeration refusal threshold");
  exact->add_option("--out", exact_out, "solution file (stdout if omitted)");
  exact_tol.attach(exact);

  // validate
  std::string val_inst, val_sol;
  TolFlags val_tol;
  CLI::App* validate = app.add_subcommand("validate", "check a solution");
  validate->add_option("instance", val_inst)->required();
  validate->add_option("solution", val_sol)->required();
  val_tol.attach(validate);

  // export-mip
  std::string mip_in, mip_out, mip_name;
  CLI::App* export_mip = app.add_subcommand("export-mip", "write the MIP as MPS");
  export_mip->add_option("instance", mip_in)->required();
  export_mip->add_option("--name", mip_name, "model name (default: file stem)");
  export_mip->add_option("--out", mip_out, "MPS file (default: <name>.mps)");

  // bench
  sitp::BenchmarkGrid grid;
  std::vector<int> bench_items{1, 2, 4};
  std::uint64_t first_seed = 1;
  int seed_count = 10;
  std::string bench_method = "bnb", bench_out = "bench";
  double bench_time_limit = 0.0;
  long bench_node_limit = -1;
  int exact_max_items = 1 << 30;
  bool no_timing = false;
  TolFlags bench_tol;
  CLI::App* bench = app.add_subcommand("bench", "run a benchmark grid");
  bench->add_option("--centers", grid.base.num_centers)->check(CLI::PositiveNumber);
  bench->add_option("--zones", grid.base.num_zones)->check(CLI::PositiveNumber);
  bench->add_option("--items", bench_items, "item counts, e.g. 1,2,4")
      ->delimiter(',');
  bench->add_option("--sparsity", grid.base.sparsity_budget)->check(CLI::PositiveNumber);
  bench->add_option("--capacity-factor", grid.base.capacity_factor);
  bench->add_option("--seed", first_seed, "first seed");
  bench->add_option("--seeds", seed_count, "seeds per size")->check(CLI::PositiveNumber);
  bench->add_option("--k1", grid.k1)->check(CLI::NonNegativeNumber);
  bench->add_option("--k2", grid.k2)->check(CLI::PositiveNumber);
  bench->add_option("--method", bench_method)
      ->check(CLI::IsMember({"enum", "bnb", "none"}));
  bench->add_option("--exact-max-items", exact_max_items);
  bench->add_option("--node-limit", bench_node_limit);
  bench->add_option("--time-limit", bench_time_limit)->check(CLI::NonNegativeNumber);
  bench->add_option("--threads", grid.threads)->check(CLI::PositiveNumber);
  bench->add_flag("--no-timing", no_timing, "blank the timing columns");
  bench->add_option("--out", bench_out,
                    "output prefix: <out>.csv, <out>.json, <out>_plot.csv");
  bench_tol.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      try {
        gen_cfg.check();
      } catch (const std::invalid_argument& e) {
        std::cerr << "gen: " << e.what() << '\n';
        return kExitUsage;
      }
      emit(gen_out, sitp::generate_json(gen_cfg));
      return kExitOk;
    }

    if (*solve) {
      const sitp::Instance inst = load_instance(solve_in);
      sitp::SolverParams params = sitp::SolverParams::defaults_for(inst);
      if (k1 > 0) params.k1 = k1;
      params.k2 = k2;
      params.threads = threads;
      params.max_improve_iters = max_improve;
      params.tol = solve_tol.get();
      const sitp::SolveResult r = sitp::solve(inst, params);

      const auto& st = r.stats;
      if (verbose) {
        std::fprintf(stderr, "relaxed bound %.6f\n", r.relaxed_bound);
        std::fprintf(stderr, "sparsify: %d iterations, objective %.6f\n",
                     st.sparsify_iters, st.sparsify_objective);
        for (std::size_t k = 0; k < st.improve_trajectory.size(); ++k) {
          std::fprintf(stderr, "improve %zu: objective %.6f\n", k,
                       st.improve_trajectory[k]);
        }
      }
      std::fprintf(stderr, "%s objective=%.6f lp_solves=%ld time=%.3fs\n",
                   sitp::to_string(r.status).c_str(), r.solution.objective,
                   st.lp_solve_count, st.wall_time_s);

      json j;
      j["status"] = sitp::to_string(r.status);
      j["relaxed_bound"] = r.relaxed_bound;
      j["stats"] = stats_json(st);
      if (r.status == sitp::SolveStatus::kSolved) {
        j["solution"] = sitp::solution_to_json(r.solution);
        j["pattern"] = sitp::pattern_to_json(r.pattern);
      }
      emit(solve_out, j);
      return r.status == sitp::SolveStatus::kSolved ? kExitOk : kExitFailed;
    }

    if (*exact) {
      const sitp::Instance inst = load_instance(exact_in);
      const sitp::Tolerances tol = exact_tol.get();
      sitp::ExactResult r;
      if (method == "enum") {
        r = sitp::solve_exact_enum(inst, pattern_limit, tol);
      } else {
        sitp::BnbBudget budget;
        budget.node_limit = node_limit;
        if (time_limit > 0.0) budget.time_limit_s = time_limit;
        sitp::SolverParams params = sitp::SolverParams::defaults_for(inst);
        params.tol = tol;
        r = sitp::solve_exact_bnb(inst, budget, params);
      }
      std::fprintf(stderr, "%s objective=%.6f nodes=%ld patterns=%llu time=%.3fs\n",
                   sitp::to_string(r.status).c_str(), r.objective, r.node_count,
                   static_cast<unsigned long long>(r.pattern_count), r.wall_time_s);
      json j;
      j["status"] = sitp::to_string(r.status);
      j["method"] = method;
      j["proven_optimal"] = r.proven_optimal;
      j["node_count"] = r.node_count;
      j["pattern_count"] = r.pattern_count;
      j["lp_solve_count"] = r.lp_solve_count;
      j["wall_time_s"] = r.wall_time_s;
      if (r.has_solution()) {
        j["solution"] = sitp::solution_to_json(r.solution);
        j["pattern"] = sitp::pattern_to_json(r.pattern);
      }
      emit(exact_out, j);
      return r.has_solution() ? kExitOk : kExitFailed;
    }

    if (*validate) {
      const sitp::Instance inst = load_instance(val_inst);
      const sitp::FlowSolution sol = load_solution(val_sol);
      sitp::FeasibilityReport rep;
      try {
        rep = sitp::check_solution(inst, sol, val_tol.get());
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("solution does not match instance: ") +
                         e.what());
      }
      if (rep.feasible()) {
        std::cout << "feasible\n";
      } else {
        std::cout << rep.summary();
      }
      return rep.feasible() ? kExitOk : kExitFailed;
    }

    if (*export_mip) {
      const sitp::Instance inst = load_instance(mip_in);
      const std::string name = mip_name.empty() ? stem_of(mip_in) : mip_name;
      const std::string path = mip_out.empty() ? name + ".mps" : mip_out;
      write_text(path, sitp::export_mip(inst, name));
      if (verbose) std::fprintf(stderr, "wrote %s\n", path.c_str());
      return kExitOk;
    }

    if (*bench) {
      grid.item_sizes = bench_items;
      grid.seeds.clear();
      for (int k = 0; k < seed_count; ++k) grid.seeds.push_back(first_seed + k);
      grid.exact = bench_method == "enum"  ? sitp::ExactMethod::kEnumerate
                   : bench_method == "bnb" ? sitp::ExactMethod::kBranchAndBound
                                           : sitp::ExactMethod::kNone;
      grid.exact_max_items = exact_max_items;
      grid.exact_budget.node_limit = bench_node_limit;
      if (bench_time_limit > 0.0) grid.exact_budget.time_limit_s = bench_time_limit;
      grid.tol = bench_tol.get();
      try {
        grid.base.check();
      } catch (const std::invalid_argument& e) {
        std::cerr << "bench: " << e.what() << '\n';
        return kExitUsage;
      }
      const sitp::BenchmarkReport report = sitp::run_benchmark(grid);
      write_text(bench_out + ".csv", sitp::report_to_csv(report, !no_timing));
      sitp::write_json_file(bench_out + ".json",
                            sitp::report_to_json(report, !no_timing));
      write_text(bench_out + "_plot.csv", sitp::emit_plot_data(report));
      for (const auto& a : report.aggregates) {
        std::fprintf(stderr, "items=%d instances=%d heuristic %.3fs", a.num_items,
                     a.instances, a.mean_heuristic_time_s);
        if (a.mean_exact_time_s) std::fprintf(stderr, " exact %.3fs", *a.mean_exact_time_s);
        if (a.mean_gap_vs_exact_percent) {
          std::fprintf(stderr, " gap %.2f%%", *a.mean_gap_vs_exact_percent);
        }
        std::fprintf(stderr, "\n");
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
