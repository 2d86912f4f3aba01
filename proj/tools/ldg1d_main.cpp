// Command-line driver: stationary solves, time evolution, convergence
// studies, and the viscosity-selection experiment over the built-in
// problem catalog (test1..test8).

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ldg1d/study.hpp"

namespace {

using namespace ldg1d;

// Flat key=value config: each entry becomes --key=value placed before the
// command-line flags, so explicit flags override the file.
std::vector<std::string> apply_config_file(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;

  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error("config line without '=': " + line);
    std::string key = line.substr(first, eq - first);
    std::string value = line.substr(eq + 1);
    const auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    tokens.push_back("--" + key + "=" + value);
  }

  // insert config tokens right after the subcommand name
  std::vector<std::string> out;
  bool inserted = false;
  for (const std::string& a : rest) {
    out.push_back(a);
    if (!inserted && !a.empty() && a[0] != '-') {
      out.insert(out.end(), tokens.begin(), tokens.end());
      inserted = true;
    }
  }
  if (!inserted) out.insert(out.end(), tokens.begin(), tokens.end());
  return out;
}

void dump_solution_csv(const std::string& path, const DGFunction& u, const Problem& prob, double t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "x_sample,u_h,exact,error\n";
  const DGSpace& s = u.space();
  const bool have_exact = static_cast<bool>(prob.exact);
  for (int j = 1; j <= s.mesh().cells(); ++j) {
    std::vector<double> xs;
    xs.push_back(s.mesh().node(j - 1));
    for (int g = 0; g < s.n_quad(); ++g) xs.push_back(s.quad_point(j, g));
    xs.push_back(s.mesh().node(j));
    for (const double x : xs) {
      const double uh = u.eval_in_cell(j, x);
      char buf[160];
      if (have_exact) {
        const double ex = prob.exact(x, t);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x, uh, ex, uh - ex);
      } else {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,,\n", x, uh);
      }
      out << buf;
    }
  }
}

struct CommonOpts {
  std::string problem;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  SolverConfig solver_config;
  std::string jacobian = "analytic";

  void attach(CLI::App* cmd, bool need_problem, bool with_alpha = true) {
    auto* p = cmd->add_option("--problem", problem, "problem name (test1..test8)");
    if (need_problem) p->required();
    if (with_alpha) {
      cmd->add_option("--alpha", alpha, "numerical moment coefficient (default: the problem's)");
    }
    cmd->add_option("--newton-tol", solver_config.newton_tol, "Newton residual tolerance");
    cmd->add_option("--max-newton-iters", solver_config.max_newton_iters, "Newton iteration cap");
    cmd->add_option("--splitting-tol", solver_config.splitting_tol,
                    "splitting tolerance on the change in (p2+p3)/2");
    cmd->add_option("--max-splitting-iters", solver_config.max_splitting_iters,
                    "splitting iteration cap");
    cmd->add_option("--jacobian", jacobian, "analytic | fd")
        ->check(CLI::IsMember({"analytic", "fd"}));
  }
  void finish() {
    solver_config.jacobian = jacobian == "fd" ? SolverConfig::Jacobian::finite_difference
                                              : SolverConfig::Jacobian::analytic;
  }
};

int run(std::vector<std::string> args) {
  CLI::App app{"1D LDG solver for fully nonlinear second-order PDEs"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "stationary solve on one mesh");
  CommonOpts solve_opts;
  solve_opts.attach(solve_cmd, true);
  int solve_r = 1, solve_J = 16;
  std::string solve_solver = "newton", solve_out, solve_coeffs;
  solve_cmd->add_option("--r", solve_r, "polynomial degree")->required();
  solve_cmd->add_option("--J", solve_J, "number of cells")->required();
  solve_cmd->add_option("--solver", solve_solver, "newton | splitting")
      ->check(CLI::IsMember({"newton", "splitting"}));
  solve_cmd->add_option("--out", solve_out, "CSV dump of the solution (x_sample,u_h,exact,error)");
  solve_cmd->add_option("--dump-coeffs", solve_coeffs, "CSV dump of the DG coefficients");

  // evolve
  auto* evolve_cmd = app.add_subcommand("evolve", "time evolution on one mesh");
  CommonOpts evolve_opts;
  evolve_opts.attach(evolve_cmd, true);
  int evolve_r = 1, evolve_J = 16, snapshot_stride = 0;
  double evolve_dt = std::numeric_limits<double>::quiet_NaN();
  double evolve_kappa = std::numeric_limits<double>::quiet_NaN();
  double evolve_T = std::numeric_limits<double>::quiet_NaN();
  std::string evolve_scheme = "rk4", evolve_out, evolve_projection = "modified", snapshot_prefix;
  evolve_cmd->add_option("--r", evolve_r, "polynomial degree")->required();
  evolve_cmd->add_option("--J", evolve_J, "number of cells")->required();
  evolve_cmd->add_option("--scheme", evolve_scheme, "rk4 | feuler | trapezoidal")
      ->check(CLI::IsMember({"rk4", "feuler", "trapezoidal"}));
  evolve_cmd->add_option("--dt", evolve_dt, "time step");
  evolve_cmd->add_option("--kappa-t", evolve_kappa, "CFL factor: dt = kappa_t h^2");
  evolve_cmd->add_option("--T", evolve_T, "final time (default: the problem's)");
  evolve_cmd->add_option("--projection", evolve_projection, "modified | standard")
      ->check(CLI::IsMember({"modified", "standard"}));
  evolve_cmd->add_option("--out", evolve_out, "CSV dump of the final solution");
  evolve_cmd->add_option("--snapshots", snapshot_prefix, "prefix for snapshot CSV files");
  evolve_cmd->add_option("--snapshot-stride", snapshot_stride, "record every k-th step");

  // study
  auto* study_cmd = app.add_subcommand("study", "convergence study over a mesh sweep");
  CommonOpts study_opts;
  study_opts.attach(study_cmd, true);
  std::vector<int> study_r{1};
  std::vector<int> study_J{4, 8, 16, 32};
  std::string study_solver = "newton", study_scheme = "stationary", study_projection = "modified";
  std::string study_md, study_csv;
  double study_dt = std::numeric_limits<double>::quiet_NaN();
  double study_kappa = std::numeric_limits<double>::quiet_NaN();
  double study_T = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t study_seed = 0;
  study_cmd->add_option("--r", study_r, "degrees, e.g. 0,1,2")->delimiter(',');
  study_cmd->add_option("--J", study_J, "mesh sizes, e.g. 4,8,16,32")->delimiter(',');
  study_cmd->add_option("--solver", study_solver, "newton | splitting")
      ->check(CLI::IsMember({"newton", "splitting"}));
  study_cmd->add_option("--scheme", study_scheme, "stationary | rk4 | feuler | trapezoidal")
      ->check(CLI::IsMember({"stationary", "rk4", "feuler", "trapezoidal"}));
  study_cmd->add_option("--dt", study_dt, "time step (implicit / explicit)");
  study_cmd->add_option("--kappa-t", study_kappa, "CFL factor for explicit schemes");
  study_cmd->add_option("--T", study_T, "final time");
  study_cmd->add_option("--projection", study_projection, "modified | standard")
      ->check(CLI::IsMember({"modified", "standard"}));
  study_cmd->add_option("--seed", study_seed, "seed recorded with the run");
  study_cmd->add_option("--out", study_md, "Markdown table path");
  study_cmd->add_option("--csv", study_csv, "CSV path (stem; one file per degree)");

  // select
  auto* select_cmd = app.add_subcommand("select", "viscosity-selection experiment (test1)");
  CommonOpts select_opts;
  select_opts.attach(select_cmd, false, false);
  int select_r = 0, select_J = 40;
  double select_alpha = 40.0;
  std::string select_out;
  select_cmd->add_option("--alpha", select_alpha, "numerical moment coefficient")->required();
  select_cmd->add_option("--r", select_r, "polynomial degree");
  select_cmd->add_option("--J", select_J, "number of cells");
  select_cmd->add_option("--out", select_out, "CSV dump of the final iterate");

  std::vector<char*> argv;
  std::vector<std::string> storage = std::move(args);
  storage.insert(storage.begin(), "ldg1d");
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (solve_cmd->parsed()) {
    solve_opts.finish();
    RunConfig cfg;
    cfg.problem = solve_opts.problem;
    cfg.degrees = {solve_r};
    cfg.mesh_sizes = {solve_J};
    cfg.alpha = solve_opts.alpha;
    cfg.solver = solve_solver == "splitting" ? SolverChoice::splitting : SolverChoice::newton;
    cfg.solver_config = solve_opts.solver_config;
    const SingleRun run = run_single(cfg, solve_r, solve_J);
    std::printf("%s r=%d J=%d: l2=%.3e linf=%.3e (%d iterations)\n", cfg.problem.c_str(), solve_r,
                solve_J, run.l2, run.linf, static_cast<int>(run.log.size()));
    for (const IterationRecord& rec : run.log) {
      std::printf("  iter %3d  residual %.3e  step %.3g\n", rec.iteration, rec.residual_norm,
                  rec.step_scale);
    }
    const Problem prob = problem_by_name(cfg.problem);
    if (!solve_out.empty()) dump_solution_csv(solve_out, run.u, prob, 0.0);
    if (!solve_coeffs.empty()) {
      std::ofstream out(solve_coeffs);
      write_csv(run.u, out);
    }
    return 0;
  }

  if (evolve_cmd->parsed()) {
    evolve_opts.finish();
    RunConfig cfg;
    cfg.problem = evolve_opts.problem;
    cfg.degrees = {evolve_r};
    cfg.mesh_sizes = {evolve_J};
    cfg.alpha = evolve_opts.alpha;
    cfg.scheme = evolve_scheme == "rk4"
                     ? SchemeChoice::rk4
                     : (evolve_scheme == "feuler" ? SchemeChoice::feuler : SchemeChoice::trapezoidal);
    if (!std::isnan(evolve_dt)) cfg.dt = evolve_dt;
    if (!std::isnan(evolve_kappa)) cfg.kappa_t = evolve_kappa;
    cfg.T = evolve_T;
    cfg.projection =
        evolve_projection == "standard" ? ProjectionMode::standard : ProjectionMode::modified;
    cfg.solver_config = evolve_opts.solver_config;
    cfg.validate();

    const Problem prob = problem_by_name(cfg.problem);
    const double T = std::isnan(cfg.T) ? prob.T_paper : cfg.T;
    if (snapshot_prefix.empty() || snapshot_stride <= 0) {
      const SingleRun run = run_single(cfg, evolve_r, evolve_J);
      std::printf("%s %s r=%d J=%d T=%g: l2=%.3e linf=%.3e\n", cfg.problem.c_str(),
                  evolve_scheme.c_str(), evolve_r, evolve_J, T, run.l2, run.linf);
      if (!evolve_out.empty()) dump_solution_csv(evolve_out, run.u, prob, T);
      return 0;
    }

    // snapshot path: run evolve directly so intermediate states are kept
    const NumericalOperator op =
        prob.numerical(std::isnan(cfg.alpha) ? prob.alpha_paper : cfg.alpha);
    DGSpace space(Mesh::uniform(prob.a, prob.b, evolve_J), evolve_r);
    LDGSystem sys(space);
    const TimeGrid grid = cfg.kappa_t ? TimeGrid::from_cfl(T, *cfg.kappa_t, space.mesh().h_max())
                                      : TimeGrid::from_dt(T, cfg.dt.value());
    const Scheme scheme = cfg.scheme == SchemeChoice::rk4
                              ? Scheme::rk4
                              : (cfg.scheme == SchemeChoice::feuler ? Scheme::forward_euler
                                                                    : Scheme::trapezoidal);
    EvolveOptions opts;
    opts.projection = cfg.projection;
    opts.snapshot_stride = snapshot_stride;
    const EvolveResult res = evolve(scheme, sys, op, prob.bc, prob.u0, grid, cfg.solver_config, opts);
    const auto norms = error_norms(res.u, [&](double x) { return prob.exact(x, T); });
    std::printf("%s %s r=%d J=%d T=%g: l2=%.3e linf=%.3e\n", cfg.problem.c_str(),
                evolve_scheme.c_str(), evolve_r, evolve_J, T, norms.l2, norms.linf);
    for (const auto& [t, snap] : res.snapshots) {
      char name[64];
      std::snprintf(name, sizeof name, "_t%.6f.csv", t);
      std::ofstream out(snapshot_prefix + name);
      write_csv(snap, out);
    }
    if (!evolve_out.empty()) dump_solution_csv(evolve_out, res.u, prob, T);
    return 0;
  }

  if (study_cmd->parsed()) {
    study_opts.finish();
    RunConfig cfg;
    cfg.problem = study_opts.problem;
    cfg.degrees = study_r;
    cfg.mesh_sizes = study_J;
    cfg.alpha = study_opts.alpha;
    cfg.solver = study_solver == "splitting" ? SolverChoice::splitting : SolverChoice::newton;
    cfg.scheme = study_scheme == "stationary"
                     ? SchemeChoice::stationary
                     : (study_scheme == "rk4"
                            ? SchemeChoice::rk4
                            : (study_scheme == "feuler" ? SchemeChoice::feuler
                                                        : SchemeChoice::trapezoidal));
    if (!std::isnan(study_dt)) cfg.dt = study_dt;
    if (!std::isnan(study_kappa)) cfg.kappa_t = study_kappa;
    cfg.T = study_T;
    cfg.projection =
        study_projection == "standard" ? ProjectionMode::standard : ProjectionMode::modified;
    cfg.seed = study_seed;
    cfg.solver_config = study_opts.solver_config;

    const StudyReport report = run_convergence_study(cfg);
    std::cout << report.to_markdown();
    write_report_files(report, study_md, study_csv);
    return 0;
  }

  if (select_cmd->parsed()) {
    select_opts.finish();
    const SelectionResult result =
        run_selection_experiment(select_alpha, select_r, select_J, select_opts.solver_config);
    std::printf("alpha=%g r=%d J=%d -> %s\n  %s\n", select_alpha, select_r, select_J,
                to_string(result.outcome), result.diagnostics.c_str());
    if (!select_out.empty() && result.final) {
      const Problem prob = test1();
      dump_solution_csv(select_out, *result.final, prob, 0.0);
    }
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run(apply_config_file(args));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
