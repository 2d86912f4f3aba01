#include "ldg1d/study.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ldg1d {

void RunConfig::validate() const {
  if (degrees.empty()) throw std::invalid_argument("RunConfig: no degrees given");
  if (mesh_sizes.empty()) throw std::invalid_argument("RunConfig: no mesh sizes given");
  for (std::size_t i = 1; i < mesh_sizes.size(); ++i) {
    if (mesh_sizes[i] <= mesh_sizes[i - 1]) {
      throw std::invalid_argument("RunConfig: mesh size list must be strictly increasing");
    }
  }
  const bool explicit_scheme = scheme == SchemeChoice::rk4 || scheme == SchemeChoice::feuler;
  if (explicit_scheme && dt.has_value() == kappa_t.has_value()) {
    throw std::invalid_argument("RunConfig: explicit schemes need exactly one of dt / kappa_t");
  }
  if (scheme == SchemeChoice::trapezoidal && !dt.has_value()) {
    throw std::invalid_argument("RunConfig: trapezoidal scheme needs dt");
  }
}

namespace {

double resolve_alpha(const RunConfig& c, const Problem& prob) {
  return std::isnan(c.alpha) ? prob.alpha_paper : c.alpha;
}

DGFunction linear_interpolant_guess(const DGSpace& space, double ua, double ub) {
  const double a = space.mesh().a(), b = space.mesh().b();
  return l2_project(space, [=](double x) { return ua + (ub - ua) * (x - a) / (b - a); });
}

}  // namespace

SingleRun run_single(const RunConfig& config, int degree, int J) {
  const Problem prob = problem_by_name(config.problem);
  const double alpha = resolve_alpha(config, prob);
  const NumericalOperator op = prob.numerical(alpha);

  auto space_ptr = std::make_shared<DGSpace>(Mesh::uniform(prob.a, prob.b, J), degree);
  const DGSpace& space = *space_ptr;
  LDGSystem sys(space);
  IterationLog log;

  if (config.scheme == SchemeChoice::stationary) {
    if (prob.kind != Problem::Kind::elliptic) {
      throw std::invalid_argument("problem " + prob.name + " is parabolic; pick a time scheme");
    }
    const double ua = prob.bc.left(0.0), ub = prob.bc.right(0.0);
    const DGFunction guess = linear_interpolant_guess(space, ua, ub);
    EllipticState st = config.solver == SolverChoice::newton
                           ? solve_newton(sys, op, ua, ub, config.solver_config, guess, &log)
                           : solve_splitting(sys, op, ua, ub, config.solver_config, guess, &log);
    const auto norms = error_norms(st.u, [&](double x) { return prob.exact(x, 0.0); });
    return SingleRun{std::move(space_ptr), std::move(st.u), norms.l2, norms.linf, std::move(log)};
  }

  if (prob.kind != Problem::Kind::parabolic) {
    throw std::invalid_argument("problem " + prob.name + " is elliptic; use the stationary scheme");
  }
  const double T = std::isnan(config.T) ? prob.T_paper : config.T;
  const TimeGrid grid = config.kappa_t ? TimeGrid::from_cfl(T, *config.kappa_t, space.mesh().h_max())
                                       : TimeGrid::from_dt(T, config.dt.value());
  const Scheme scheme = config.scheme == SchemeChoice::rk4
                            ? Scheme::rk4
                            : (config.scheme == SchemeChoice::feuler ? Scheme::forward_euler
                                                                     : Scheme::trapezoidal);
  EvolveOptions opts;
  opts.projection = config.projection;
  EvolveResult res = evolve(scheme, sys, op, prob.bc, prob.u0, grid, config.solver_config, opts);
  const auto norms = error_norms(res.u, [&](double x) { return prob.exact(x, T); });
  return SingleRun{std::move(space_ptr), std::move(res.u), norms.l2, norms.linf, std::move(log)};
}

StudyReport run_convergence_study(const RunConfig& config) {
  config.validate();
  const Problem prob = problem_by_name(config.problem);
  StudyReport report;
  report.problem = config.problem;
  report.alpha = resolve_alpha(config, prob);
  report.scheme = config.scheme;

  for (const int r : config.degrees) {
    StudyBlock block;
    block.degree = r;
    for (const int J : config.mesh_sizes) {
      StudyCell cell;
      cell.J = J;
      cell.h = (prob.b - prob.a) / J;
      try {
        const SingleRun run = run_single(config, r, J);
        cell.ok = true;
        cell.l2 = run.l2;
        cell.linf = run.linf;
        if (!block.cells.empty() && block.cells.back().ok) {
          const StudyCell& prev = block.cells.back();
          const double ratio = prev.h / cell.h;
          cell.l2_order = std::log(prev.l2 / cell.l2) / std::log(ratio);
          cell.linf_order = std::log(prev.linf / cell.linf) / std::log(ratio);
        }
      } catch (const std::exception& e) {
        cell.ok = false;
        cell.error_message = e.what();
      }
      block.cells.push_back(std::move(cell));
    }
    report.blocks.push_back(std::move(block));
  }
  return report;
}

namespace {

std::string fmt_err(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

std::string fmt_order(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_h(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

const char* scheme_name(SchemeChoice s) {
  switch (s) {
    case SchemeChoice::stationary: return "stationary";
    case SchemeChoice::rk4: return "rk4";
    case SchemeChoice::feuler: return "feuler";
    case SchemeChoice::trapezoidal: return "trapezoidal";
  }
  return "?";
}

}  // namespace

std::string StudyReport::to_markdown() const {
  std::ostringstream out;
  out << "# " << problem << " (" << scheme_name(scheme) << ", alpha=" << alpha << ")\n\n";
  if (blocks.empty()) return out.str();

  out << "| r | Norm |";
  const StudyBlock& first = blocks.front();
  for (std::size_t i = 0; i < first.cells.size(); ++i) {
    out << " h=" << fmt_h(first.cells[i].h) << " |";
    if (i > 0) out << " Order |";
  }
  out << "\n|---|------|";
  for (std::size_t i = 0; i < first.cells.size(); ++i) {
    out << "---|";
    if (i > 0) out << "---|";
  }
  out << "\n";

  std::vector<std::string> failures;
  for (const StudyBlock& block : blocks) {
    for (int norm = 0; norm < 2; ++norm) {
      out << "| " << block.degree << " | " << (norm == 0 ? "L2" : "Linf") << " |";
      for (std::size_t i = 0; i < block.cells.size(); ++i) {
        const StudyCell& c = block.cells[i];
        if (!c.ok) {
          out << " fail |";
          if (i > 0) out << " |";
          if (norm == 0 && i < block.cells.size()) {
            failures.push_back("r=" + std::to_string(block.degree) + ", J=" + std::to_string(c.J) +
                               ": " + c.error_message);
          }
          continue;
        }
        out << " " << fmt_err(norm == 0 ? c.l2 : c.linf) << " |";
        if (i > 0) out << " " << fmt_order(norm == 0 ? c.l2_order : c.linf_order) << " |";
      }
      out << "\n";
    }
  }
  for (const std::string& f : failures) out << "\n- failed: " << f;
  if (!failures.empty()) out << "\n";
  return out.str();
}

std::string StudyReport::to_csv(const StudyBlock& block) const {
  std::ostringstream out;
  out << "J,h,l2,l2_order,linf,linf_order\n";
  for (const StudyCell& c : block.cells) {
    char buf[256];
    if (c.ok) {
      std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", c.J, c.h, c.l2,
                    c.l2_order, c.linf, c.linf_order);
    } else {
      std::snprintf(buf, sizeof buf, "%d,%.17g,nan,nan,nan,nan\n", c.J, c.h);
    }
    out << buf;
  }
  return out.str();
}

void write_report_files(const StudyReport& report, const std::string& md_path,
                        const std::string& csv_stem) {
  if (!md_path.empty()) {
    std::ofstream md(md_path);
    if (!md) throw std::runtime_error("cannot open " + md_path);
    md << report.to_markdown();
  }
  if (!csv_stem.empty()) {
    const bool single = report.blocks.size() == 1;
    for (const StudyBlock& block : report.blocks) {
      std::string path = csv_stem;
      const bool has_ext = path.size() > 4 && path.substr(path.size() - 4) == ".csv";
      if (!single) {
        if (has_ext) path.insert(path.size() - 4, "_r" + std::to_string(block.degree));
        else path += "_r" + std::to_string(block.degree) + ".csv";
      } else if (!has_ext) {
        path += ".csv";
      }
      std::ofstream csv(path);
      if (!csv) throw std::runtime_error("cannot open " + path);
      csv << report.to_csv(block);
    }
  }
}

const char* to_string(SelectionResult::Outcome o) {
  switch (o) {
    case SelectionResult::Outcome::u_plus: return "u_plus";
    case SelectionResult::Outcome::u_minus: return "u_minus";
    case SelectionResult::Outcome::mu: return "mu";
    case SelectionResult::Outcome::other: return "other";
  }
  return "?";
}

SelectionResult run_selection_experiment(double alpha, int degree, int J,
                                         const SolverConfig& config) {
  const Problem prob = test1();
  const NumericalOperator op = prob.numerical(alpha);
  const SelectionFixtures fx = selection_fixtures();

  SelectionResult result;
  result.space = std::make_shared<DGSpace>(Mesh::uniform(prob.a, prob.b, J), degree);
  const DGSpace& space = *result.space;
  LDGSystem sys(space);
  const double ua = prob.bc.left(0.0), ub = prob.bc.right(0.0);

  DGFunction guess =
      l2_project(space, [&](double x) { return 0.75 * fx.mu(x) + 0.25 * fx.u_bar(x); });

  std::ostringstream diag;
  SolverConfig cfg = config;
  cfg.max_splitting_iters = 100;
  DGFunction u = guess;
  bool solver_failed = false;
  try {
    const EllipticState split_state = solve_splitting(sys, op, ua, ub, cfg, guess);
    u = split_state.u;
  } catch (const std::exception& e) {
    diag << "splitting failed: " << e.what() << "; ";
    solver_failed = true;
  }
  try {
    const EllipticState newton_state = solve_newton(sys, op, ua, ub, cfg, u);
    u = newton_state.u;
  } catch (const NewtonFailure& e) {
    diag << "newton failed: " << e.what() << "; ";
    if (e.last_state) u = e.last_state->u;
    solver_failed = true;
  }
  result.final = u;
  result.d_plus = error_norms(u, fx.u_plus).l2;
  result.d_minus = error_norms(u, fx.u_minus).l2;
  result.d_mu = error_norms(u, fx.mu).l2;

  const double h = space.mesh().h_max();
  const double near = 10.0 * std::pow(h, degree + 1);
  struct Cand {
    double d;
    SelectionResult::Outcome o;
  };
  const Cand cands[3] = {{result.d_plus, SelectionResult::Outcome::u_plus},
                         {result.d_minus, SelectionResult::Outcome::u_minus},
                         {result.d_mu, SelectionResult::Outcome::mu}};
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (cands[i].d < cands[best].d) best = i;
  }
  bool separated = cands[best].d <= near;
  for (int i = 0; i < 3; ++i) {
    if (i != best && cands[i].d < 10.0 * cands[best].d) separated = false;
  }
  result.outcome = (!solver_failed && separated) ? cands[best].o : SelectionResult::Outcome::other;
  diag << "d(u+)=" << result.d_plus << ", d(u-)=" << result.d_minus << ", d(mu)=" << result.d_mu
       << ", threshold=" << near;
  result.diagnostics = diag.str();
  return result;
}

}  // namespace ldg1d
