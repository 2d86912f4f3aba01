#include "ldg1d/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ldg1d {

namespace {

double cell_value(const DGSpace& s, const DGFunction& f, int j, int g) {
  double v = 0.0;
  for (int k = 0; k <= s.degree(); ++k) v += f.coeff(j, k) * s.scale(j, k) * s.ref_value(k, g);
  return v;
}

struct SevenValues {
  double u, q1, q2, p1, p2, p3, p4;
};

SevenValues values_at(const DGSpace& s, const DGFunction& u, const DGFunction& q1,
                      const DGFunction& q2, const std::array<DGFunction, 4>& p, int j, int g) {
  return {cell_value(s, u, j, g),    cell_value(s, q1, j, g),   cell_value(s, q2, j, g),
          cell_value(s, p[0], j, g), cell_value(s, p[1], j, g), cell_value(s, p[2], j, g),
          cell_value(s, p[3], j, g)};
}

}  // namespace

std::vector<double> project_fhat_coeffs(const LDGSystem& sys, const NumericalOperator& op,
                                        const DGFunction& u, const DGFunction& q1,
                                        const DGFunction& q2, const std::array<DGFunction, 4>& p,
                                        double t) {
  const DGSpace& s = sys.space();
  std::vector<double> out(static_cast<std::size_t>(s.n_dof()), 0.0);
  for (int j = 1; j <= s.mesh().cells(); ++j) {
    for (int g = 0; g < s.n_quad(); ++g) {
      const SevenValues v = values_at(s, u, q1, q2, p, j, g);
      const double x = s.quad_point(j, g);
      double fh;
      try {
        fh = op.evaluate(v.p1, v.p2, v.p3, v.p4, v.q1, v.q2, v.u, x, t);
      } catch (const EvaluationError& e) {
        throw EvaluationError(std::string(e.what()) + " (cell " + std::to_string(j) +
                              ", quadrature point " + std::to_string(g) + ")");
      }
      const double w = s.quad_weight(j, g);
      for (int m = 0; m <= s.degree(); ++m) {
        out[static_cast<std::size_t>(s.dof(j, m))] += w * fh * s.scale(j, m) * s.ref_value(m, g);
      }
    }
  }
  return out;
}

EllipticState derive_state(const LDGSystem& sys, const DGFunction& u, double u_a, double u_b) {
  auto [q1, q2] = sys.q_operators(u, u_a, u_b);
  auto p = sys.p_operators(q1, q2);
  return {u, std::move(q1), std::move(q2), std::move(p[0]), std::move(p[1]), std::move(p[2]),
          std::move(p[3])};
}

std::vector<double> nonlinear_residual(const LDGSystem& sys, const NumericalOperator& op,
                                       const DGFunction& u, double u_a, double u_b, double t) {
  const EllipticState st = derive_state(sys, u, u_a, u_b);
  return project_fhat_coeffs(sys, op, st.u, st.q1, st.q2, {st.p1, st.p2, st.p3, st.p4}, t);
}

std::vector<double> full_system_residual(const LDGSystem& sys, const NumericalOperator& op,
                                         const EllipticState& st, double u_a, double u_b, double t) {
  const int n = sys.space().n_dof();
  std::vector<double> r;
  r.reserve(static_cast<std::size_t>(7 * n));
  const auto fhat = project_fhat_coeffs(sys, op, st.u, st.q1, st.q2, {st.p1, st.p2, st.p3, st.p4}, t);
  r.insert(r.end(), fhat.begin(), fhat.end());

  auto append_q = [&](const DGFunction& q, const DenseMatrix& A, const std::vector<double>& f) {
    std::vector<double> blk = matvec(A, st.u.coeffs());
    for (int i = 0; i < n; ++i) {
      blk[static_cast<std::size_t>(i)] += q.coeffs()[static_cast<std::size_t>(i)] - f[static_cast<std::size_t>(i)];
    }
    r.insert(r.end(), blk.begin(), blk.end());
  };
  append_q(st.q1, sys.A1(), sys.f1_vector(u_a, u_b));
  append_q(st.q2, sys.A2(), sys.f2_vector(u_a, u_b));

  const DGFunction* ps[4] = {&st.p1, &st.p2, &st.p3, &st.p4};
  for (int j = 1; j <= 4; ++j) {
    std::vector<double> blk = ps[j - 1]->coeffs();
    if (j != 4) axpy(1.0, matvec(sys.B(j, 1), st.q1.coeffs()), blk);
    if (j != 1) axpy(1.0, matvec(sys.B(j, 2), st.q2.coeffs()), blk);
    r.insert(r.end(), blk.begin(), blk.end());
  }
  return r;
}

DenseMatrix residual_jacobian(const LDGSystem& sys, const NumericalOperator& op, const DGFunction& u,
                              double u_a, double u_b, double t, bool analytic_partials) {
  const DGSpace& s = sys.space();
  const int n = s.n_dof();
  const int r = s.degree();
  const int nm = r + 1;
  const EllipticState st = derive_state(sys, u, u_a, u_b);
  const std::array<DGFunction, 4> p = {st.p1, st.p2, st.p3, st.p4};

  DenseMatrix J(n, n);
  // per-cell blocks W_y[m][k] = sum_g w_g dFhat/dy(g) phi_m phi_k
  std::vector<double> blk(7 * static_cast<std::size_t>(nm) * nm);
  std::vector<double> phi(static_cast<std::size_t>(nm));
  for (int j = 1; j <= s.mesh().cells(); ++j) {
    std::fill(blk.begin(), blk.end(), 0.0);
    for (int g = 0; g < s.n_quad(); ++g) {
      const SevenValues v = values_at(s, st.u, st.q1, st.q2, p, j, g);
      const auto d = op.partials(v.p1, v.p2, v.p3, v.p4, v.q1, v.q2, v.u, s.quad_point(j, g), t,
                                 analytic_partials);
      const double dy[7] = {d.du, d.dq1, d.dq2, d.dp1, d.dp2, d.dp3, d.dp4};
      const double w = s.quad_weight(j, g);
      for (int m = 0; m < nm; ++m) phi[static_cast<std::size_t>(m)] = s.scale(j, m) * s.ref_value(m, g);
      for (int y = 0; y < 7; ++y) {
        const double wy = w * dy[y];
        if (wy == 0.0) continue;
        double* b = blk.data() + static_cast<std::size_t>(y) * nm * nm;
        for (int m = 0; m < nm; ++m) {
          const double wm = wy * phi[static_cast<std::size_t>(m)];
          for (int k = 0; k < nm; ++k) b[m * nm + k] += wm * phi[static_cast<std::size_t>(k)];
        }
      }
    }
    // chain rule: du/du = I, dq_i/du = -A_i, dp_j/du = sys.dp_du(j)
    for (int m = 0; m < nm; ++m) {
      const int row = s.dof(j, m);
      for (int k = 0; k < nm; ++k) {
        const int col = s.dof(j, k);
        J(row, col) += blk[static_cast<std::size_t>(m) * nm + k];  // u block
        const double wq1 = blk[(1 * static_cast<std::size_t>(nm) + m) * nm + k];
        const double wq2 = blk[(2 * static_cast<std::size_t>(nm) + m) * nm + k];
        const double wp[4] = {blk[(3 * static_cast<std::size_t>(nm) + m) * nm + k],
                              blk[(4 * static_cast<std::size_t>(nm) + m) * nm + k],
                              blk[(5 * static_cast<std::size_t>(nm) + m) * nm + k],
                              blk[(6 * static_cast<std::size_t>(nm) + m) * nm + k]};
        for (int c = 0; c < n; ++c) {
          double acc = -wq1 * sys.A1()(col, c) - wq2 * sys.A2()(col, c);
          for (int pj = 0; pj < 4; ++pj) acc += wp[pj] * sys.dp_du(pj + 1)(col, c);
          J(row, c) += acc;
        }
      }
    }
  }
  return J;
}

namespace {

// Scalar root of g(s) = F(s, qm, u, x, t) + alpha (p1 - 2s + p4): safeguarded
// Newton from s0, falling back to bisection on a geometrically grown bracket.
double scalar_moment_root(const NumericalOperator& op, double qm, double u, double x, double t,
                          double p1, double p4, double s0) {
  auto g = [&](double sv) {
    return op.base.f(sv, qm, u, x, t) + op.alpha * (p1 - 2.0 * sv + p4);
  };
  auto dg = [&](double sv) {
    const double fp = op.base.has_partials() ? op.base.df_dp(sv, qm, u, x, t)
                                             : op.base.fd_dp(sv, qm, u, x, t);
    return fp - 2.0 * op.alpha;
  };
  const double g0 = std::abs(g(s0));
  const double tol = 1e-11 * (1.0 + g0);

  double sv = s0;
  for (int it = 0; it < 60; ++it) {
    const double gv = g(sv);
    if (std::abs(gv) <= tol) return sv;
    const double d = dg(sv);
    if (std::abs(d) < 1e-14 * (1.0 + std::abs(gv))) break;
    const double snew = sv - gv / d;
    if (!std::isfinite(snew) || std::abs(snew - s0) > 1e6 * (1.0 + std::abs(s0))) break;
    if (std::abs(snew - sv) <= 1e-15 * (1.0 + std::abs(sv)) && std::abs(g(snew)) <= tol) return snew;
    sv = snew;
  }
  if (std::abs(g(sv)) <= tol) return sv;

  // bracket growth from s0
  double lo = s0, hi = s0, glo = g(s0), ghi = glo;
  double d0 = 0.5 * (1.0 + std::abs(s0));
  bool bracketed = false;
  for (int k = 0; k < 60 && !bracketed; ++k) {
    lo = s0 - d0;
    hi = s0 + d0;
    glo = g(lo);
    ghi = g(hi);
    const double gs0 = g(s0);
    if (glo * gs0 <= 0.0) {
      hi = s0;
      ghi = gs0;
      bracketed = true;
    } else if (ghi * gs0 <= 0.0) {
      lo = s0;
      glo = gs0;
      bracketed = true;
    } else if (glo * ghi <= 0.0) {
      bracketed = true;
    }
    d0 *= 2.0;
  }
  if (!bracketed) return sv;  // caller checks the residual
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::abs(gm) <= tol || 0.5 * (hi - lo) <= 1e-15 * (1.0 + std::abs(mid))) return mid;
    if (glo * gm <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  return 0.5 * (lo + hi);
}

// Precomputed pieces of splitting step (4): with C_i = (B_2i + B_3i)/2 and
// the q-equations eliminated through the identity mass matrix,
// (C1 A1 + C2 A2) u = s + C1 f1 + C2 f2.
struct SplittingWork {
  DenseMatrix G;
  std::vector<double> fterm;
};

SplittingWork build_splitting_work(const LDGSystem& sys, double u_a, double u_b) {
  const int n = sys.space().n_dof();
  DenseMatrix C1(n, n), C2(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      C1(i, j) = 0.5 * (sys.B(2, 1)(i, j) + sys.B(3, 1)(i, j));
      C2(i, j) = 0.5 * (sys.B(2, 2)(i, j) + sys.B(3, 2)(i, j));
    }
  }
  SplittingWork work;
  work.G = matmul(C1, sys.A1());
  const DenseMatrix t2 = matmul(C2, sys.A2());
  for (std::size_t i = 0; i < work.G.data().size(); ++i) work.G.data()[i] += t2.data()[i];
  work.fterm = matvec(C1, sys.f1_vector(u_a, u_b));
  axpy(1.0, matvec(C2, sys.f2_vector(u_a, u_b)), work.fterm);
  return work;
}

// Steps (3)-(5) of the splitting iteration.
EllipticState splitting_iteration(const LDGSystem& sys, const NumericalOperator& op,
                                  const SplittingWork& work, const EllipticState& st, double u_a,
                                  double u_b) {
  const DGSpace& s = sys.space();
  DGFunction s_fn(s);
  for (int j = 1; j <= s.mesh().cells(); ++j) {
    for (int g = 0; g < s.n_quad(); ++g) {
      const double x = s.quad_point(j, g);
      const double qm = 0.5 * (cell_value(s, st.q1, j, g) + cell_value(s, st.q2, j, g));
      const double uv = cell_value(s, st.u, j, g);
      const double p1v = cell_value(s, st.p1, j, g);
      const double p4v = cell_value(s, st.p4, j, g);
      const double s0 = 0.5 * (cell_value(s, st.p2, j, g) + cell_value(s, st.p3, j, g));
      const double root = scalar_moment_root(op, qm, uv, x, 0.0, p1v, p4v, s0);
      const double check = op.base.f(root, qm, uv, x, 0.0) + op.alpha * (p1v - 2.0 * root + p4v);
      if (!std::isfinite(root) ||
          std::abs(check) > 1e-7 * (1.0 + std::abs(op.alpha) + std::abs(p1v) + std::abs(p4v))) {
        throw RootSolveFailure("splitting step (3): no root found at cell " + std::to_string(j) +
                               ", quadrature point " + std::to_string(g) + " (x=" +
                               std::to_string(x) + ")");
      }
      const double w = s.quad_weight(j, g);
      for (int k = 0; k <= s.degree(); ++k) {
        s_fn.coeff(j, k) += w * root * s.scale(j, k) * s.ref_value(k, g);
      }
    }
  }
  std::vector<double> rhs = s_fn.coeffs();
  axpy(1.0, work.fterm, rhs);
  DGFunction u_new(s);
  u_new.coeffs() = lu_solve(work.G, rhs);
  return derive_state(sys, u_new, u_a, u_b);
}

EllipticState newton_loop(const LDGSystem& sys, const NumericalOperator& op, double u_a, double u_b,
                          double t, double mass_shift, double scale, const std::vector<double>* rhs,
                          const SolverConfig& config, const DGFunction& initial_guess,
                          IterationLog* log) {
  const int n = sys.space().n_dof();
  DGFunction u = initial_guess;

  auto total_residual = [&](const DGFunction& v) {
    std::vector<double> R = nonlinear_residual(sys, op, v, u_a, u_b, t);
    for (int i = 0; i < n; ++i) {
      double ri = scale * R[static_cast<std::size_t>(i)] + mass_shift * v.coeffs()[static_cast<std::size_t>(i)];
      if (rhs) ri -= (*rhs)[static_cast<std::size_t>(i)];
      R[static_cast<std::size_t>(i)] = ri;
    }
    return R;
  };

  std::vector<double> R = total_residual(u);
  double norm = norm_inf(R);
  if (log) log->push_back({0, norm, 0.0});

  const auto merit = [](const std::vector<double>& v) {
    double s = 0.0;
    for (const double a : v) s += a * a;
    return 0.5 * s;
  };

  // Plain descent cannot reliably pick the monotone branch from a cold
  // start: for Monge-Ampere operators the linear-interpolant guess is
  // gradient-degenerate (the moment integrates to zero, so J^T R vanishes
  // up to roundoff) and artifact roots sit as close as the viscosity
  // solution. Default stationary solves are therefore preconditioned with
  // splitting sweeps, whose pointwise scalar solve is globally monotone
  // whenever Fhat is g-monotone; warm-started time steps skip this.
  const bool allow_rescue = (mass_shift == 0.0 && scale == 1.0 && rhs == nullptr);
  int rescues_left = 5;
  const auto rescue = [&](int it) {
    if (!allow_rescue || rescues_left <= 0) return false;
    --rescues_left;
    const DGFunction saved = u;
    try {
      const SplittingWork work = build_splitting_work(sys, u_a, u_b);
      EllipticState st = derive_state(sys, u, u_a, u_b);
      std::vector<double> s_prev(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        s_prev[static_cast<std::size_t>(i)] = 0.5 * (st.p2.coeffs()[static_cast<std::size_t>(i)] +
                                                     st.p3.coeffs()[static_cast<std::size_t>(i)]);
      }
      for (int sweep = 0; sweep < 120; ++sweep) {
        st = splitting_iteration(sys, op, work, st, u_a, u_b);
        double ds = 0.0, smax = 0.0;
        for (int i = 0; i < n; ++i) {
          const double snow = 0.5 * (st.p2.coeffs()[static_cast<std::size_t>(i)] +
                                     st.p3.coeffs()[static_cast<std::size_t>(i)]);
          ds = std::max(ds, std::abs(snow - s_prev[static_cast<std::size_t>(i)]));
          smax = std::max(smax, std::abs(snow));
          s_prev[static_cast<std::size_t>(i)] = snow;
        }
        if (sweep >= 10 && ds <= 1e-4 * (1.0 + smax)) break;
      }
      u = st.u;
      R = total_residual(u);
      norm = norm_inf(R);
      if (log) log->push_back({it, norm, 0.0});
      return true;
    } catch (const std::exception&) {
      // splitting has no root here (or its linear step failed); restore and
      // let the Newton machinery report the real story
      u = saved;
      R = total_residual(u);
      norm = norm_inf(R);
      return false;
    }
  };

  if (allow_rescue && norm > config.newton_tol) rescue(0);

  const bool analytic = config.jacobian == SolverConfig::Jacobian::analytic;
  bool hit_singular = false;
  double lambda = 0.0;  // Levenberg-Marquardt shift carried across iterations
  for (int it = 1; it <= config.max_newton_iters; ++it) {
    if (norm <= config.newton_tol) return derive_state(sys, u, u_a, u_b);

    DenseMatrix J = residual_jacobian(sys, op, u, u_a, u_b, t, analytic);
    if (scale != 1.0) {
      for (double& v : J.data()) v *= scale;
    }
    if (mass_shift != 0.0) {
      for (int i = 0; i < n; ++i) J(i, i) += mass_shift;
    }
    double jscale = 0.0;
    for (const double v : J.data()) jscale = std::max(jscale, std::abs(v));
    const double f0 = merit(R);

    // gradient of the least-squares merit
    std::vector<double> g(static_cast<std::size_t>(n), 0.0);  // -J^T R
    for (int k = 0; k < n; ++k) {
      const double rk = R[static_cast<std::size_t>(k)];
      if (rk == 0.0) continue;
      for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] -= J(k, i) * rk;
    }
    // degeneracy means the gradient is tiny relative to this residual size,
    // not merely that the iteration is close to a root
    if (norm_inf(g) <= 1e-10 * jscale * norm) {
      if (rescue(it)) continue;
      std::string msg = "Newton stalled at a stationary point of the residual (norm " +
                        std::to_string(norm) + ")";
      if (hit_singular) msg += "; a larger numerical-moment coefficient alpha may help";
      throw NewtonFailure(msg, it, norm,
                          std::make_shared<EllipticState>(derive_state(sys, u, u_a, u_b)));
    }

    const auto try_step = [&](const std::vector<double>& delta, DGFunction& out_u,
                              std::vector<double>& out_R, double& out_f, double& out_step) {
      double step = 1.0;
      for (int cut = 0; cut <= 10; ++cut) {
        DGFunction trial = u;
        for (int i = 0; i < n; ++i) {
          trial.coeffs()[static_cast<std::size_t>(i)] += step * delta[static_cast<std::size_t>(i)];
        }
        try {
          std::vector<double> Rt = total_residual(trial);
          const double ft = merit(Rt);
          if (std::isfinite(ft) && ft < f0) {
            out_u = std::move(trial);
            out_R = std::move(Rt);
            out_f = ft;
            out_step = step;
            return true;
          }
        } catch (const EvaluationError&) {
          // trial left the operator's domain; shorten the step
        }
        step *= 0.5;
      }
      return false;
    };

    std::vector<double> neg = R;
    for (double& v : neg) v = -v;
    DGFunction next_u = u;
    std::vector<double> next_R;
    double next_f = f0, used_step = 0.0;
    bool accepted = false;

    // pure Newton step first
    if (lambda == 0.0) {
      try {
        const std::vector<double> delta = lu_solve(J, neg);
        accepted = try_step(delta, next_u, next_R, next_f, used_step);
      } catch (const SingularMatrixError&) {
        hit_singular = true;
      }
    }

    // Levenberg-Marquardt fallback on the least-squares merit
    if (!accepted) {
      DenseMatrix JtJ(n, n);
      for (int i = 0; i < n; ++i) {
        for (int jx = 0; jx <= i; ++jx) {
          double s = 0.0;
          for (int k = 0; k < n; ++k) s += J(k, i) * J(k, jx);
          JtJ(i, jx) = s;
          JtJ(jx, i) = s;
        }
      }
      double diag_scale = 0.0;
      for (int i = 0; i < n; ++i) diag_scale = std::max(diag_scale, JtJ(i, i));
      if (lambda == 0.0) lambda = 1e-6 * (1.0 + diag_scale);
      for (int escalation = 0; escalation < 20 && !accepted; ++escalation) {
        DenseMatrix A = JtJ;
        for (int i = 0; i < n; ++i) A(i, i) += lambda;
        std::vector<double> delta;
        try {
          delta = lu_solve(A, g);
        } catch (const SingularMatrixError&) {
          lambda *= 10.0;
          continue;
        }
        accepted = try_step(delta, next_u, next_R, next_f, used_step);
        if (!accepted) lambda *= 10.0;
      }
    }

    if (!accepted) {
      if (rescue(it)) {
        lambda = 0.0;
        continue;
      }
      std::string msg = "Newton could not decrease the residual (norm " + std::to_string(norm) + ")";
      if (hit_singular) {
        msg += "; the Jacobian was singular -- a larger numerical-moment coefficient alpha may help";
      }
      throw NewtonFailure(msg, it, norm,
                          std::make_shared<EllipticState>(derive_state(sys, u, u_a, u_b)));
    }
    u = std::move(next_u);
    R = std::move(next_R);
    norm = norm_inf(R);
    lambda *= 0.25;
    if (lambda < 1e-12) lambda = 0.0;
    if (log) log->push_back({it, norm, used_step});
  }
  if (norm <= config.newton_tol) return derive_state(sys, u, u_a, u_b);
  std::string msg = "Newton did not reach tolerance " + std::to_string(config.newton_tol) +
                    " in " + std::to_string(config.max_newton_iters) + " iterations (residual " +
                    std::to_string(norm) + ")";
  if (hit_singular) {
    msg += "; singular Jacobians were regularized along the way -- a larger numerical-moment "
           "coefficient alpha may help";
  }
  throw NewtonFailure(msg, config.max_newton_iters, norm,
                      std::make_shared<EllipticState>(derive_state(sys, u, u_a, u_b)));
}

}  // namespace

EllipticState solve_newton(const LDGSystem& sys, const NumericalOperator& op, double u_a, double u_b,
                           const SolverConfig& config, const DGFunction& initial_guess,
                           IterationLog* log, double t) {
  return newton_loop(sys, op, u_a, u_b, t, 0.0, 1.0, nullptr, config, initial_guess, log);
}

EllipticState solve_newton_weighted(const LDGSystem& sys, const NumericalOperator& op, double u_a,
                                    double u_b, double t, double mass_shift, double scale,
                                    const std::vector<double>* rhs, const SolverConfig& config,
                                    const DGFunction& initial_guess, IterationLog* log) {
  return newton_loop(sys, op, u_a, u_b, t, mass_shift, scale, rhs, config, initial_guess, log);
}

EllipticState solve_splitting(const LDGSystem& sys, const NumericalOperator& op, double u_a,
                              double u_b, const SolverConfig& config, const DGFunction& initial_guess,
                              IterationLog* log) {
  const int n = sys.space().n_dof();
  const SplittingWork work = build_splitting_work(sys, u_a, u_b);

  EllipticState st = derive_state(sys, initial_guess, u_a, u_b);
  std::vector<double> s_prev(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    s_prev[static_cast<std::size_t>(i)] =
        0.5 * (st.p2.coeffs()[static_cast<std::size_t>(i)] + st.p3.coeffs()[static_cast<std::size_t>(i)]);
  }

  for (int iter = 1; iter <= config.max_splitting_iters; ++iter) {
    st = splitting_iteration(sys, op, work, st, u_a, u_b);
    double delta = 0.0;
    for (int i = 0; i < n; ++i) {
      const double snow =
          0.5 * (st.p2.coeffs()[static_cast<std::size_t>(i)] + st.p3.coeffs()[static_cast<std::size_t>(i)]);
      delta = std::max(delta, std::abs(snow - s_prev[static_cast<std::size_t>(i)]));
      s_prev[static_cast<std::size_t>(i)] = snow;
    }
    if (log) log->push_back({iter, delta, 1.0});
    if (delta <= config.splitting_tol) break;
  }
  return st;
}

}  // namespace ldg1d
