#include "ldg1d/fd_scheme.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ldg1d/dense_matrix.hpp"

namespace ldg1d {

std::vector<double> fd_residual_extended(const std::vector<double>& u_ext, double a, double h,
                                         const NumericalOperator& op) {
  const int J = static_cast<int>(u_ext.size()) - 4;
  if (J < 1) throw std::invalid_argument("fd_residual_extended: need J+4 values");
  // u_ext[m+1] = U_m for m = -1..J+2
  const auto U = [&](int m) { return u_ext[static_cast<std::size_t>(m + 1)]; };
  const auto d2 = [&](int m) { return (U(m - 1) - 2.0 * U(m) + U(m + 1)) / (h * h); };

  const double gauss = 0.5 / std::sqrt(3.0);  // 2-point rule offsets on a cell
  std::vector<double> r(static_cast<std::size_t>(J));
  for (int j = 1; j <= J; ++j) {
    const double p1 = d2(j - 1);
    const double p23 = d2(j);
    const double p4 = d2(j + 1);
    const double q1 = (U(j) - U(j - 1)) / h;
    const double q2 = (U(j + 1) - U(j)) / h;
    const double xm = a + (j - 0.5) * h;
    const double xg1 = xm - gauss * h;
    const double xg2 = xm + gauss * h;
    r[static_cast<std::size_t>(j - 1)] =
        0.5 * (op.evaluate(p1, p23, p23, p4, q1, q2, U(j), xg1, 0.0) +
               op.evaluate(p1, p23, p23, p4, q1, q2, U(j), xg2, 0.0));
  }
  return r;
}

std::vector<double> fd_residual(const FDGrid& grid, const NumericalOperator& op) {
  std::vector<double> ext(static_cast<std::size_t>(grid.J) + 4);
  ext[0] = 2.0 * grid.u_a - grid.values[0];                                   // U_{-1}
  ext[1] = grid.u_a;                                                          // U_0
  for (int j = 1; j <= grid.J; ++j) ext[static_cast<std::size_t>(j) + 1] = grid.values[static_cast<std::size_t>(j - 1)];
  ext[static_cast<std::size_t>(grid.J) + 2] = grid.u_b;                       // U_{J+1}
  ext[static_cast<std::size_t>(grid.J) + 3] = 2.0 * grid.u_b - grid.values[static_cast<std::size_t>(grid.J - 1)];
  return fd_residual_extended(ext, grid.a, grid.h(), op);
}

namespace {

// Scalar root of g(s) = Fbar(s) + alpha (p1 - 2s + p4) for the monotone
// sweeps below; local implementation, independent of the DG solver path.
double fd_scalar_root(const std::function<double(double)>& g, double s0) {
  const double tol = 1e-11 * (1.0 + std::abs(g(s0)));
  double s = s0;
  for (int it = 0; it < 60; ++it) {
    const double gv = g(s);
    if (std::abs(gv) <= tol) return s;
    const double d = 1e-7 * (1.0 + std::abs(s));
    const double slope = (g(s + d) - g(s - d)) / (2.0 * d);
    if (std::abs(slope) < 1e-14) break;
    const double snew = s - gv / slope;
    if (!std::isfinite(snew)) break;
    s = snew;
  }
  if (std::abs(g(s)) <= tol) return s;
  double width = 1.0 + std::abs(s0);
  for (int k = 0; k < 60; ++k) {
    double lo = s0 - width, hi = s0 + width;
    if (g(lo) * g(hi) <= 0.0) {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(lo) * g(mid) <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    width *= 2.0;
  }
  return s;
}

// Monotone preconditioning sweeps, the stencil analogue of the splitting
// solver: solve the scalar equation for s_j = delta^2 U_j pointwise, then
// rebuild U from the tridiagonal delta^2 U = s with the Dirichlet data.
void fd_monotone_sweeps(FDGrid& grid, const NumericalOperator& op) {
  const int J = grid.J;
  const double h = grid.h();
  const double gauss = 0.5 / std::sqrt(3.0);
  DenseMatrix T(J, J);
  for (int j = 0; j < J; ++j) {
    T(j, j) = -2.0 / (h * h);
    if (j > 0) T(j, j - 1) = 1.0 / (h * h);
    if (j + 1 < J) T(j, j + 1) = 1.0 / (h * h);
  }
  std::vector<double> s_prev(static_cast<std::size_t>(J), 0.0);
  for (int sweep = 0; sweep < 120; ++sweep) {
    std::vector<double> ext(static_cast<std::size_t>(J) + 4);
    ext[0] = 2.0 * grid.u_a - grid.values[0];
    ext[1] = grid.u_a;
    for (int j = 1; j <= J; ++j) ext[static_cast<std::size_t>(j) + 1] = grid.values[static_cast<std::size_t>(j - 1)];
    ext[static_cast<std::size_t>(J) + 2] = grid.u_b;
    ext[static_cast<std::size_t>(J) + 3] = 2.0 * grid.u_b - grid.values[static_cast<std::size_t>(J - 1)];
    const auto U = [&](int m) { return ext[static_cast<std::size_t>(m + 1)]; };
    const auto d2 = [&](int m) { return (U(m - 1) - 2.0 * U(m) + U(m + 1)) / (h * h); };

    std::vector<double> s(static_cast<std::size_t>(J));
    double ds = 0.0, smax = 0.0;
    for (int j = 1; j <= J; ++j) {
      const double p1 = d2(j - 1), p4 = d2(j + 1);
      const double q1 = (U(j) - U(j - 1)) / h, q2 = (U(j + 1) - U(j)) / h;
      const double uj = U(j);
      const double xm = grid.a + (j - 0.5) * h;
      const auto g = [&](double sv) {
        const double f1 = op.base.f(sv, 0.5 * (q1 + q2), uj, xm - gauss * h, 0.0);
        const double f2 = op.base.f(sv, 0.5 * (q1 + q2), uj, xm + gauss * h, 0.0);
        return 0.5 * (f1 + f2) + op.alpha * (p1 - 2.0 * sv + p4);
      };
      const double root = fd_scalar_root(g, d2(j));
      if (!std::isfinite(root) || std::abs(g(root)) > 1e-6 * (1.0 + std::abs(op.alpha))) return;
      s[static_cast<std::size_t>(j - 1)] = root;
      ds = std::max(ds, std::abs(root - s_prev[static_cast<std::size_t>(j - 1)]));
      smax = std::max(smax, std::abs(root));
      s_prev[static_cast<std::size_t>(j - 1)] = root;
    }
    std::vector<double> rhs = s;
    rhs[0] -= grid.u_a / (h * h);
    rhs[static_cast<std::size_t>(J - 1)] -= grid.u_b / (h * h);
    grid.values = lu_solve(T, rhs);
    if (sweep >= 10 && ds <= 1e-4 * (1.0 + smax)) break;
  }
}

}  // namespace

FDGrid fd_solve(const NumericalOperator& op, const Problem& prob, int J, const SolverConfig& config) {
  FDGrid grid;
  grid.a = prob.a;
  grid.b = prob.b;
  grid.J = J;
  grid.u_a = prob.bc.left(0.0);
  grid.u_b = prob.bc.right(0.0);
  grid.values.resize(static_cast<std::size_t>(J));
  for (int j = 1; j <= J; ++j) {
    const double x = grid.midpoint(j);
    grid.values[static_cast<std::size_t>(j - 1)] =
        grid.u_a + (grid.u_b - grid.u_a) * (x - prob.a) / (prob.b - prob.a);
  }
  fd_monotone_sweeps(grid, op);

  std::vector<double> R = fd_residual(grid, op);
  double norm = norm_inf(R);
  for (int it = 1; it <= config.max_newton_iters; ++it) {
    if (norm <= config.newton_tol) return grid;

    DenseMatrix Jm(J, J);
    for (int c = 0; c < J; ++c) {
      const double save = grid.values[static_cast<std::size_t>(c)];
      const double d = 1e-7 * (1.0 + std::abs(save));
      grid.values[static_cast<std::size_t>(c)] = save + d;
      const std::vector<double> rp = fd_residual(grid, op);
      grid.values[static_cast<std::size_t>(c)] = save - d;
      const std::vector<double> rm = fd_residual(grid, op);
      grid.values[static_cast<std::size_t>(c)] = save;
      for (int i = 0; i < J; ++i) {
        Jm(i, c) = (rp[static_cast<std::size_t>(i)] - rm[static_cast<std::size_t>(i)]) / (2.0 * d);
      }
    }
    std::vector<double> neg = R;
    for (double& v : neg) v = -v;
    double jscale = 0.0;
    for (const double v : Jm.data()) jscale = std::max(jscale, std::abs(v));
    double shift = 0.0;
    std::vector<double> delta;
    for (;;) {
      try {
        delta = lu_solve(Jm, neg);
        break;
      } catch (const SingularMatrixError&) {
        const double next = (shift == 0.0) ? 1e-10 * (1.0 + jscale) : shift * 1e3;
        if (next > 1e3 * (1.0 + jscale)) throw;
        for (int i = 0; i < J; ++i) Jm(i, i) += next - shift;
        shift = next;
      }
    }

    double step = 1.0;
    std::vector<double> best_values = grid.values;
    std::vector<double> best_R;
    double best_norm = std::numeric_limits<double>::infinity();
    const std::vector<double> base = grid.values;
    for (int cut = 0; cut <= 10; ++cut) {
      for (int i = 0; i < J; ++i) {
        grid.values[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>(i)] + step * delta[static_cast<std::size_t>(i)];
      }
      std::vector<double> Rt = fd_residual(grid, op);
      const double nt = norm_inf(Rt);
      if (nt < best_norm) {
        best_norm = nt;
        best_values = grid.values;
        best_R = std::move(Rt);
      }
      if (nt < norm) break;
      step *= 0.5;
    }
    grid.values = std::move(best_values);
    R = std::move(best_R);
    norm = best_norm;
  }
  if (norm <= config.newton_tol) return grid;
  throw NewtonFailure("fd_solve: Newton stalled at residual " + std::to_string(norm),
                      config.max_newton_iters, norm);
}

}  // namespace ldg1d
