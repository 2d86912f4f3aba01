#include <doctest.h>

#include <cmath>

#include "ldg1d/fd_scheme.hpp"
#include "ldg1d/study.hpp"

using namespace ldg1d;

TEST_CASE("stencil residual vanishes on an exactly sampled quadratic") {
  const Problem prob = test1();
  const NumericalOperator op = prob.numerical(10.0);
  const int J = 10;
  const double h = 1.0 / J;
  // ghosts sampled from the exact solution rather than the boundary rules
  std::vector<double> ext(static_cast<std::size_t>(J) + 4);
  for (int m = -1; m <= J + 2; ++m) {
    const double x = (m - 0.5) * h;
    ext[static_cast<std::size_t>(m + 1)] = 0.5 * x * x;
  }
  const auto r = fd_residual_extended(ext, 0.0, h, op);
  for (const double v : r) CHECK(std::abs(v) <= 1e-10);
}

TEST_CASE("boundary closures inject the ghost rules") {
  const Problem prob = test3();  // x-dependent source exercises the cell rule
  const NumericalOperator op = prob.numerical(4.0);
  const int J = 9;
  FDGrid grid;
  grid.a = -1.0;
  grid.b = 1.0;
  grid.J = J;
  grid.u_a = -1.0;
  grid.u_b = 1.0;
  grid.values.resize(static_cast<std::size_t>(J));
  for (int j = 1; j <= J; ++j) grid.values[static_cast<std::size_t>(j - 1)] = std::sin(2.0 + j);

  // oracle: build the extended array with the ghost rules by hand
  std::vector<double> ext(static_cast<std::size_t>(J) + 4);
  ext[0] = 2.0 * grid.u_a - grid.values[0];
  ext[1] = grid.u_a;
  for (int j = 1; j <= J; ++j) ext[static_cast<std::size_t>(j) + 1] = grid.values[static_cast<std::size_t>(j - 1)];
  ext[static_cast<std::size_t>(J) + 2] = grid.u_b;
  ext[static_cast<std::size_t>(J) + 3] = 2.0 * grid.u_b - grid.values[static_cast<std::size_t>(J - 1)];

  const auto r = fd_residual(grid, op);
  const auto r2 = fd_residual_extended(ext, grid.a, grid.h(), op);
  REQUIRE(r.size() == r2.size());
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i] == r2[i]);

  // interior deltas with exact ghost mirror: delta^2 U_0 = 0 by construction
  const double h = grid.h();
  const double d2U0 = (ext[0] - 2.0 * ext[1] + ext[2]) / (h * h);
  CHECK(d2U0 == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("fd_solve reproduces the paper's r=0 accuracy on Test 1") {
  const Problem prob = test1();
  const NumericalOperator op = prob.numerical(10.0);
  const FDGrid grid = fd_solve(op, prob, 16, {});
  // embed into the piecewise-constant DG space and use its norms
  const DGSpace space(Mesh::uniform(0.0, 1.0, 16), 0);
  DGFunction uh(space);
  for (int j = 1; j <= 16; ++j) {
    uh.coeff(j, 0) = grid.values[static_cast<std::size_t>(j - 1)] / space.scale(j, 0);
  }
  const ErrorNorms en = error_norms(uh, [&](double x) { return prob.exact(x, 0.0); });
  CHECK(en.linf >= 5.3e-2 / 1.5);
  CHECK(en.linf <= 5.3e-2 * 1.5);
}

TEST_CASE("r=0 LDG solves match the independent FD oracle") {
  for (const auto& prob : {test1(), test3()}) {
    const NumericalOperator op = prob.numerical(prob.alpha_paper);
    SolverConfig cfg;
    cfg.newton_tol = 1e-12;
    const int J = 8;

    const FDGrid fd = fd_solve(op, prob, J, cfg);

    RunConfig rc;
    rc.problem = prob.name;
    rc.degrees = {0};
    rc.mesh_sizes = {J};
    rc.solver_config = cfg;
    const SingleRun ldg = run_single(rc, 0, J);
    for (int j = 1; j <= J; ++j) {
      const double v = ldg.u.eval_in_cell(j, ldg.space->mesh().center(j));
      CHECK(std::abs(v - fd.values[static_cast<std::size_t>(j - 1)]) <= 1e-9);
    }
  }
}
