#ifndef LDG1D_FD_SCHEME_HPP
#define LDG1D_FD_SCHEME_HPP

#include <vector>

#include "ldg1d/elliptic.hpp"
#include "ldg1d/numerical_operator.hpp"
#include "ldg1d/problems.hpp"

namespace ldg1d {

// Companion finite difference scheme on uniform cell midpoints, kept
// deliberately stencil-based with no code shared with the LDG assembly; it
// exists to cross-validate the r = 0 LDG solves.
struct FDGrid {
  double a = 0.0, b = 1.0;
  int J = 0;
  double u_a = 0.0, u_b = 0.0;
  std::vector<double> values;  // U_1..U_J at midpoints

  double h() const { return (b - a) / J; }
  double midpoint(int j) const { return a + (j - 0.5) * h(); }  // j = 1..J
};

// Residual on an explicitly extended value array [U_{-1}, U_0, U_1, ...,
// U_J, U_{J+1}, U_{J+2}]; exposed so tests can drive the stencils with
// exact-solution ghost values.
std::vector<double> fd_residual_extended(const std::vector<double>& u_ext, double a, double h,
                                         const NumericalOperator& op);

// Residual with the scheme's own closures: U_0 = u_a, U_{J+1} = u_b,
// U_{-1} = 2 u_a - U_1, U_{J+2} = 2 u_b - U_J. The x-dependence of Fhat is
// integrated over each cell with a hard-coded 2-point Gauss rule, matching
// the r = 0 LDG right-hand side exactly.
std::vector<double> fd_residual(const FDGrid& grid, const NumericalOperator& op);

// Damped Newton (finite-difference Jacobian) from the linear interpolant of
// the boundary data.
FDGrid fd_solve(const NumericalOperator& op, const Problem& prob, int J, const SolverConfig& config);

}  // namespace ldg1d

#endif
