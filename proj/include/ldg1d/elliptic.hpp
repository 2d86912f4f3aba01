#ifndef LDG1D_ELLIPTIC_HPP
#define LDG1D_ELLIPTIC_HPP

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ldg1d/ldg_system.hpp"
#include "ldg1d/numerical_operator.hpp"

namespace ldg1d {

// The seven coupled unknowns of the mixed discretization. After a converged
// solve the auxiliary fields equal the q/p operators applied to u with the
// problem's boundary data, to solver tolerance.
struct EllipticState {
  DGFunction u, q1, q2, p1, p2, p3, p4;
};

struct SolverConfig {
  double newton_tol = 1e-10;        // residual inf-norm
  int max_newton_iters = 50;
  double splitting_tol = 1e-9;      // change in (p2+p3)/2
  int max_splitting_iters = 100;
  enum class Jacobian { analytic, finite_difference };
  Jacobian jacobian = Jacobian::analytic;
};

struct IterationRecord {
  int iteration;
  double residual_norm;
  double step_scale;
};
using IterationLog = std::vector<IterationRecord>;

struct NewtonFailure : std::runtime_error {
  NewtonFailure(const std::string& msg, int iters, double norm,
                std::shared_ptr<EllipticState> state = nullptr)
      : std::runtime_error(msg), iterations(iters), residual_norm(norm), last_state(std::move(state)) {}
  int iterations;
  double residual_norm;
  std::shared_ptr<EllipticState> last_state;
};

struct RootSolveFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficients of the broken L2 projection of Fhat evaluated pointwise from
// the given fields; identical to the nonlinear residual block.
std::vector<double> project_fhat_coeffs(const LDGSystem& sys, const NumericalOperator& op,
                                        const DGFunction& u, const DGFunction& q1,
                                        const DGFunction& q2, const std::array<DGFunction, 4>& p,
                                        double t);

// Derive the auxiliary fields of u under the given boundary data.
EllipticState derive_state(const LDGSystem& sys, const DGFunction& u, double u_a, double u_b);

// Reduced residual R(u): q's and p's eliminated through their affine maps.
std::vector<double> nonlinear_residual(const LDGSystem& sys, const NumericalOperator& op,
                                       const DGFunction& u, double u_a, double u_b, double t = 0.0);

// Residual of the full 7-block system at an arbitrary (not necessarily
// consistent) state: [Fhat-block; q1; q2; p1..p4] equations.
std::vector<double> full_system_residual(const LDGSystem& sys, const NumericalOperator& op,
                                         const EllipticState& st, double u_a, double u_b,
                                         double t = 0.0);

// dR/du by the chain rule through the fixed matrices dq_i/du and dp_j/du.
DenseMatrix residual_jacobian(const LDGSystem& sys, const NumericalOperator& op, const DGFunction& u,
                              double u_a, double u_b, double t, bool analytic_partials);

// Damped Newton on the reduced residual.
EllipticState solve_newton(const LDGSystem& sys, const NumericalOperator& op, double u_a, double u_b,
                           const SolverConfig& config, const DGFunction& initial_guess,
                           IterationLog* log = nullptr, double t = 0.0);

// Damped Newton on R(u) = mass_shift*u + scale*P_h Fhat[u](t) - rhs; the
// trapezoidal stepper solves its per-step system through this entry point
// (mass_shift = 1, scale = dt/2).
EllipticState solve_newton_weighted(const LDGSystem& sys, const NumericalOperator& op, double u_a,
                                    double u_b, double t, double mass_shift, double scale,
                                    const std::vector<double>* rhs, const SolverConfig& config,
                                    const DGFunction& initial_guess, IterationLog* log = nullptr);

// Splitting iteration: (3) pointwise scalar root solve for s = (p2+p3)/2
// followed by projection, (4) linear solve for (u, q1, q2) with s as data,
// (5) recompute p1..p4; stop when the change in (p2+p3)/2 is small.
EllipticState solve_splitting(const LDGSystem& sys, const NumericalOperator& op, double u_a,
                              double u_b, const SolverConfig& config, const DGFunction& initial_guess,
                              IterationLog* log = nullptr);

}  // namespace ldg1d

#endif
