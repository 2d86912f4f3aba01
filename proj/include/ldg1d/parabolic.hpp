#ifndef LDG1D_PARABOLIC_HPP
#define LDG1D_PARABOLIC_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ldg1d/elliptic.hpp"

namespace ldg1d {

struct TimeSteppingError : std::runtime_error {
  TimeSteppingError(const std::string& msg, int stage_or_step)
      : std::runtime_error(msg), index(stage_or_step) {}
  int index;
};

// Uniform time grid on [0, T]; dt * n_steps = T exactly up to roundoff. When
// built from a CFL factor, n_steps = ceil(T / (kappa_t h^2)) so that
// dt <= kappa_t h_max^2 and the grid still lands exactly on T.
struct TimeGrid {
  double T = 0.0;
  int n_steps = 0;
  double dt = 0.0;
  std::optional<double> cfl_kappa;

  static TimeGrid from_steps(double T, int n_steps);
  static TimeGrid from_dt(double T, double dt);
  static TimeGrid from_cfl(double T, double kappa_t, double h_max);

  double time(int k) const { return dt * k; }
};

enum class ProjectionMode { modified, standard };

// L2 projection with the Nitsche-style 1/sqrt(h_max) boundary penalty that
// enforces the Dirichlet data weakly; differs from the standard projection
// only in the first and last cell blocks.
DGFunction modified_projection(const DGSpace& space, const DGFunction& v, double t,
                               const BoundaryData& bc);
DGFunction modified_projection(const DGSpace& space, const std::function<double(double)>& v, double t,
                               const BoundaryData& bc);

// P_h Fhat_t[v]: assembles Q_i^t v and P_j^t v, evaluates Fhat pointwise at
// the quadrature points and projects.
DGFunction fhat_apply(const LDGSystem& sys, const NumericalOperator& op, const DGFunction& v,
                      double t, const BoundaryData& bc);

DGFunction step_rk4(const LDGSystem& sys, const NumericalOperator& op, const DGFunction& u_prev,
                    double t_prev, double dt, const BoundaryData& bc,
                    ProjectionMode mode = ProjectionMode::modified);

DGFunction step_forward_euler(const LDGSystem& sys, const NumericalOperator& op,
                              const DGFunction& u_prev, double t_prev, double dt,
                              const BoundaryData& bc, ProjectionMode mode = ProjectionMode::modified);

// One implicit step: solves (u_n + dt/2 Fhat_n[u_n], phi) = (u_{n-1} -
// dt/2 Fhat_{n-1}[u_{n-1}], phi) together with the q/p equations at t_n, by
// the reduced Newton with the previous solution as initial guess.
EllipticState step_trapezoidal(const LDGSystem& sys, const NumericalOperator& op,
                               const EllipticState& state_prev, double t_prev, double dt,
                               const BoundaryData& bc, const SolverConfig& config);

enum class Scheme { rk4, forward_euler, trapezoidal };

struct EvolveOptions {
  ProjectionMode projection = ProjectionMode::modified;
  int snapshot_stride = 0;  // 0: no snapshots
};

struct EvolveResult {
  DGFunction u;
  std::vector<std::pair<double, DGFunction>> snapshots;
};

// Method-of-lines driver: u^0 = P_h u_0, then n_steps of the chosen scheme.
EvolveResult evolve(Scheme scheme, const LDGSystem& sys, const NumericalOperator& op,
                    const BoundaryData& bc, const InitialData& u0, const TimeGrid& grid,
                    const SolverConfig& config, const EvolveOptions& options = {});

}  // namespace ldg1d

#endif
