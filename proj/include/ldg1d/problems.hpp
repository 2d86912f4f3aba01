#ifndef LDG1D_PROBLEMS_HPP
#define LDG1D_PROBLEMS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ldg1d/boundary.hpp"
#include "ldg1d/numerical_operator.hpp"

namespace ldg1d {

// One benchmark problem: the PDE operator, boundary/initial data, the exact
// solution with hard-coded derivatives (used by the oracle tests), and the
// numerical-moment coefficient used for it in the experiments.
struct Problem {
  enum class Kind { elliptic, parabolic };

  std::string name;
  Kind kind = Kind::elliptic;
  double a = 0.0, b = 1.0;
  PointwiseOperator op;
  double alpha_paper = 0.0;
  BoundaryData bc;
  InitialData u0;      // parabolic only
  double T_paper = 0.0;  // parabolic only

  std::function<double(double x, double t)> exact;
  std::function<double(double x, double t)> exact_x;
  std::function<double(double x, double t)> exact_xx;
  std::function<double(double x, double t)> exact_t;  // parabolic only

  // x locations where the exact solution loses smoothness; residual checks
  // stay at distance > 1e-3 from these.
  std::vector<double> kinks;

  NumericalOperator numerical(double alpha) const { return {op, alpha, {}}; }
  NumericalOperator numerical() const { return {op, alpha_paper, {}}; }
};

// Monge-Ampere with two classical solutions; moment selects the convex one.
Problem test1();
// Cubic nonlinearity in u_xx, not monotone decreasing, C^1 solution.
Problem test2();
// HJB, two-element control set, u = x|x|^3.
Problem test3();
// HJB, control in (0,1], closed-form infimum via the clamped parabola vertex.
Problem test4();
// Parabolic, product nonlinearity u_xx * u.
Problem test5();
// Parabolic, nonlinear in both u_xx and u_x.
Problem test6();
// Parabolic HJB with piecewise-in-time coefficient.
Problem test7();
// Parabolic bang-bang control, degenerate at x = 1.
Problem test8();

const std::vector<std::string>& problem_names();
Problem problem_by_name(const std::string& name);

// Test-1 companions: the artifact mu, both classical solutions, and the
// boundary-data secant line.
struct SelectionFixtures {
  std::function<double(double)> mu;
  std::function<double(double)> u_plus;
  std::function<double(double)> u_minus;
  std::function<double(double)> u_bar;
};
SelectionFixtures selection_fixtures();

// Sample points for the operator checks: x away from kinks, t in [0, T],
// (p, q, u) perturbed around the exact derivative values.
std::vector<OperatorSample> make_operator_samples(const Problem& prob, int count, std::uint64_t seed);

// |F(u_xx, u_x, u, x, t)| at the exact solution, plus u_t for parabolic
// problems; zero for a correct catalog entry.
double exact_pde_residual(const Problem& prob, double x, double t);

}  // namespace ldg1d

#endif
