#ifndef LDG1D_QUADRATURE_HPP
#define LDG1D_QUADRATURE_HPP

#include <vector>

namespace ldg1d {

// Gauss-Legendre rule on the reference interval [-1, 1].
struct QuadratureRule {
  std::vector<double> points;
  std::vector<double> weights;
  int size() const { return static_cast<int>(points.size()); }
};

// n-point rule, exact for polynomials of degree 2n-1.
QuadratureRule gauss_legendre(int n);

// Legendre polynomial values P_0(x)..P_r(x).
std::vector<double> legendre_values(int r, double x);

// Derivatives P_0'(x)..P_r'(x).
std::vector<double> legendre_derivatives(int r, double x);

}  // namespace ldg1d

#endif
