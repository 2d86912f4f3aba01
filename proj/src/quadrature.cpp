#include "ldg1d/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ldg1d {

std::vector<double> legendre_values(int r, double x) {
  std::vector<double> p(static_cast<std::size_t>(r) + 1);
  p[0] = 1.0;
  if (r >= 1) p[1] = x;
  for (int k = 1; k < r; ++k) {
    p[static_cast<std::size_t>(k) + 1] =
        ((2.0 * k + 1.0) * x * p[static_cast<std::size_t>(k)] -
         k * p[static_cast<std::size_t>(k) - 1]) /
        (k + 1.0);
  }
  return p;
}

std::vector<double> legendre_derivatives(int r, double x) {
  const std::vector<double> p = legendre_values(r, x);
  std::vector<double> d(static_cast<std::size_t>(r) + 1);
  d[0] = 0.0;
  if (r >= 1) d[1] = 1.0;
  // (2k+1) P_k = P'_{k+1} - P'_{k-1}
  for (int k = 1; k < r; ++k) {
    d[static_cast<std::size_t>(k) + 1] =
        d[static_cast<std::size_t>(k) - 1] + (2.0 * k + 1.0) * p[static_cast<std::size_t>(k)];
  }
  return d;
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one point");
  QuadratureRule rule;
  rule.points.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  // Newton iteration from the Chebyshev-based initial guess; symmetric pairs.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.points[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.points[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace ldg1d
