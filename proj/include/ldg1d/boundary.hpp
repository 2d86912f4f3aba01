#ifndef LDG1D_BOUNDARY_HPP
#define LDG1D_BOUNDARY_HPP

#include <functional>

namespace ldg1d {

// Time-dependent Dirichlet data u(t,a) = left(t), u(t,b) = right(t).
// Stationary problems wrap their constants.
struct BoundaryData {
  std::function<double(double)> left;
  std::function<double(double)> right;

  static BoundaryData constants(double u_a, double u_b) {
    return {[u_a](double) { return u_a; }, [u_b](double) { return u_b; }};
  }
};

using InitialData = std::function<double(double)>;

}  // namespace ldg1d

#endif
