#ifndef LDG1D_DG_SPACE_HPP
#define LDG1D_DG_SPACE_HPP

#include <functional>
#include <iosfwd>
#include <vector>

#include "ldg1d/mesh.hpp"
#include "ldg1d/quadrature.hpp"

namespace ldg1d {

// Piecewise polynomial space of degree r on a mesh, with the Legendre basis
// mapped affinely to each cell and normalized to unit L2 norm. The mass
// matrix is the identity, so broken L2 inner products reduce to Euclidean
// dot products of coefficient vectors.
class DGSpace {
 public:
  DGSpace(Mesh mesh, int degree);

  const Mesh& mesh() const { return mesh_; }
  int degree() const { return degree_; }
  int n_modes() const { return degree_ + 1; }
  int n_dof() const { return mesh_.cells() * n_modes(); }
  // Gauss points per cell: max(r+2, 2r+1), exact for all bilinear assembly.
  int n_quad() const { return quad_.size(); }
  const QuadratureRule& quad() const { return quad_; }

  // Reference Legendre tables at the quadrature points.
  double ref_value(int k, int g) const { return ref_val_[static_cast<std::size_t>(k) * n_quad() + g]; }
  double ref_deriv(int k, int g) const { return ref_der_[static_cast<std::size_t>(k) * n_quad() + g]; }

  // Normalization sqrt((2k+1)/h_j) making the cell basis orthonormal.
  double scale(int cell, int k) const { return sqrt_2kp1_[static_cast<std::size_t>(k)] * inv_sqrt_h_[static_cast<std::size_t>(cell - 1)]; }

  int dof(int cell, int k) const { return (cell - 1) * n_modes() + k; }

  // Physical coordinate of quadrature point g in cell j.
  double quad_point(int cell, int g) const {
    return mesh_.center(cell) + 0.5 * mesh_.width(cell) * quad_.points[static_cast<std::size_t>(g)];
  }
  // Quadrature weight including the cell Jacobian h_j/2.
  double quad_weight(int cell, int g) const {
    return 0.5 * mesh_.width(cell) * quad_.weights[static_cast<std::size_t>(g)];
  }

 private:
  Mesh mesh_;
  int degree_;
  QuadratureRule quad_;
  std::vector<double> ref_val_, ref_der_;
  std::vector<double> sqrt_2kp1_, inv_sqrt_h_;
};

enum class Side { minus, plus };

// Element of a DGSpace: one coefficient block of r+1 orthonormal Legendre
// modes per cell. Plain value type; the space must outlive the function.
class DGFunction {
 public:
  explicit DGFunction(const DGSpace& space)
      : space_(&space), c_(static_cast<std::size_t>(space.n_dof()), 0.0) {}

  const DGSpace& space() const { return *space_; }
  std::vector<double>& coeffs() { return c_; }
  const std::vector<double>& coeffs() const { return c_; }

  double& coeff(int cell, int k) { return c_[static_cast<std::size_t>(space_->dof(cell, k))]; }
  double coeff(int cell, int k) const { return c_[static_cast<std::size_t>(space_->dof(cell, k))]; }

  // Value of the cell-j polynomial at x (x may be a node of cell j).
  double eval_in_cell(int cell, double x) const;
  // Value at x using the mesh locate tie-break (left cell at interior nodes).
  double eval(double x) const;

  DGFunction& operator+=(const DGFunction& o);
  DGFunction& operator-=(const DGFunction& o);
  DGFunction& operator*=(double s);
  // this += s * o
  void add_scaled(double s, const DGFunction& o);

 private:
  const DGSpace* space_;
  std::vector<double> c_;
};

// One-sided limit of v at node j. Side::minus needs j >= 1, Side::plus needs
// j <= J-1; anything else has no cell to take the limit from and throws.
double eval_trace(const DGFunction& v, int node, Side side);

// [v(x_j)] = v(x_j^-) - v(x_j^+) at an interior node.
double jump(const DGFunction& v, int node);

// Standard broken L2 projection, realized per cell by Gauss quadrature (the
// orthonormal basis makes it a direct inner-product evaluation).
DGFunction l2_project(const DGSpace& space, const std::function<double(double)>& f);

struct ErrorNorms {
  double l2 = 0.0;
  double linf = 0.0;
};

// L2 by cell quadrature; Linf by dense sampling (quadrature points, cell
// endpoints, and 10 uniform interior samples per cell).
ErrorNorms error_norms(const DGFunction& v, const std::function<double(double)>& exact);

// (v, w) over the broken mesh, evaluated by quadrature (tests compare this
// against the coefficient dot product).
double broken_inner_product(const DGFunction& v, const DGFunction& w);

// CSV rows: cell,k,value
void write_csv(const DGFunction& v, std::ostream& out);

}  // namespace ldg1d

#endif
