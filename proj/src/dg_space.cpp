#include "ldg1d/dg_space.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ldg1d {

DGSpace::DGSpace(Mesh mesh, int degree) : mesh_(std::move(mesh)), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("DGSpace: degree must be nonnegative");
  quad_ = gauss_legendre(std::max(degree + 2, 2 * degree + 1));
  const int nq = quad_.size();
  ref_val_.resize(static_cast<std::size_t>(n_modes()) * nq);
  ref_der_.resize(static_cast<std::size_t>(n_modes()) * nq);
  for (int g = 0; g < nq; ++g) {
    const auto p = legendre_values(degree, quad_.points[static_cast<std::size_t>(g)]);
    const auto d = legendre_derivatives(degree, quad_.points[static_cast<std::size_t>(g)]);
    for (int k = 0; k <= degree; ++k) {
      ref_val_[static_cast<std::size_t>(k) * nq + g] = p[static_cast<std::size_t>(k)];
      ref_der_[static_cast<std::size_t>(k) * nq + g] = d[static_cast<std::size_t>(k)];
    }
  }
  sqrt_2kp1_.resize(static_cast<std::size_t>(n_modes()));
  for (int k = 0; k <= degree; ++k) sqrt_2kp1_[static_cast<std::size_t>(k)] = std::sqrt(2.0 * k + 1.0);
  inv_sqrt_h_.resize(static_cast<std::size_t>(mesh_.cells()));
  for (int j = 1; j <= mesh_.cells(); ++j) {
    inv_sqrt_h_[static_cast<std::size_t>(j - 1)] = 1.0 / std::sqrt(mesh_.width(j));
  }
}

double DGFunction::eval_in_cell(int cell, double x) const {
  const DGSpace& s = *space_;
  const Mesh& m = s.mesh();
  if (cell < 1 || cell > m.cells()) throw std::out_of_range("DGFunction::eval_in_cell: bad cell index");
  const double xi = 2.0 * (x - m.center(cell)) / m.width(cell);
  const auto p = legendre_values(s.degree(), xi);
  double v = 0.0;
  for (int k = 0; k <= s.degree(); ++k) {
    v += coeff(cell, k) * s.scale(cell, k) * p[static_cast<std::size_t>(k)];
  }
  return v;
}

double DGFunction::eval(double x) const { return eval_in_cell(space_->mesh().locate(x), x); }

DGFunction& DGFunction::operator+=(const DGFunction& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

DGFunction& DGFunction::operator-=(const DGFunction& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

DGFunction& DGFunction::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

void DGFunction::add_scaled(double s, const DGFunction& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += s * o.c_[i];
}

double eval_trace(const DGFunction& v, int node, Side side) {
  const DGSpace& s = v.space();
  const int J = s.mesh().cells();
  if (side == Side::minus) {
    if (node < 1 || node > J) {
      throw std::out_of_range("eval_trace: no cell to the left of node " + std::to_string(node));
    }
    // right endpoint of cell `node`: P_k(1) = 1
    double val = 0.0;
    for (int k = 0; k <= s.degree(); ++k) val += v.coeff(node, k) * s.scale(node, k);
    return val;
  }
  if (node < 0 || node > J - 1) {
    throw std::out_of_range("eval_trace: no cell to the right of node " + std::to_string(node));
  }
  // left endpoint of cell node+1: P_k(-1) = (-1)^k
  double val = 0.0;
  double sign = 1.0;
  for (int k = 0; k <= s.degree(); ++k) {
    val += sign * v.coeff(node + 1, k) * s.scale(node + 1, k);
    sign = -sign;
  }
  return val;
}

double jump(const DGFunction& v, int node) {
  const int J = v.space().mesh().cells();
  if (node < 1 || node > J - 1) {
    throw std::out_of_range("jump: node " + std::to_string(node) + " is not interior");
  }
  return eval_trace(v, node, Side::minus) - eval_trace(v, node, Side::plus);
}

DGFunction l2_project(const DGSpace& space, const std::function<double(double)>& f) {
  DGFunction out(space);
  for (int j = 1; j <= space.mesh().cells(); ++j) {
    for (int g = 0; g < space.n_quad(); ++g) {
      const double w = space.quad_weight(j, g);
      const double fv = f(space.quad_point(j, g));
      for (int k = 0; k <= space.degree(); ++k) {
        out.coeff(j, k) += w * fv * space.scale(j, k) * space.ref_value(k, g);
      }
    }
  }
  return out;
}

ErrorNorms error_norms(const DGFunction& v, const std::function<double(double)>& exact) {
  const DGSpace& s = v.space();
  const Mesh& m = s.mesh();
  ErrorNorms norms;
  double l2sq = 0.0;
  for (int j = 1; j <= m.cells(); ++j) {
    for (int g = 0; g < s.n_quad(); ++g) {
      const double x = s.quad_point(j, g);
      double vh = 0.0;
      for (int k = 0; k <= s.degree(); ++k) vh += v.coeff(j, k) * s.scale(j, k) * s.ref_value(k, g);
      const double e = vh - exact(x);
      l2sq += s.quad_weight(j, g) * e * e;
      norms.linf = std::max(norms.linf, std::abs(e));
    }
    const double xl = m.node(j - 1), xr = m.node(j), h = m.width(j);
    norms.linf = std::max(norms.linf, std::abs(v.eval_in_cell(j, xl) - exact(xl)));
    norms.linf = std::max(norms.linf, std::abs(v.eval_in_cell(j, xr) - exact(xr)));
    for (int i = 1; i <= 10; ++i) {
      const double x = xl + h * i / 11.0;
      norms.linf = std::max(norms.linf, std::abs(v.eval_in_cell(j, x) - exact(x)));
    }
  }
  norms.l2 = std::sqrt(l2sq);
  return norms;
}

double broken_inner_product(const DGFunction& v, const DGFunction& w) {
  const DGSpace& s = v.space();
  double sum = 0.0;
  for (int j = 1; j <= s.mesh().cells(); ++j) {
    for (int g = 0; g < s.n_quad(); ++g) {
      double vv = 0.0, wv = 0.0;
      for (int k = 0; k <= s.degree(); ++k) {
        const double phi = s.scale(j, k) * s.ref_value(k, g);
        vv += v.coeff(j, k) * phi;
        wv += w.coeff(j, k) * phi;
      }
      sum += s.quad_weight(j, g) * vv * wv;
    }
  }
  return sum;
}

void write_csv(const DGFunction& v, std::ostream& out) {
  out << "cell,k,value\n";
  const DGSpace& s = v.space();
  for (int j = 1; j <= s.mesh().cells(); ++j) {
    for (int k = 0; k <= s.degree(); ++k) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", j, k, v.coeff(j, k));
      out << buf;
    }
  }
}

}  // namespace ldg1d
