#include "ldg1d/ldg_system.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ldg1d {

namespace {

// Basis value of mode k of `cell` at one of its own endpoints:
// P_k(1) = 1 on the right, P_k(-1) = (-1)^k on the left.
double end_value(const DGSpace& s, int cell, int k, bool right) {
  const double v = s.scale(cell, k);
  return right ? v : (k % 2 == 0 ? v : -v);
}

// M += coef * v_trace x phi_trace, where the v trace is taken at an endpoint
// of cell_v and the phi trace at an endpoint of cell_phi.
void add_trace_term(DenseMatrix& M, const DGSpace& s, double coef, int cell_v, bool v_right,
                    int cell_phi, bool phi_right) {
  for (int m = 0; m <= s.degree(); ++m) {
    const double pm = end_value(s, cell_phi, m, phi_right);
    for (int n = 0; n <= s.degree(); ++n) {
      M(s.dof(cell_phi, m), s.dof(cell_v, n)) += coef * end_value(s, cell_v, n, v_right) * pm;
    }
  }
}

// Volume term (v, phi_x) over every cell. The cell Jacobians cancel, so the
// block is the reference integral sum_g w_g P_n P'_m times the normalizers.
void add_volume(DenseMatrix& M, const DGSpace& s) {
  const int r = s.degree();
  std::vector<double> ref(static_cast<std::size_t>(r + 1) * (r + 1), 0.0);
  for (int g = 0; g < s.n_quad(); ++g) {
    const double w = s.quad().weights[static_cast<std::size_t>(g)];
    for (int m = 0; m <= r; ++m) {
      for (int n = 0; n <= r; ++n) {
        ref[static_cast<std::size_t>(m) * (r + 1) + n] += w * s.ref_value(n, g) * s.ref_deriv(m, g);
      }
    }
  }
  for (int j = 1; j <= s.mesh().cells(); ++j) {
    for (int m = 0; m <= r; ++m) {
      for (int n = 0; n <= r; ++n) {
        M(s.dof(j, m), s.dof(j, n)) +=
            s.scale(j, m) * s.scale(j, n) * ref[static_cast<std::size_t>(m) * (r + 1) + n];
      }
    }
  }
}

// -sum_j v(x_j^-) [phi(x_j)] over interior nodes (left-biased flux).
void add_interior_left(DenseMatrix& M, const DGSpace& s) {
  for (int j = 1; j <= s.mesh().cells() - 1; ++j) {
    add_trace_term(M, s, -1.0, j, true, j, true);     // -v(x_j^-) phi(x_j^-)
    add_trace_term(M, s, +1.0, j, true, j + 1, false);  // +v(x_j^-) phi(x_j^+)
  }
}

// -sum_j v(x_j^+) [phi(x_j)] over interior nodes (right-biased flux).
void add_interior_right(DenseMatrix& M, const DGSpace& s) {
  for (int j = 1; j <= s.mesh().cells() - 1; ++j) {
    add_trace_term(M, s, -1.0, j + 1, false, j, true);
    add_trace_term(M, s, +1.0, j + 1, false, j + 1, false);
  }
}

}  // namespace

LDGSystem::LDGSystem(const DGSpace& space) : space_(&space) {
  const DGSpace& s = space;
  const int n = s.n_dof();
  const int J = s.mesh().cells();
  kappa_ = (s.degree() == 0) ? 0 : 1;
  const double ck = 1.0 - kappa_;

  A1_ = DenseMatrix(n, n);
  A2_ = DenseMatrix(n, n);
  B11_ = DenseMatrix(n, n);
  B21_ = DenseMatrix(n, n);
  B22_ = DenseMatrix(n, n);
  B31_ = DenseMatrix(n, n);
  B32_ = DenseMatrix(n, n);
  B42_ = DenseMatrix(n, n);

  // a_1(v,phi) = (v,phi_x) - (1-k) v(b-)phi(b-) - sum v(x_j^-)[phi(x_j)]
  add_volume(A1_, s);
  add_interior_left(A1_, s);
  if (ck != 0.0) add_trace_term(A1_, s, -ck, J, true, J, true);

  // a_2(v,phi) = (v,phi_x) + (1-k) v(a+)phi(a+) - sum v(x_j^+)[phi(x_j)]
  add_volume(A2_, s);
  add_interior_right(A2_, s);
  if (ck != 0.0) add_trace_term(A2_, s, ck, 1, false, 1, false);

  // b_1(v1,.;phi) = (v1,phi_x) + v1(a+)phi(a+) - v1(b-)phi(b-) - sum v1(x_j^-)[phi]
  add_volume(B11_, s);
  add_interior_left(B11_, s);
  add_trace_term(B11_, s, 1.0, 1, false, 1, false);
  add_trace_term(B11_, s, -1.0, J, true, J, true);

  // b_2(v1,v2;phi) = (v1,phi_x) + v1(a+)phi(a+) - (1-k) v2(b-)phi(b-)
  //                  - k v1(b-)phi(b-) - sum v1(x_j^+)[phi]
  add_volume(B21_, s);
  add_interior_right(B21_, s);
  add_trace_term(B21_, s, 1.0, 1, false, 1, false);
  if (kappa_ != 0) add_trace_term(B21_, s, -static_cast<double>(kappa_), J, true, J, true);
  if (ck != 0.0) add_trace_term(B22_, s, -ck, J, true, J, true);

  // b_3(v1,v2;phi) = (v2,phi_x) + (1-k) v1(a+)phi(a+) + k v2(a+)phi(a+)
  //                  - v2(b-)phi(b-) - sum v2(x_j^-)[phi]
  add_volume(B32_, s);
  add_interior_left(B32_, s);
  if (kappa_ != 0) add_trace_term(B32_, s, static_cast<double>(kappa_), 1, false, 1, false);
  add_trace_term(B32_, s, -1.0, J, true, J, true);
  if (ck != 0.0) add_trace_term(B31_, s, ck, 1, false, 1, false);

  // b_4(.,v2;phi) = (v2,phi_x) + v2(a+)phi(a+) - v2(b-)phi(b-) - sum v2(x_j^+)[phi]
  add_volume(B42_, s);
  add_interior_right(B42_, s);
  add_trace_term(B42_, s, 1.0, 1, false, 1, false);
  add_trace_term(B42_, s, -1.0, J, true, J, true);

  ea_.assign(static_cast<std::size_t>(n), 0.0);
  eb_.assign(static_cast<std::size_t>(n), 0.0);
  for (int m = 0; m <= s.degree(); ++m) {
    ea_[static_cast<std::size_t>(s.dof(1, m))] = end_value(s, 1, m, false);
    eb_[static_cast<std::size_t>(s.dof(J, m))] = end_value(s, J, m, true);
  }

  DP_[0] = matmul(B11_, A1_);
  DP_[1] = matmul(B21_, A1_);
  if (kappa_ == 0) {
    DenseMatrix t = matmul(B22_, A2_);
    for (std::size_t i = 0; i < DP_[1].data().size(); ++i) DP_[1].data()[i] += t.data()[i];
  }
  DP_[2] = matmul(B32_, A2_);
  if (kappa_ == 0) {
    DenseMatrix t = matmul(B31_, A1_);
    for (std::size_t i = 0; i < DP_[2].data().size(); ++i) DP_[2].data()[i] += t.data()[i];
  }
  DP_[3] = matmul(B42_, A2_);
}

std::vector<double> LDGSystem::f1_vector(double u_a, double u_b) const {
  std::vector<double> f(ea_.size(), 0.0);
  axpy(kappa_ * u_b, eb_, f);
  axpy(-u_a, ea_, f);
  return f;
}

std::vector<double> LDGSystem::f2_vector(double u_a, double u_b) const {
  std::vector<double> f(ea_.size(), 0.0);
  axpy(u_b, eb_, f);
  axpy(-kappa_ * u_a, ea_, f);
  return f;
}

std::pair<DGFunction, DGFunction> LDGSystem::q_operators(const DGFunction& u, double u_a,
                                                         double u_b) const {
  DGFunction q1(*space_), q2(*space_);
  q1.coeffs() = f1_vector(u_a, u_b);
  axpy(-1.0, matvec(A1_, u.coeffs()), q1.coeffs());
  q2.coeffs() = f2_vector(u_a, u_b);
  axpy(-1.0, matvec(A2_, u.coeffs()), q2.coeffs());
  return {std::move(q1), std::move(q2)};
}

std::array<DGFunction, 4> LDGSystem::p_operators(const DGFunction& q1, const DGFunction& q2) const {
  std::array<DGFunction, 4> p = {DGFunction(*space_), DGFunction(*space_), DGFunction(*space_),
                                 DGFunction(*space_)};
  p[0].coeffs() = matvec(B11_, q1.coeffs());
  p[1].coeffs() = matvec(B21_, q1.coeffs());
  p[2].coeffs() = matvec(B32_, q2.coeffs());
  p[3].coeffs() = matvec(B42_, q2.coeffs());
  if (kappa_ == 0) {
    axpy(1.0, matvec(B22_, q2.coeffs()), p[1].coeffs());
    axpy(1.0, matvec(B31_, q1.coeffs()), p[2].coeffs());
  }
  for (auto& pj : p) {
    for (double& c : pj.coeffs()) c = -c;
  }
  return p;
}

std::pair<DGFunction, DGFunction> LDGSystem::q_operators_at_time(const DGFunction& v, double t,
                                                                 const BoundaryData& bc) const {
  return q_operators(v, bc.left(t), bc.right(t));
}

std::array<DGFunction, 4> LDGSystem::p_operators_at_time(const DGFunction& v, double t,
                                                         const BoundaryData& bc) const {
  const auto [q1, q2] = q_operators_at_time(v, t, bc);
  return p_operators(q1, q2);
}

const DenseMatrix& LDGSystem::B(int j, int slot) const {
  if (slot == 1) {
    switch (j) {
      case 1: return B11_;
      case 2: return B21_;
      case 3: return B31_;
      case 4: throw std::invalid_argument("b_4 has no v1 part");
    }
  } else if (slot == 2) {
    switch (j) {
      case 1: throw std::invalid_argument("b_1 has no v2 part");
      case 2: return B22_;
      case 3: return B32_;
      case 4: return B42_;
    }
  }
  throw std::invalid_argument("LDGSystem::B: bad indices");
}

void LDGSystem::dump_matrices_csv(std::ostream& out) const {
  const auto dump = [&](const char* name, const DenseMatrix& M) {
    out << "# " << name << "\n";
    for (int i = 0; i < M.rows(); ++i) {
      for (int j = 0; j < M.cols(); ++j) {
        out << M(i, j) << (j + 1 < M.cols() ? ',' : '\n');
      }
    }
  };
  dump("A1", A1_);
  dump("A2", A2_);
  dump("B11", B11_);
  dump("B21", B21_);
  dump("B22", B22_);
  dump("B31", B31_);
  dump("B32", B32_);
  dump("B42", B42_);
}

}  // namespace ldg1d
