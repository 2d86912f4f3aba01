#ifndef LDG1D_LDG_SYSTEM_HPP
#define LDG1D_LDG_SYSTEM_HPP

#include <array>
#include <iosfwd>
#include <utility>
#include <vector>

#include "ldg1d/boundary.hpp"
#include "ldg1d/dense_matrix.hpp"
#include "ldg1d/dg_space.hpp"

namespace ldg1d {

// Whole-domain LDG operators for the mixed system. With the orthonormal
// basis the mass matrix is the identity, so the auxiliary variables are
// explicit:
//
//   q_i = f_i(u_a, u_b) - A_i u            (one-sided first derivatives)
//   p_j = -(B_j1 q1 + B_j2 q2)             (one-sided second derivatives)
//
// A_1/B_11/B_32 carry left-biased interior fluxes, A_2/B_21/B_42 right-biased
// ones. The boundary rows encode, through the kappa_r switch, continuity of
// u, q1, q2 across the boundary for r >= 1 and the ghost-value extension
// (U_0 = u_a, U_{J+1} = u_b, U_{-1} = 2u_a - U_1, U_{J+2} = 2u_b - U_J) for
// r = 0; composed with a uniform mesh at r = 0 the maps reduce exactly to the
// finite difference stencils delta-, delta+, delta^2.
//
// Everything is assembled once per (mesh, degree) and reused across Newton
// iterations and time steps; applications are pure and thread-safe.
class LDGSystem {
 public:
  explicit LDGSystem(const DGSpace& space);

  const DGSpace& space() const { return *space_; }
  // 0 for piecewise constants, 1 otherwise.
  int kappa() const { return kappa_; }

  std::vector<double> f1_vector(double u_a, double u_b) const;
  std::vector<double> f2_vector(double u_a, double u_b) const;

  // Left-/right-biased discrete first derivatives of u with Dirichlet data.
  std::pair<DGFunction, DGFunction> q_operators(const DGFunction& u, double u_a, double u_b) const;
  // Discrete second derivatives (p1, p2, p3, p4) from the derivative pair.
  std::array<DGFunction, 4> p_operators(const DGFunction& q1, const DGFunction& q2) const;

  // Time-parameterized variants: identical matrices, boundary data evaluated
  // at t (the operators Q_i^t, P_j^t of the fully discrete schemes).
  std::pair<DGFunction, DGFunction> q_operators_at_time(const DGFunction& v, double t,
                                                        const BoundaryData& bc) const;
  std::array<DGFunction, 4> p_operators_at_time(const DGFunction& v, double t,
                                                const BoundaryData& bc) const;

  const DenseMatrix& A1() const { return A1_; }
  const DenseMatrix& A2() const { return A2_; }
  const DenseMatrix& B(int j, int slot) const;  // slot 1 acts on q1, slot 2 on q2
  // dp_j/du = B_j1 A1 + B_j2 A2
  const DenseMatrix& dp_du(int j) const { return DP_[static_cast<std::size_t>(j - 1)]; }

  // Basis trace vectors at the domain ends: phi(a+) and phi(b-).
  const std::vector<double>& trace_a() const { return ea_; }
  const std::vector<double>& trace_b() const { return eb_; }

  // Debug dump of all assembled matrices.
  void dump_matrices_csv(std::ostream& out) const;

 private:
  const DGSpace* space_;
  int kappa_;
  DenseMatrix A1_, A2_;
  DenseMatrix B11_, B21_, B22_, B31_, B32_, B42_;
  std::array<DenseMatrix, 4> DP_;
  std::vector<double> ea_, eb_;
};

}  // namespace ldg1d

#endif
