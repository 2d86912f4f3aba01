#include "ldg1d/dense_matrix.hpp"

#include <cmath>

namespace ldg1d {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> lu_solve(const DenseMatrix& A, const std::vector<double>& b) {
  const int n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("lu_solve: matrix must be square");
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("lu_solve: rhs length mismatch");

  DenseMatrix lu = A;
  std::vector<double> x = b;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;

  double scale = 0.0;
  for (const double v : A.data()) scale = std::max(scale, std::abs(v));

  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(lu(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= 1e-14 * (1.0 + scale)) {
      throw SingularMatrixError("lu_solve: matrix singular to working precision at pivot " +
                                    std::to_string(k),
                                k);
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      std::swap(x[static_cast<std::size_t>(k)], x[static_cast<std::size_t>(piv)]);
    }
    const double inv_piv = 1.0 / lu(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double m = lu(i, k) * inv_piv;
      lu(i, k) = m;
      if (m == 0.0) continue;
      for (int j = k + 1; j < n; ++j) lu(i, j) -= m * lu(k, j);
      x[static_cast<std::size_t>(i)] -= m * x[static_cast<std::size_t>(k)];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= lu(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s / lu(i, i);
  }
  return x;
}

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  DenseMatrix C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i) {
    for (int k = 0; k < A.cols(); ++k) {
      const double a = A(i, k);
      if (a == 0.0) continue;
      for (int j = 0; j < B.cols(); ++j) C(i, j) += a * B(k, j);
    }
  }
  return C;
}

std::vector<double> matvec(const DenseMatrix& A, const std::vector<double>& x) {
  if (A.cols() != static_cast<int>(x.size())) throw std::invalid_argument("matvec: dimension mismatch");
  std::vector<double> y(static_cast<std::size_t>(A.rows()), 0.0);
  for (int i = 0; i < A.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < A.cols(); ++j) s += A(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double norm_inf(const std::vector<double>& v) {
  double m = 0.0;
  for (const double a : v) m = std::max(m, std::abs(a));
  return m;
}

}  // namespace ldg1d
