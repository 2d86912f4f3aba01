#ifndef LDG1D_DENSE_MATRIX_HPP
#define LDG1D_DENSE_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace ldg1d {

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError(const std::string& msg, int pivot) : std::runtime_error(msg), pivot_index(pivot) {}
  int pivot_index;
};

// Row-major dense matrix. Sizes here are small (a few hundred), so dense
// storage is used even for the block-banded LDG operators; a banded path is
// a possible extension.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMatrix: negative dimension");
  }

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

// x = A^{-1} b by LU with partial pivoting. Throws SingularMatrixError naming
// the pivot index when a pivot is zero to working precision.
std::vector<double> lu_solve(const DenseMatrix& A, const std::vector<double>& b);

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);
std::vector<double> matvec(const DenseMatrix& A, const std::vector<double>& x);

// y += alpha * x
void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y);

double norm_inf(const std::vector<double>& v);

}  // namespace ldg1d

#endif
