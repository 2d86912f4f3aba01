#include <doctest.h>

#include <random>
#include <string>

#include "ldg1d/dense_matrix.hpp"

using namespace ldg1d;

namespace {

DenseMatrix random_well_conditioned(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  DenseMatrix A(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A(i, j) = d(rng);
    A(i, i) += n;  // diagonally dominant
  }
  return A;
}

}  // namespace

TEST_CASE("lu_solve basics") {
  const DenseMatrix I = DenseMatrix::identity(3);
  const std::vector<double> b = {1.0, -2.0, 3.0};
  CHECK(lu_solve(I, b) == b);

  DenseMatrix D(2, 2);
  D(0, 0) = 2.0;
  D(1, 1) = 4.0;
  const auto x = lu_solve(D, {2.0, 8.0});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(2.0));
}

TEST_CASE("lu_solve residual on SPD-shifted random system") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const int n = 50;
  DenseMatrix R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R(i, j) = d(rng);
  DenseMatrix A(n, n);
  // A = R R^T + n I
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += R(i, k) * R(j, k);
      A(i, j) = s;
    }
    A(i, i) += n;
  }
  std::vector<double> b(n);
  for (double& v : b) v = d(rng);
  const auto x = lu_solve(A, b);
  // multiply-back oracle
  auto Ax = matvec(A, x);
  axpy(-1.0, b, Ax);
  CHECK(norm_inf(Ax) <= 1e-10 * (1.0 + norm_inf(b)));
}

TEST_CASE("lu_solve recovers x from A*x") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (const int n : {5, 40, 200}) {
    const DenseMatrix A = random_well_conditioned(n, rng);
    std::vector<double> x(n);
    for (double& v : x) v = d(rng);
    const auto y = lu_solve(A, matvec(A, x));
    double err = 0.0;
    for (int i = 0; i < n; ++i) err = std::max(err, std::abs(y[i] - x[i]));
    CHECK(err <= 1e-9 * (1.0 + norm_inf(x)));
  }
}

TEST_CASE("lu_solve reports the singular pivot") {
  DenseMatrix A(3, 3);
  A(0, 0) = 1.0;
  A(1, 1) = 1.0;  // row/col 2 identically zero
  try {
    lu_solve(A, {1.0, 1.0, 1.0});
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.pivot_index == 2);
    CHECK(std::string(e.what()).find("pivot 2") != std::string::npos);
  }
}

TEST_CASE("dimension mismatches throw") {
  DenseMatrix A(3, 2), B(3, 3);
  CHECK_THROWS_AS(matmul(A, B), std::invalid_argument);
  CHECK_THROWS_AS(matvec(A, std::vector<double>(3)), std::invalid_argument);
  CHECK_THROWS_AS(lu_solve(B, std::vector<double>(2)), std::invalid_argument);
  std::vector<double> y(2);
  CHECK_THROWS_AS(axpy(1.0, std::vector<double>(3), y), std::invalid_argument);
}

TEST_CASE("matmul identities and associativity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  DenseMatrix A(4, 5), B(5, 6), C(6, 3);
  for (auto* M : {&A, &B, &C}) {
    for (double& v : M->data()) v = d(rng);
  }
  const DenseMatrix left = matmul(matmul(A, B), C);
  const DenseMatrix right = matmul(A, matmul(B, C));
  for (int i = 0; i < left.rows(); ++i) {
    for (int j = 0; j < left.cols(); ++j) {
      CHECK(left(i, j) == doctest::Approx(right(i, j)).epsilon(1e-12));
    }
  }

  const DenseMatrix I = DenseMatrix::identity(4);
  std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  CHECK(matvec(I, v) == v);
  const DenseMatrix Z(4, 4);
  CHECK(norm_inf(matvec(Z, v)) == 0.0);
}

TEST_CASE("axpy and norm_inf") {
  std::vector<double> y = {1.0, 2.0};
  axpy(2.0, {3.0, -1.0}, y);
  CHECK(y[0] == doctest::Approx(7.0));
  CHECK(y[1] == doctest::Approx(0.0));
  CHECK(norm_inf(y) == doctest::Approx(7.0));
  CHECK(norm_inf({}) == 0.0);
}
