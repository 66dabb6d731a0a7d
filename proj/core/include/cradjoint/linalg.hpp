#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace cradjoint {

using Complex = std::complex<double>;

/// Base class for numerical failures raised by the dense solvers.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pivot fell below the relative singularity threshold (1e-13 * max|A|).
class SingularMatrixError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A QR diagonal fell below the relative rank threshold (1e-12 * max column norm).
class RankDeficientError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A least-squares solve of a system that should be consistent left a residual
/// above the acceptance gate.
class InconsistentSystemError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Dense complex vector.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t n) : data_(n) {}
  ComplexVector(std::initializer_list<Complex> values) : data_(values) {}

  static ComplexVector zeros(std::size_t n) { return ComplexVector(n); }
  /// k-th standard basis vector of dimension n.
  static ComplexVector basis(std::size_t n, std::size_t k);

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  ComplexVector segment(std::size_t start, std::size_t len) const;

  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);
  ComplexVector& operator*=(Complex s);

 private:
  std::vector<Complex> data_;
};

ComplexVector operator+(ComplexVector a, const ComplexVector& b);
ComplexVector operator-(ComplexVector a, const ComplexVector& b);
ComplexVector operator*(Complex s, ComplexVector v);
ComplexVector operator-(ComplexVector v);

/// Elementwise complex conjugate.
ComplexVector conj(const ComplexVector& v);
/// Inner product, conjugate-linear in the second argument: sum_k a_k conj(b_k).
Complex inner(const ComplexVector& a, const ComplexVector& b);
double norm2(const ComplexVector& v);
double norm1(const ComplexVector& v);
double norm_inf(const ComplexVector& v);
bool all_finite(const ComplexVector& v);

std::ostream& operator<<(std::ostream& os, const ComplexVector& v);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Complex* row_data(std::size_t i) { return data_.data() + i * cols_; }
  const Complex* row_data(std::size_t i) const { return data_.data() + i * cols_; }

  /// Copy `block` into this matrix with its top-left corner at (row0, col0).
  void paste(std::size_t row0, std::size_t col0, const ComplexMatrix& block);

  ComplexVector column(std::size_t j) const;
  void set_column(std::size_t j, const ComplexVector& v);

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);

/// Elementwise complex conjugate.
ComplexMatrix conj(const ComplexMatrix& m);
/// Conjugate transpose: (A^H)_{ij} = conj(A_{ji}).
ComplexMatrix conj_transpose(const ComplexMatrix& m);

/// Largest entry magnitude. Used for entrywise residual norms.
double max_abs(const ComplexMatrix& m);
/// Induced 1-norm (maximum absolute column sum). Used for conditioning.
double norm_one(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// Single-column matrix view of a vector.
ComplexMatrix as_column(const ComplexVector& v);

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m);

/// LU factorization with partial (row) pivoting of a square matrix.
///
/// Throws SingularMatrixError when a pivot magnitude drops below
/// 1e-13 * max|A|, which signals that the system does not determine a
/// unique solution at working precision.
class LuFactorization {
 public:
  explicit LuFactorization(ComplexMatrix a);

  std::size_t dim() const { return lu_.rows(); }

  /// Solve A X = B.
  ComplexMatrix solve(const ComplexMatrix& b) const;
  ComplexVector solve(const ComplexVector& b) const;

  /// Solve A^H X = B using the same factorization.
  ComplexMatrix solve_adjoint(const ComplexMatrix& b) const;
  ComplexVector solve_adjoint(const ComplexVector& b) const;

  Complex determinant() const;

  /// Hager-style estimate of the 1-norm condition number kappa_1(A).
  /// A lower bound on the true value, usually within a small factor.
  double condition_1norm_estimate() const;

 private:
  void apply_forward_permutation(ComplexMatrix& b) const;

  ComplexMatrix lu_;
  std::vector<std::size_t> pivots_;
  double anorm1_ = 0.0;
  double swap_parity_ = 1.0;
};

/// Solve A X = B for square A via partial-pivoting LU.
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& b);

struct LstsqResult {
  ComplexMatrix solution;
  double residual;  // max-abs entry of A X - B, computed by multiply-back
};

/// Columnwise least-squares solution of A X = B with A tall (rows >= cols),
/// via Householder QR. Throws RankDeficientError when A is numerically rank
/// deficient.
LstsqResult lstsq_solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// Minimum-2-norm solution of the underdetermined system A X = B with A wide
/// (rows <= cols) and full row rank, via Householder QR of A^H.
ComplexMatrix minnorm_solve(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace cradjoint
