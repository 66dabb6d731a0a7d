#include "cradjoint/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>

namespace cradjoint {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

// ---------------------------------------------------------------- vectors

ComplexVector ComplexVector::basis(std::size_t n, std::size_t k) {
  require(k < n, "basis index out of range");
  ComplexVector e(n);
  e[k] = 1.0;
  return e;
}

ComplexVector ComplexVector::segment(std::size_t start, std::size_t len) const {
  require(start + len <= size(), "segment out of range");
  ComplexVector out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = data_[start + i];
  return out;
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  require(size() == other.size(), "vector size mismatch");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += other[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  require(size() == other.size(), "vector size mismatch");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= other[i];
  return *this;
}

ComplexVector& ComplexVector::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }
ComplexVector operator*(Complex s, ComplexVector v) { return v *= s; }
ComplexVector operator-(ComplexVector v) { return v *= Complex(-1.0); }

ComplexVector conj(const ComplexVector& v) {
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::conj(v[i]);
  return out;
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  require(a.size() == b.size(), "vector size mismatch in inner product");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

double norm2(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double norm1(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::abs(z);
  return s;
}

double norm_inf(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& z : v) s = std::max(s, std::abs(z));
  return s;
}

bool all_finite(const ComplexVector& v) {
  for (const auto& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const ComplexVector& v) {
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].real() << (v[i].imag() < 0 ? "-" : "+") << std::abs(v[i].imag()) << "i";
  }
  return os << "]";
}

// ---------------------------------------------------------------- matrices

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require(row.size() == c, "ragged rows in matrix literal");
    std::size_t j = 0;
    for (const auto& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

void ComplexMatrix::paste(std::size_t row0, std::size_t col0, const ComplexMatrix& block) {
  require(row0 + block.rows() <= rows_ && col0 + block.cols() <= cols_, "paste block out of range");
  for (std::size_t i = 0; i < block.rows(); ++i) {
    const Complex* src = block.row_data(i);
    Complex* dst = row_data(row0 + i) + col0;
    std::copy(src, src + block.cols(), dst);
  }
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  require(j < cols_, "column index out of range");
  ComplexVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void ComplexMatrix::set_column(std::size_t j, const ComplexVector& v) {
  require(j < cols_ && v.size() == rows_, "column assignment size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= Complex(-1.0); }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "matrix product shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex* ci = c.row_data(i);
    const Complex* ai = a.row_data(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = ai[k];
      if (aik == Complex(0.0)) continue;
      const Complex* bk = b.row_data(k);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
  require(a.cols() == x.size(), "matrix-vector shape mismatch");
  ComplexVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Complex* ai = a.row_data(i);
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += ai[j] * x[j];
    y[i] = s;
  }
  return y;
}

ComplexMatrix conj(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = std::conj(m(i, j));
  return out;
}

ComplexMatrix conj_transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

double max_abs(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s = std::max(s, std::abs(m(i, j)));
  return s;
}

double norm_one(const ComplexMatrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

bool all_finite(const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

ComplexMatrix as_column(const ComplexVector& v) {
  ComplexMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
  os << dims(m.rows(), m.cols()) << " matrix";
  return os;
}

// ---------------------------------------------------------------------- LU

LuFactorization::LuFactorization(ComplexMatrix a) : lu_(std::move(a)) {
  require(lu_.rows() == lu_.cols(), "LU factorization requires a square matrix");
  require(all_finite(lu_), "LU factorization given non-finite entries");
  const std::size_t n = lu_.rows();
  pivots_.resize(n);
  anorm1_ = norm_one(lu_);

  const double threshold = 1e-13 * max_abs(lu_);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = std::abs(lu_(i, k));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best < threshold || best == 0.0) {
      throw SingularMatrixError("singular matrix: pivot " + std::to_string(k) +
                                " below relative threshold in " + dims(n, n) + " LU");
    }
    pivots_[k] = piv;
    if (piv != k) {
      std::swap_ranges(lu_.row_data(k), lu_.row_data(k) + n, lu_.row_data(piv));
      swap_parity_ = -swap_parity_;
    }
    const Complex inv_piv = Complex(1.0) / lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      lu_(i, k) *= inv_piv;
      const Complex m = lu_(i, k);
      if (m == Complex(0.0)) continue;
      const Complex* rk = lu_.row_data(k);
      Complex* ri = lu_.row_data(i);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= m * rk[j];
    }
  }
}

void LuFactorization::apply_forward_permutation(ComplexMatrix& b) const {
  const std::size_t n = dim();
  for (std::size_t k = 0; k < n; ++k) {
    if (pivots_[k] != k) {
      std::swap_ranges(b.row_data(k), b.row_data(k) + b.cols(), b.row_data(pivots_[k]));
    }
  }
}

ComplexMatrix LuFactorization::solve(const ComplexMatrix& b) const {
  const std::size_t n = dim();
  require(b.rows() == n, "right-hand side rows do not match LU dimension");
  require(all_finite(b), "right-hand side has non-finite entries");
  ComplexMatrix x = b;
  apply_forward_permutation(x);
  const std::size_t nb = x.cols();
  // L (unit lower) forward substitution
  for (std::size_t k = 0; k < n; ++k) {
    const Complex* xk = x.row_data(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex m = lu_(i, k);
      if (m == Complex(0.0)) continue;
      Complex* xi = x.row_data(i);
      for (std::size_t j = 0; j < nb; ++j) xi[j] -= m * xk[j];
    }
  }
  // U back substitution
  for (std::size_t k = n; k-- > 0;) {
    Complex* xk = x.row_data(k);
    const Complex inv = Complex(1.0) / lu_(k, k);
    for (std::size_t j = 0; j < nb; ++j) xk[j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Complex m = lu_(i, k);
      if (m == Complex(0.0)) continue;
      Complex* xi = x.row_data(i);
      for (std::size_t j = 0; j < nb; ++j) xi[j] -= m * xk[j];
    }
  }
  return x;
}

ComplexVector LuFactorization::solve(const ComplexVector& b) const {
  return solve(as_column(b)).column(0);
}

ComplexMatrix LuFactorization::solve_adjoint(const ComplexMatrix& b) const {
  // A = P^T L U, so A^H x = b resolves as U^H w = b, L^H v = w, x = P^T v.
  const std::size_t n = dim();
  require(b.rows() == n, "right-hand side rows do not match LU dimension");
  require(all_finite(b), "right-hand side has non-finite entries");
  ComplexMatrix x = b;
  const std::size_t nb = x.cols();
  // U^H is lower triangular with diagonal conj(U_kk): forward substitution.
  for (std::size_t k = 0; k < n; ++k) {
    Complex* xk = x.row_data(k);
    for (std::size_t j = 0; j < k; ++j) {
      const Complex m = std::conj(lu_(j, k));
      if (m == Complex(0.0)) continue;
      const Complex* xj = x.row_data(j);
      for (std::size_t col = 0; col < nb; ++col) xk[col] -= m * xj[col];
    }
    const Complex inv = Complex(1.0) / std::conj(lu_(k, k));
    for (std::size_t col = 0; col < nb; ++col) xk[col] *= inv;
  }
  // L^H is unit upper triangular: back substitution.
  for (std::size_t k = n; k-- > 0;) {
    Complex* xk = x.row_data(k);
    for (std::size_t j = k + 1; j < n; ++j) {
      const Complex m = std::conj(lu_(j, k));
      if (m == Complex(0.0)) continue;
      const Complex* xj = x.row_data(j);
      for (std::size_t col = 0; col < nb; ++col) xk[col] -= m * xj[col];
    }
  }
  // Undo the pivoting: x = P^T v applies the recorded swaps in reverse.
  for (std::size_t k = n; k-- > 0;) {
    if (pivots_[k] != k) {
      std::swap_ranges(x.row_data(k), x.row_data(k) + nb, x.row_data(pivots_[k]));
    }
  }
  return x;
}

ComplexVector LuFactorization::solve_adjoint(const ComplexVector& b) const {
  return solve_adjoint(as_column(b)).column(0);
}

Complex LuFactorization::determinant() const {
  Complex det = swap_parity_;
  for (std::size_t k = 0; k < dim(); ++k) det *= lu_(k, k);
  return det;
}

double LuFactorization::condition_1norm_estimate() const {
  const std::size_t n = dim();
  if (n == 0) return 0.0;
  ComplexVector x(n);
  for (auto& z : x) z = 1.0 / static_cast<double>(n);
  double est = 0.0;
  std::size_t last_j = n;  // sentinel
  for (int iter = 0; iter < 5; ++iter) {
    const ComplexVector y = solve(x);
    const double e = norm1(y);
    if (iter > 0 && e <= est) break;
    est = e;
    ComplexVector xi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(y[i]);
      xi[i] = m == 0.0 ? Complex(1.0) : y[i] / m;
    }
    const ComplexVector z = solve_adjoint(xi);
    std::size_t j = 0;
    double zmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(z[i]);
      if (m > zmax) {
        zmax = m;
        j = i;
      }
    }
    if (j == last_j) break;
    x = ComplexVector::basis(n, j);
    last_j = j;
  }
  return anorm1_ * est;
}

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  return LuFactorization(a).solve(b);
}

ComplexVector lu_solve(const ComplexMatrix& a, const ComplexVector& b) {
  return LuFactorization(a).solve(b);
}

// ---------------------------------------------------------------------- QR

namespace {

// Compact Householder QR. Reflectors are stored below the diagonal with
// implicit unit leading entry; the R diagonal overwrites the diagonal.
struct HouseholderQr {
  ComplexMatrix a;
  std::vector<double> tau;
};

HouseholderQr qr_factor(ComplexMatrix a, double rel_tol) {
  require(all_finite(a), "QR factorization given non-finite entries");
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  require(r >= c, "QR factorization requires rows >= cols");

  double max_colnorm = 0.0;
  for (std::size_t j = 0; j < c; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < r; ++i) s += std::norm(a(i, j));
    max_colnorm = std::max(max_colnorm, std::sqrt(s));
  }
  if (max_colnorm == 0.0) {
    throw RankDeficientError("rank deficient: zero matrix in QR factorization");
  }
  const double threshold = rel_tol * max_colnorm;

  HouseholderQr qr{std::move(a), std::vector<double>(c, 0.0)};
  ComplexMatrix& m = qr.a;
  for (std::size_t k = 0; k < c; ++k) {
    double sigma2 = 0.0;
    for (std::size_t i = k; i < r; ++i) sigma2 += std::norm(m(i, k));
    const double sigma = std::sqrt(sigma2);
    if (sigma < threshold) {
      throw RankDeficientError("rank deficient: QR diagonal " + std::to_string(k) +
                               " below relative threshold in " + dims(r, c) + " factorization");
    }
    const Complex alpha = m(k, k);
    const double aabs = std::abs(alpha);
    const Complex phase = aabs == 0.0 ? Complex(1.0) : alpha / aabs;
    const Complex beta = -phase * sigma;
    const Complex v0 = alpha - beta;  // |v0| = |alpha| + sigma > 0
    for (std::size_t i = k + 1; i < r; ++i) m(i, k) /= v0;
    qr.tau[k] = (aabs + sigma) / sigma;
    m(k, k) = beta;
    // Apply H = I - tau w w^H (w has unit leading entry) to remaining columns.
    for (std::size_t j = k + 1; j < c; ++j) {
      Complex s = m(k, j);
      for (std::size_t i = k + 1; i < r; ++i) s += std::conj(m(i, k)) * m(i, j);
      s *= qr.tau[k];
      m(k, j) -= s;
      for (std::size_t i = k + 1; i < r; ++i) m(i, j) -= s * m(i, k);
    }
  }
  return qr;
}

// B <- Q^H B (reflectors applied in ascending order).
void apply_q_adjoint(const HouseholderQr& qr, ComplexMatrix& b) {
  const std::size_t r = qr.a.rows();
  const std::size_t c = qr.a.cols();
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = b(k, j);
      for (std::size_t i = k + 1; i < r; ++i) s += std::conj(qr.a(i, k)) * b(i, j);
      s *= qr.tau[k];
      b(k, j) -= s;
      for (std::size_t i = k + 1; i < r; ++i) b(i, j) -= s * qr.a(i, k);
    }
  }
}

// B <- Q B (reflectors applied in descending order).
void apply_q(const HouseholderQr& qr, ComplexMatrix& b) {
  const std::size_t r = qr.a.rows();
  const std::size_t c = qr.a.cols();
  for (std::size_t k = c; k-- > 0;) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = b(k, j);
      for (std::size_t i = k + 1; i < r; ++i) s += std::conj(qr.a(i, k)) * b(i, j);
      s *= qr.tau[k];
      b(k, j) -= s;
      for (std::size_t i = k + 1; i < r; ++i) b(i, j) -= s * qr.a(i, k);
    }
  }
}

}  // namespace

LstsqResult lstsq_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() >= a.cols(), "least-squares solve requires rows >= cols");
  require(a.rows() == b.rows(), "right-hand side rows do not match");
  const HouseholderQr qr = qr_factor(a, 1e-12);
  ComplexMatrix y = b;
  apply_q_adjoint(qr, y);
  const std::size_t c = a.cols();
  ComplexMatrix x(c, b.cols());
  for (std::size_t k = c; k-- > 0;) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = y(k, j);
      for (std::size_t l = k + 1; l < c; ++l) s -= qr.a(k, l) * x(l, j);
      x(k, j) = s / qr.a(k, k);
    }
  }
  const double residual = max_abs(a * x - b);
  return {std::move(x), residual};
}

ComplexMatrix minnorm_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() <= a.cols(), "minimum-norm solve requires rows <= cols");
  require(a.rows() == b.rows(), "right-hand side rows do not match");
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  const HouseholderQr qr = qr_factor(conj_transpose(a), 1e-12);
  // A = R^H Q^H, so solve R^H y = B (lower triangular) and set X = Q [y; 0].
  ComplexMatrix w(c, b.cols());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = b(k, j);
      for (std::size_t l = 0; l < k; ++l) s -= std::conj(qr.a(l, k)) * w(l, j);
      w(k, j) = s / std::conj(qr.a(k, k));
    }
  }
  apply_q(qr, w);
  return w;
}

}  // namespace cradjoint
