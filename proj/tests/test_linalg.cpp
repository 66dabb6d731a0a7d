#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cradjoint/linalg.hpp"
#include "support.hpp"

using namespace cradjoint;
using testsup::max_abs_diff;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("lu_solve on the identity returns the right-hand side") {
  std::mt19937_64 rng(11);
  const ComplexMatrix b = testsup::rand_matrix(rng, 3, 2);
  const ComplexMatrix x = lu_solve(ComplexMatrix::identity(3), b);
  CHECK(max_abs_diff(x, b) == 0.0);
}

TEST_CASE("lu_solve handles a 1x1 complex system") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{2.0 * kI}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{4.0}});
  const ComplexMatrix x = lu_solve(a, b);
  CHECK(std::abs(x(0, 0) - Complex(0.0, -2.0)) < 1e-15);
}

TEST_CASE("lu_solve multiply-back residual on random well-conditioned systems") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = testsup::rand_well_conditioned(rng, 8);
    const ComplexMatrix b = testsup::rand_matrix(rng, 8, 3);
    const ComplexMatrix x = lu_solve(a, b);
    CHECK(max_abs(a * x - b) <= 1e-12 * max_abs(b));
  }
}

TEST_CASE("lu_solve rejects singular matrices") {
  ComplexMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = 2.0;
  a(1, 1) = 4.0;
  CHECK_THROWS_AS(lu_solve(a, ComplexMatrix::identity(2)), SingularMatrixError);
  CHECK_THROWS_AS(lu_solve(ComplexMatrix(3, 3), ComplexMatrix::identity(3)), SingularMatrixError);
}

TEST_CASE("LuFactorization solve_adjoint solves the conjugate-transposed system") {
  std::mt19937_64 rng(31);
  const ComplexMatrix a = testsup::rand_well_conditioned(rng, 6);
  const ComplexVector b = testsup::rand_vector(rng, 6);
  const LuFactorization lu(a);
  const ComplexVector x = lu.solve_adjoint(b);
  CHECK(norm_inf(conj_transpose(a) * x - b) < 1e-12 * norm_inf(b));
}

TEST_CASE("LuFactorization determinant matches cofactor expansion on a 2x2") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{Complex(1, 1), 2.0}, {3.0, Complex(0, -1)}});
  const Complex expected = Complex(1, 1) * Complex(0, -1) - Complex(6, 0);
  CHECK(std::abs(LuFactorization(a).determinant() - expected) < 1e-14);
}

TEST_CASE("condition estimate is exact on diagonal matrices and a sound lower bound") {
  ComplexMatrix d(3, 3);
  d(0, 0) = 10.0;
  d(1, 1) = 1.0;
  d(2, 2) = 0.1;
  // kappa_1 of a diagonal matrix is max|d| / min|d|.
  CHECK(LuFactorization(d).condition_1norm_estimate() == doctest::Approx(100.0));

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = testsup::rand_well_conditioned(rng, 7);
    const LuFactorization lu(a);
    // Exact inverse 1-norm via solves against the identity columns.
    const ComplexMatrix inv = lu.solve(ComplexMatrix::identity(7));
    const double exact = norm_one(a) * norm_one(inv);
    const double est = lu.condition_1norm_estimate();
    CHECK(est <= exact * (1.0 + 1e-10));
    CHECK(est >= 0.1 * exact);
  }
}

TEST_CASE("lstsq_solve agrees with lu_solve on square nonsingular systems") {
  std::mt19937_64 rng(53);
  const ComplexMatrix a = testsup::rand_well_conditioned(rng, 5);
  const ComplexMatrix b = testsup::rand_matrix(rng, 5, 2);
  const auto [x, residual] = lstsq_solve(a, b);
  CHECK(max_abs_diff(x, lu_solve(a, b)) < 1e-12);
  CHECK(residual < 1e-12);
}

TEST_CASE("lstsq_solve reproduces the hand-computed normal-equations solution") {
  // A = [1; 1], b = [1; 3]: minimizer 2, residual vector [1, -1].
  const ComplexMatrix a = ComplexMatrix::from_rows({{1.0}, {1.0}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{1.0}, {3.0}});
  const auto [x, residual] = lstsq_solve(a, b);
  CHECK(std::abs(x(0, 0) - Complex(2.0)) < 1e-14);
  CHECK(residual == doctest::Approx(1.0));
}

TEST_CASE("lstsq_solve recovers the generator of a consistent overdetermined system") {
  std::mt19937_64 rng(61);
  const ComplexMatrix a = testsup::rand_matrix(rng, 7, 4);
  const ComplexMatrix x0 = testsup::rand_matrix(rng, 4, 2);
  const auto [x, residual] = lstsq_solve(a, a * x0);
  CHECK(max_abs_diff(x, x0) < 1e-12);
  CHECK(residual <= 1e-12);
}

TEST_CASE("lstsq_solve rejects rank-deficient inputs") {
  ComplexMatrix a(3, 2);
  a(0, 0) = 1.0;
  a(1, 0) = 1.0;
  a(2, 0) = 1.0;  // second column identically zero
  CHECK_THROWS_AS(lstsq_solve(a, ComplexMatrix(3, 1)), RankDeficientError);
}

TEST_CASE("minnorm_solve agrees with lu_solve on square systems") {
  std::mt19937_64 rng(71);
  const ComplexMatrix a = testsup::rand_well_conditioned(rng, 5);
  const ComplexMatrix b = testsup::rand_matrix(rng, 5, 2);
  CHECK(max_abs_diff(minnorm_solve(a, b), lu_solve(a, b)) < 1e-12);
}

TEST_CASE("minnorm_solve picks the symmetric point of x1 + x2 = 2") {
  const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 1.0}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{2.0}});
  const ComplexMatrix x = minnorm_solve(a, b);
  CHECK(std::abs(x(0, 0) - Complex(1.0)) < 1e-14);
  CHECK(std::abs(x(1, 0) - Complex(1.0)) < 1e-14);
}

TEST_CASE("minnorm_solve solves wide systems exactly and lands in the row space") {
  std::mt19937_64 rng(83);
  const ComplexMatrix a = testsup::rand_matrix(rng, 3, 5);
  const ComplexMatrix b = testsup::rand_matrix(rng, 3, 2);
  const ComplexMatrix x = minnorm_solve(a, b);
  CHECK(max_abs(a * x - b) <= 1e-12 * std::max(1.0, max_abs(b)));
  // Second route to the minimum-norm solution: A^H (A A^H)^{-1} B.
  const ComplexMatrix gram = a * conj_transpose(a);
  const ComplexMatrix x_ref = conj_transpose(a) * lu_solve(gram, b);
  CHECK(max_abs_diff(x, x_ref) < 1e-10);
}

TEST_CASE("conj_transpose basic identities") {
  const ComplexMatrix single = ComplexMatrix::from_rows({{kI}});
  CHECK(conj_transpose(single)(0, 0) == Complex(0.0, -1.0));

  const ComplexMatrix sym = ComplexMatrix::from_rows({{1.0, 2.0}, {2.0, 5.0}});
  CHECK(max_abs_diff(conj_transpose(sym), sym) == 0.0);

  std::mt19937_64 rng(97);
  const ComplexMatrix a = testsup::rand_matrix(rng, 3, 4);
  const ComplexMatrix b = testsup::rand_matrix(rng, 4, 2);
  CHECK(max_abs_diff(conj_transpose(a * b), conj_transpose(b) * conj_transpose(a)) < 1e-14);
  // Involution holds exactly.
  CHECK(max_abs_diff(conj_transpose(conj_transpose(a)), a) == 0.0);
}

TEST_CASE("solver residuals stay small over a range of conditionings") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix a = testsup::rand_matrix(rng, 6, 6);
    for (std::size_t i = 0; i < 6; ++i) a(i, i) += Complex(2.0 + 4.0 * trial, 0.0);
    const LuFactorization lu(a);
    if (lu.condition_1norm_estimate() > 1e6) continue;
    const ComplexMatrix b = testsup::rand_matrix(rng, 6, 2);
    const ComplexMatrix x = lu.solve(b);
    CHECK(max_abs(a * x - b) / max_abs(b) <= 1e-10);
  }
}

TEST_CASE("vector helpers: basis, segment, norms, inner product") {
  const ComplexVector e = ComplexVector::basis(4, 2);
  CHECK(e[2] == Complex(1.0));
  CHECK(norm1(e) == 1.0);

  const ComplexVector v{Complex(3, 4), Complex(0, 1)};
  CHECK(norm_inf(v) == doctest::Approx(5.0));
  CHECK(norm2(v) == doctest::Approx(std::sqrt(26.0)));
  CHECK(v.segment(1, 1)[0] == Complex(0, 1));

  // <a, b> is conjugate-linear in the second slot.
  const ComplexVector a{kI};
  const ComplexVector b{1.0};
  CHECK(inner(a, b) == kI);
  CHECK(inner(b, a) == -kI);
}

TEST_CASE("non-finite inputs are rejected by the factorizations") {
  ComplexMatrix a = ComplexMatrix::identity(2);
  a(0, 1) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  CHECK_THROWS_AS(LuFactorization{a}, std::invalid_argument);
}
