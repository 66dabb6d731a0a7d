#pragma once

#include <random>

#include "cradjoint/linalg.hpp"

namespace testsup {

using cradjoint::Complex;
using cradjoint::ComplexMatrix;
using cradjoint::ComplexVector;

// Platform-stable uniform draw in [lo, hi).
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

inline Complex rand_complex(std::mt19937_64& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

inline ComplexVector rand_vector(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  ComplexVector v(n);
  for (auto& z : v) z = rand_complex(rng, scale);
  return v;
}

inline ComplexMatrix rand_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                                 double scale = 1.0) {
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_complex(rng, scale);
  return m;
}

// Random square matrix kept well conditioned by a dominant diagonal shift.
inline ComplexMatrix rand_well_conditioned(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix m = rand_matrix(rng, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += Complex(static_cast<double>(n), 0.0);
  return m;
}

inline double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
  return s;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return cradjoint::max_abs(a - b);
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
  return s;
}

inline double max_abs(const std::vector<double>& a) {
  double s = 0.0;
  for (double x : a) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace testsup
