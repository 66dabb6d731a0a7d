#include "cradjoint/fdcheck.hpp"

#include <cmath>

namespace cradjoint {

namespace {

double checked_eval(const std::function<double(const ComplexVector&)>& eval, const ComplexVector& p) {
  const double v = eval(p);
  if (!std::isfinite(v)) throw NonFiniteEvaluationError("non-finite cost evaluation in FD probe");
  return v;
}

ComplexVector checked_eval_vec(const std::function<ComplexVector(const ComplexVector&)>& map,
                               const ComplexVector& p) {
  ComplexVector v = map(p);
  if (!all_finite(v)) throw NonFiniteEvaluationError("non-finite map evaluation in FD probe");
  return v;
}

}  // namespace

std::vector<double> fd_total_gradient(const std::function<double(const ComplexVector&)>& eval,
                                      const ComplexVector& at, TangentSpaceKind kind,
                                      const FdConfig& cfg) {
  const std::size_t m = at.size();
  const double h = cfg.step;
  const bool complex_domain = kind == TangentSpaceKind::ComplexHilbert;
  std::vector<double> grad(complex_domain ? 2 * m : m, 0.0);

  for (std::size_t k = 0; k < m; ++k) {
    ComplexVector plus = at;
    ComplexVector minus = at;
    plus[k] += h;
    minus[k] -= h;
    grad[k] = (checked_eval(eval, plus) - checked_eval(eval, minus)) / (2.0 * h);
    if (complex_domain) {
      plus = at;
      minus = at;
      plus[k] += Complex(0.0, h);
      minus[k] -= Complex(0.0, h);
      grad[m + k] = (checked_eval(eval, plus) - checked_eval(eval, minus)) / (2.0 * h);
    }
  }
  return grad;
}

WirtingerJacobians fd_wirtinger_jacobian(const std::function<ComplexVector(const ComplexVector&)>& map,
                                         const ComplexVector& at, const FdConfig& cfg) {
  const std::size_t n = at.size();
  const double h = cfg.step;
  ComplexVector probe = at;
  const ComplexVector base = checked_eval_vec(map, probe);
  const std::size_t q = base.size();

  WirtingerJacobians jac{ComplexMatrix(q, n), ComplexMatrix(q, n)};
  for (std::size_t k = 0; k < n; ++k) {
    ComplexVector plus = at;
    ComplexVector minus = at;
    plus[k] += h;
    minus[k] -= h;
    const ComplexVector gx = (1.0 / (2.0 * h)) * (checked_eval_vec(map, plus) - checked_eval_vec(map, minus));
    plus = at;
    minus = at;
    plus[k] += Complex(0.0, h);
    minus[k] -= Complex(0.0, h);
    const ComplexVector gy = (1.0 / (2.0 * h)) * (checked_eval_vec(map, plus) - checked_eval_vec(map, minus));
    for (std::size_t i = 0; i < q; ++i) {
      jac.dz(i, k) = 0.5 * (gx[i] - Complex(0.0, 1.0) * gy[i]);
      jac.dzbar(i, k) = 0.5 * (gx[i] + Complex(0.0, 1.0) * gy[i]);
    }
  }
  return jac;
}

}  // namespace cradjoint
