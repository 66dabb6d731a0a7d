#include "cradjoint/wirtinger.hpp"

#include <stdexcept>

namespace cradjoint {

ComplexVector grad_from_partial(const ComplexVector& dfdz) {
  ComplexVector g(dfdz.size());
  for (std::size_t i = 0; i < dfdz.size(); ++i) g[i] = 2.0 * std::conj(dfdz[i]);
  return g;
}

double directional_derivative(const ComplexVector& grad, const ComplexVector& v) {
  if (grad.size() != v.size()) {
    throw std::invalid_argument("directional_derivative: dimension mismatch");
  }
  return inner(grad, v).real();
}

std::vector<double> realify(const ComplexVector& grad) {
  const std::size_t n = grad.size();
  std::vector<double> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = grad[i].real();
    out[n + i] = grad[i].imag();
  }
  return out;
}

ComplexVector project_real(const ComplexVector& grad) {
  ComplexVector out(grad.size());
  for (std::size_t i = 0; i < grad.size(); ++i) out[i] = Complex(grad[i].real(), 0.0);
  return out;
}

}  // namespace cradjoint
