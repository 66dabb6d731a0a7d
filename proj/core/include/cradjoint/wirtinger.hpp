#pragma once

#include <vector>

#include "cradjoint/linalg.hpp"

namespace cradjoint {

/// Tangent-space flavour of a parameter domain. Gradients over a real
/// Hilbert space carry exactly zero imaginary part.
enum class TangentSpaceKind { RealHilbert, ComplexHilbert };

// Fixed inner-product convention of the library:
//   <a, b> = sum_k a_k conj(b_k)   (conjugate-linear in the second slot).
// With this convention the gradient of a real-valued cost is
// grad f = 2 conj(df/dz), and Re<grad f, v> is the directional derivative.

/// grad f = 2 conj(df/dz) for a real-valued f of complex arguments.
ComplexVector grad_from_partial(const ComplexVector& dfdz);

/// Real directional derivative Re<grad, v> of a real-valued function.
double directional_derivative(const ComplexVector& grad, const ComplexVector& v);

/// Lossless real representation [Re(grad); Im(grad)]. For any direction v,
/// directional_derivative(grad, v) equals the dot product of realify(grad)
/// with [Re(v); Im(v)].
std::vector<double> realify(const ComplexVector& grad);

/// Elementwise real part with exactly-zero imaginary part. Applied last to
/// gradients over real parameter spaces.
ComplexVector project_real(const ComplexVector& grad);

}  // namespace cradjoint
