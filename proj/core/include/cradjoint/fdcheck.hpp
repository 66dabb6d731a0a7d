#pragma once

#include <functional>
#include <vector>

#include "cradjoint/linalg.hpp"
#include "cradjoint/wirtinger.hpp"

namespace cradjoint {

/// A probed evaluation returned NaN or Inf.
class NonFiniteEvaluationError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Central-difference configuration. The step default balances truncation
/// against roundoff for O(1)-scaled problems; relative_tol is the comparison
/// tolerance callers use when checking gradients against this oracle.
struct FdConfig {
  double step = 1e-6;
  double relative_tol = 1e-5;
};

/// Central-difference total gradient of a real-valued function of the
/// parameter point. For a real tangent space the result has one entry per
/// parameter (d/dRe p_k). For a complex tangent space it has 2m entries laid
/// out as [d/dRe p_0 .. d/dRe p_{m-1}, d/dIm p_0 .. d/dIm p_{m-1}], matching
/// realify() of the exact gradient.
std::vector<double> fd_total_gradient(const std::function<double(const ComplexVector&)>& eval,
                                      const ComplexVector& at, TangentSpaceKind kind,
                                      const FdConfig& cfg = {});

struct WirtingerJacobians {
  ComplexMatrix dz;     // d map / d z
  ComplexMatrix dzbar;  // d map / d conj(z)
};

/// Central-difference Wirtinger Jacobians of a vector-valued map, columnwise:
/// d/dz = (d/dx - i d/dy)/2 and d/dzbar = (d/dx + i d/dy)/2 per coordinate.
WirtingerJacobians fd_wirtinger_jacobian(const std::function<ComplexVector(const ComplexVector&)>& map,
                                         const ComplexVector& at, const FdConfig& cfg = {});

}  // namespace cradjoint
