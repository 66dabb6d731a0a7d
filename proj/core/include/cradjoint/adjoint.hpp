#pragma once

#include <utility>
#include <vector>

#include "cradjoint/linalg.hpp"
#include "cradjoint/wirtinger.hpp"

namespace cradjoint {

/// The reduced solve for state-holomorphic constraints was given a nonzero
/// conjugate-state Jacobian.
class NotHolomorphicInStateError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The four Wirtinger Jacobians of a constraint g(x, p) at a point:
/// derivatives in the state, the conjugate state, the parameter, and the
/// conjugate parameter. All four share the constraint dimension q; the state
/// pair shares n columns and the parameter pair m columns. Note that d1g and
/// conj(d1cg) differ in general: g need not map to real values.
struct WirtingerPartials {
  ComplexMatrix d1g;   // q x n
  ComplexMatrix d1cg;  // q x n
  ComplexMatrix d2g;   // q x m
  ComplexMatrix d2cg;  // q x m

  std::size_t constraint_dim() const { return d1g.rows(); }
  std::size_t state_dim() const { return d1g.cols(); }
  std::size_t param_dim() const { return d2g.cols(); }
};

/// Gradients of a real-valued cost f(x, p) in its two slots. The gradient in
/// the conjugate state is not stored: for real-valued costs it equals
/// conj(g1).
struct CostGradients {
  ComplexVector g1;  // n, gradient in the state
  ComplexVector g2;  // m, gradient in the parameter
};

/// Solution of the coupled sensitivity system: derivatives of the state and
/// of the conjugate state in the parameter.
struct StateSensitivities {
  ComplexMatrix dxdp;     // n x m
  ComplexMatrix dxbardp;  // n x m
};

/// Multipliers of the Lagrangian formulation. For real-valued costs and
/// consistent systems, lam1 equals conj(lam2) up to solver tolerance.
struct AdjointVariables {
  ComplexVector lam1;  // q
  ComplexVector lam2;  // q
};

enum class GradientPath {
  GeneralDirect,     // sensitivity block solve, gradient assembled directly
  GeneralAdjoint,    // multiplier solve with the conjugate-transposed block
  HoloInX,           // constraint holomorphic in the state: block-diagonal solves
  FullyHolo,         // additionally holomorphic in the parameter: single solve
  LinearConstraint,  // g = A(p) x - b with x holomorphic in p: one adjoint solve
};

const char* to_string(GradientPath path);

/// A computed parameter gradient plus solver diagnostics.
struct GradientReport {
  ComplexVector grad;  // m
  GradientPath path = GradientPath::GeneralDirect;
  double block_residual = 0.0;  // max-abs residual of the linear solve(s)
  TangentSpaceKind tangent_kind = TangentSpaceKind::ComplexHilbert;
  double condition_estimate = 0.0;  // 1-norm estimate of the square solve; 0 when not estimated
  bool ill_conditioned = false;     // condition_estimate > 1e10
  bool conjugate_pair_violation = false;
};

/// Assemble the coupled sensitivity system
///   M = [[d1g, d1cg], [conj(d1cg), conj(d1g)]]   (2q x 2n)
///   rhs = -[d2g; conj(d2cg)]                      (2q x m)
/// whose solution stacks dxdp over dxbardp.
std::pair<ComplexMatrix, ComplexMatrix> assemble_block(const WirtingerPartials& parts);

/// Solve the coupled sensitivity system. Square systems go through LU;
/// overdetermined consistent systems through least squares with a residual
/// gate of 1e-8 * max|rhs| (InconsistentSystemError beyond it).
StateSensitivities solve_sensitivities(const WirtingerPartials& parts);

/// Solve the multiplier system M^H [lam1; lam2] = [g1; conj(g1)].
/// Underdetermined systems take the minimum-norm solution.
AdjointVariables solve_adjoint_variables(const WirtingerPartials& parts, const CostGradients& cg);

bool conjugate_pair_violated(const AdjointVariables& vars, double rel_tol = 1e-8);

/// grad = (dxdp)^H g1 + (dxbardp)^H conj(g1) + g2, with the real part taken
/// when the parameter space is real.
GradientReport gradient_general(const WirtingerPartials& parts, const CostGradients& cg,
                                TangentSpaceKind kind);

/// Multiplier route to the same gradient:
/// grad = (-[d2g; conj(d2cg)])^H [lam1; lam2] + g2.
GradientReport gradient_adjoint_path(const WirtingerPartials& parts, const CostGradients& cg,
                                     TangentSpaceKind kind);

/// Reduced path for constraints holomorphic in the state (d1cg identically
/// zero): two block-diagonal solves, or one when d2cg is also zero.
GradientReport gradient_holo_x(const WirtingerPartials& parts, const CostGradients& cg,
                               TangentSpaceKind kind);

/// Reduced path for g = A(p) x - b with x holomorphic in p: one adjoint solve
/// A^H lambda = g1, then grad = -(dAxdp)^H lambda + g2.
GradientReport gradient_linear(const ComplexMatrix& a, const ComplexMatrix& daxdp,
                               const CostGradients& cg, TangentSpaceKind kind);

/// Real coordinates of a report gradient: Re(grad) for real tangent spaces,
/// realify(grad) for complex ones.
std::vector<double> realified_gradient(const GradientReport& report);

}  // namespace cradjoint
