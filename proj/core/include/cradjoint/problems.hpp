#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cradjoint/adjoint.hpp"

namespace cradjoint {

/// An equality constraint g(x, p) = 0 that determines a unique state x for
/// each admissible parameter p, together with its Wirtinger Jacobians.
class ConstraintProblem {
 public:
  virtual ~ConstraintProblem() = default;

  virtual std::string name() const = 0;
  virtual std::size_t state_dim() const = 0;
  virtual std::size_t param_dim() const = 0;
  virtual std::size_t constraint_dim() const = 0;
  virtual TangentSpaceKind tangent_kind() const = 0;

  /// The state x(p) with ||g(x, p)||_inf at solver precision.
  virtual ComplexVector solve_state(const ComplexVector& p) const = 0;
  /// Constraint residual g(x, p).
  virtual ComplexVector constraint(const ComplexVector& x, const ComplexVector& p) const = 0;
  virtual WirtingerPartials partials(const ComplexVector& x, const ComplexVector& p) const = 0;

  /// Problem-specific reduced gradient formula, when one applies.
  virtual std::optional<GradientReport> special_gradient(const ComplexVector& x,
                                                         const ComplexVector& p,
                                                         const CostGradients& cg) const {
    (void)x;
    (void)p;
    (void)cg;
    return std::nullopt;
  }
};

/// A real-valued cost of the state and the parameter.
class CostProblem {
 public:
  virtual ~CostProblem() = default;
  virtual double value(const ComplexVector& x, const ComplexVector& p) const = 0;
  virtual CostGradients gradients(const ComplexVector& x, const ComplexVector& p) const = 0;
};

/// Total cost p -> f(x(p), p).
double cost_at(const ConstraintProblem& constraint, const CostProblem& cost, const ComplexVector& p);

GradientReport gradient_direct_at(const ConstraintProblem& constraint, const CostProblem& cost,
                                  const ComplexVector& p);
GradientReport gradient_adjoint_at(const ConstraintProblem& constraint, const CostProblem& cost,
                                   const ComplexVector& p);
std::optional<GradientReport> gradient_special_at(const ConstraintProblem& constraint,
                                                  const CostProblem& cost, const ComplexVector& p);
/// The problem's reduced path when it has one, the direct path otherwise.
GradientReport gradient_auto_at(const ConstraintProblem& constraint, const CostProblem& cost,
                                const ComplexVector& p);

// ----------------------------------------------------------------------
// Example 1: linear constraint A(p) z = b with two real parameters and three
// complex states; cost |z|^2. A(p) is polynomial in p, so the constraint is
// holomorphic in both slots and the one-solve linear path applies.

ComplexMatrix ex1_matrix(double p1, double p2);
ComplexVector ex1_rhs();
/// d(A(p) z)/dp, columns for p1 and p2.
ComplexMatrix ex1_dAzdp(double p1, double p2, const ComplexVector& z);

class Example1Problem final : public ConstraintProblem, public CostProblem {
 public:
  std::string name() const override { return "ex1"; }
  std::size_t state_dim() const override { return 3; }
  std::size_t param_dim() const override { return 2; }
  std::size_t constraint_dim() const override { return 3; }
  TangentSpaceKind tangent_kind() const override { return TangentSpaceKind::RealHilbert; }

  ComplexVector solve_state(const ComplexVector& p) const override;
  ComplexVector constraint(const ComplexVector& x, const ComplexVector& p) const override;
  WirtingerPartials partials(const ComplexVector& x, const ComplexVector& p) const override;
  std::optional<GradientReport> special_gradient(const ComplexVector& x, const ComplexVector& p,
                                                 const CostGradients& cg) const override;

  double value(const ComplexVector& x, const ComplexVector& p) const override;
  CostGradients gradients(const ComplexVector& x, const ComplexVector& p) const override;
};

// ----------------------------------------------------------------------
// Example 2: one complex parameter entering A(p) only through Re p, Im p and
// |p|^2, so the constraint is holomorphic in neither the state nor the
// parameter. The real 3-vector v = A(p)^{-1} b is packed into two complex
// states z = (v1 + i v2, v3); cost |z1|^2 + |z2|^2. The sensitivity block is
// 6x4 and the multiplier system 4x6.

ComplexMatrix ex2_matrix(Complex p);
ComplexVector ex2_rhs();
WirtingerPartials ex2_partials(const ComplexVector& z, Complex p);

class Example2Problem final : public ConstraintProblem, public CostProblem {
 public:
  std::string name() const override { return "ex2"; }
  std::size_t state_dim() const override { return 2; }
  std::size_t param_dim() const override { return 1; }
  std::size_t constraint_dim() const override { return 3; }
  TangentSpaceKind tangent_kind() const override { return TangentSpaceKind::ComplexHilbert; }

  ComplexVector solve_state(const ComplexVector& p) const override;
  ComplexVector constraint(const ComplexVector& x, const ComplexVector& p) const override;
  WirtingerPartials partials(const ComplexVector& x, const ComplexVector& p) const override;

  double value(const ComplexVector& x, const ComplexVector& p) const override;
  CostGradients gradients(const ComplexVector& x, const ComplexVector& p) const override;
};

// ----------------------------------------------------------------------
// Example 3: 1-D Helmholtz equation -u'' - k^2 u = sin(2 pi x) on [0, 1]
// with Neumann data u'(0) = i p and u'(1) = conj(p)^3 for one complex
// parameter p. Discretized with second-order central stencils inside and
// one-sided second-order stencils for the boundary rows.

struct HelmholtzGrid {
  std::size_t resolution = 120;  // system dimension is resolution + 2
  double k2 = 4.0;

  double spacing() const { return 1.0 / static_cast<double>(resolution + 1); }
  std::size_t dim() const { return resolution + 2; }
  double node(std::size_t j) const {
    return static_cast<double>(j) / static_cast<double>(resolution + 1);
  }
};

/// Stiffness-like matrix; depends on the grid and k^2 only.
ComplexMatrix helmholtz_matrix(const HelmholtzGrid& grid);
/// Right-hand side; p enters only the first and last entries.
ComplexVector helmholtz_rhs(const HelmholtzGrid& grid, Complex p);
std::pair<ComplexMatrix, ComplexVector> helmholtz_assemble(const HelmholtzGrid& grid, Complex p);

struct HelmholtzCostEval {
  double value;
  ComplexVector g1;  // gradient in the state, nonzero only at the endpoints
};

/// f(u) = |u(0) - target0|^2 + |u(1) - target1|^2.
HelmholtzCostEval helmholtz_cost(const ComplexVector& u, Complex target0, Complex target1);

class HelmholtzProblem final : public ConstraintProblem, public CostProblem {
 public:
  HelmholtzProblem(HelmholtzGrid grid, Complex target0, Complex target1);

  /// Build a problem whose endpoint targets come from a solve on a finer
  /// grid at the given true parameter, so the inversion grid never
  /// manufactures its own data. truth_resolution == resolution is allowed
  /// (targets then match this grid's solution exactly).
  static HelmholtzProblem with_generated_targets(std::size_t resolution,
                                                 std::size_t truth_resolution, double k2,
                                                 Complex p_true);

  std::string name() const override { return "helmholtz"; }
  std::size_t state_dim() const override { return grid_.dim(); }
  std::size_t param_dim() const override { return 1; }
  std::size_t constraint_dim() const override { return grid_.dim(); }
  TangentSpaceKind tangent_kind() const override { return TangentSpaceKind::ComplexHilbert; }

  ComplexVector solve_state(const ComplexVector& p) const override;
  ComplexVector constraint(const ComplexVector& x, const ComplexVector& p) const override;
  WirtingerPartials partials(const ComplexVector& x, const ComplexVector& p) const override;
  std::optional<GradientReport> special_gradient(const ComplexVector& x, const ComplexVector& p,
                                                 const CostGradients& cg) const override;

  double value(const ComplexVector& x, const ComplexVector& p) const override;
  CostGradients gradients(const ComplexVector& x, const ComplexVector& p) const override;

  const HelmholtzGrid& grid() const { return grid_; }
  Complex target0() const { return target0_; }
  Complex target1() const { return target1_; }

 private:
  HelmholtzGrid grid_;
  Complex target0_;
  Complex target1_;
  ComplexMatrix a_;
  LuFactorization lu_;  // the matrix is parameter independent, factor once
};

}  // namespace cradjoint
