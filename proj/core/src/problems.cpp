#include "cradjoint/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cradjoint {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_param_dim(const ConstraintProblem& problem, const ComplexVector& p) {
  if (p.size() != problem.param_dim()) {
    throw std::invalid_argument(problem.name() + ": parameter dimension mismatch");
  }
}

}  // namespace

double cost_at(const ConstraintProblem& constraint, const CostProblem& cost,
               const ComplexVector& p) {
  const ComplexVector x = constraint.solve_state(p);
  return cost.value(x, p);
}

GradientReport gradient_direct_at(const ConstraintProblem& constraint, const CostProblem& cost,
                                  const ComplexVector& p) {
  const ComplexVector x = constraint.solve_state(p);
  return gradient_general(constraint.partials(x, p), cost.gradients(x, p),
                          constraint.tangent_kind());
}

GradientReport gradient_adjoint_at(const ConstraintProblem& constraint, const CostProblem& cost,
                                   const ComplexVector& p) {
  const ComplexVector x = constraint.solve_state(p);
  return gradient_adjoint_path(constraint.partials(x, p), cost.gradients(x, p),
                               constraint.tangent_kind());
}

std::optional<GradientReport> gradient_special_at(const ConstraintProblem& constraint,
                                                  const CostProblem& cost,
                                                  const ComplexVector& p) {
  const ComplexVector x = constraint.solve_state(p);
  return constraint.special_gradient(x, p, cost.gradients(x, p));
}

GradientReport gradient_auto_at(const ConstraintProblem& constraint, const CostProblem& cost,
                                const ComplexVector& p) {
  const ComplexVector x = constraint.solve_state(p);
  const CostGradients cg = cost.gradients(x, p);
  if (auto special = constraint.special_gradient(x, p, cg)) return *special;
  return gradient_general(constraint.partials(x, p), cg, constraint.tangent_kind());
}

// ------------------------------------------------------------- Example 1

ComplexMatrix ex1_matrix(double p1, double p2) {
  return ComplexMatrix::from_rows({
      {1.0 - p2 * p2, 5.0 * p1 * p1 - 2.0 * p2 * p2, 4.0 * (p2 - p1)},
      {0.0, 1.0 - 0.1 * p1 * p1, -50.0 * p2 * p2},
      {0.1 * p1 * p2, p2 * p2 + p1 * p1, 1.0 - 0.75 * (p1 + p2)},
  });
}

ComplexVector ex1_rhs() { return {0.0, 0.5, Complex(0.5, -0.5)}; }

ComplexMatrix ex1_dAzdp(double p1, double p2, const ComplexVector& z) {
  if (z.size() != 3) throw std::invalid_argument("ex1_dAzdp expects a 3-vector state");
  const Complex z1 = z[0], z2 = z[1], z3 = z[2];
  ComplexMatrix d(3, 2);
  d(0, 0) = 10.0 * p1 * z2 - 4.0 * z3;
  d(1, 0) = -0.2 * p1 * z2;
  d(2, 0) = 0.1 * p2 * z1 + 2.0 * p1 * z2 - 0.75 * z3;
  // Differentiating the (0,0) entry 1 - p2^2 gives -2 p2 z1 here.
  d(0, 1) = -2.0 * p2 * z1 - 4.0 * p2 * z2 + 4.0 * z3;
  d(1, 1) = -100.0 * p2 * z3;
  d(2, 1) = 0.1 * p1 * z1 + 2.0 * p2 * z2 - 0.75 * z3;
  return d;
}

ComplexVector Example1Problem::solve_state(const ComplexVector& p) const {
  check_param_dim(*this, p);
  return lu_solve(ex1_matrix(p[0].real(), p[1].real()), ex1_rhs());
}

ComplexVector Example1Problem::constraint(const ComplexVector& x, const ComplexVector& p) const {
  check_param_dim(*this, p);
  return ex1_matrix(p[0].real(), p[1].real()) * x - ex1_rhs();
}

WirtingerPartials Example1Problem::partials(const ComplexVector& x, const ComplexVector& p) const {
  check_param_dim(*this, p);
  WirtingerPartials parts;
  parts.d1g = ex1_matrix(p[0].real(), p[1].real());
  parts.d1cg = ComplexMatrix(3, 3);
  parts.d2g = ex1_dAzdp(p[0].real(), p[1].real(), x);
  parts.d2cg = ComplexMatrix(3, 2);
  return parts;
}

std::optional<GradientReport> Example1Problem::special_gradient(const ComplexVector& x,
                                                                const ComplexVector& p,
                                                                const CostGradients& cg) const {
  return gradient_linear(ex1_matrix(p[0].real(), p[1].real()),
                         ex1_dAzdp(p[0].real(), p[1].real(), x), cg, tangent_kind());
}

double Example1Problem::value(const ComplexVector& x, const ComplexVector&) const {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return s;
}

CostGradients Example1Problem::gradients(const ComplexVector& x, const ComplexVector&) const {
  CostGradients cg;
  cg.g1 = 2.0 * ComplexVector(x);
  cg.g2 = ComplexVector(2);
  return cg;
}

// ------------------------------------------------------------- Example 2

ComplexMatrix ex2_matrix(Complex p) {
  const double re = p.real();
  const double im = p.imag();
  const double abs2 = std::norm(p);
  return ComplexMatrix::from_rows({
      {1.0 - im * im, 5.0 * re * re - 2.0 * im * im, 4.0 * (im - re)},
      {0.0, 1.0 - 0.1 * re * re, -50.0 * im * im},
      {0.1 * im * re, abs2, 1.0 - 0.75 * (im + re)},
  });
}

ComplexVector ex2_rhs() { return {0.0, 0.5, 0.5}; }

namespace {

// Entrywise derivative of ex2's matrix given the derivatives of Re p, Im p
// and |p|^2 in the chosen direction (p or conj p).
ComplexMatrix ex2_matrix_derivative(Complex p, Complex dre, Complex dim, Complex dabs2) {
  const double re = p.real();
  const double im = p.imag();
  ComplexMatrix d(3, 3);
  d(0, 0) = -2.0 * im * dim;
  d(0, 1) = 10.0 * re * dre - 4.0 * im * dim;
  d(0, 2) = 4.0 * (dim - dre);
  d(1, 0) = 0.0;
  d(1, 1) = -0.2 * re * dre;
  d(1, 2) = -100.0 * im * dim;
  d(2, 0) = 0.1 * (dim * re + im * dre);
  d(2, 1) = dabs2;
  d(2, 2) = -0.75 * (dim + dre);
  return d;
}

// Real 3-vector packing of the two complex states.
ComplexVector ex2_pack(const ComplexVector& z) {
  const Complex z1 = z[0], z2 = z[1];
  return {0.5 * (z1 + std::conj(z1)), (z1 - std::conj(z1)) / (2.0 * kI), z2};
}

}  // namespace

WirtingerPartials ex2_partials(const ComplexVector& z, Complex p) {
  if (z.size() != 2) throw std::invalid_argument("ex2_partials expects a 2-vector state");
  const ComplexMatrix a = ex2_matrix(p);

  WirtingerPartials parts;
  // State Jacobians through the packing (v1, v2, v3) = ((z1+cz1)/2, (z1-cz1)/2i, z2).
  parts.d1g = ComplexMatrix(3, 2);
  parts.d1cg = ComplexMatrix(3, 2);
  const Complex half(0.5, 0.0);
  const Complex half_over_i = half / kI;  // = -i/2
  for (std::size_t i = 0; i < 3; ++i) {
    parts.d1g(i, 0) = half * a(i, 0) + half_over_i * a(i, 1);
    parts.d1g(i, 1) = a(i, 2);
    parts.d1cg(i, 0) = half * a(i, 0) - half_over_i * a(i, 1);
    parts.d1cg(i, 1) = 0.0;
  }

  const ComplexVector w = ex2_pack(z);
  const ComplexMatrix dadp = ex2_matrix_derivative(p, 0.5, 1.0 / (2.0 * kI), std::conj(p));
  const ComplexMatrix dadpbar = ex2_matrix_derivative(p, 0.5, -1.0 / (2.0 * kI), p);
  parts.d2g = as_column(dadp * w);
  parts.d2cg = as_column(dadpbar * w);
  return parts;
}

ComplexVector Example2Problem::solve_state(const ComplexVector& p) const {
  check_param_dim(*this, p);
  const ComplexVector v = lu_solve(ex2_matrix(p[0]), ex2_rhs());
  return {v[0] + kI * v[1], v[2]};
}

ComplexVector Example2Problem::constraint(const ComplexVector& x, const ComplexVector& p) const {
  check_param_dim(*this, p);
  return ex2_matrix(p[0]) * ex2_pack(x) - ex2_rhs();
}

WirtingerPartials Example2Problem::partials(const ComplexVector& x, const ComplexVector& p) const {
  check_param_dim(*this, p);
  return ex2_partials(x, p[0]);
}

double Example2Problem::value(const ComplexVector& x, const ComplexVector&) const {
  return std::norm(x[0]) + std::norm(x[1]);
}

CostGradients Example2Problem::gradients(const ComplexVector& x, const ComplexVector&) const {
  CostGradients cg;
  cg.g1 = 2.0 * ComplexVector(x);
  cg.g2 = ComplexVector(1);
  return cg;
}

// ------------------------------------------------------------- Helmholtz

ComplexMatrix helmholtz_matrix(const HelmholtzGrid& grid) {
  if (grid.resolution < 4) throw std::invalid_argument("helmholtz grid needs resolution >= 4");
  const std::size_t n = grid.dim();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  ComplexMatrix a(n, n);
  // One-sided second-order stencils for the Neumann rows.
  a(0, 0) = -1.5 / h;
  a(0, 1) = 2.0 / h;
  a(0, 2) = -0.5 / h;
  a(n - 1, n - 1) = 1.5 / h;
  a(n - 1, n - 2) = -2.0 / h;
  a(n - 1, n - 3) = 0.5 / h;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    a(j, j - 1) = -inv_h2;
    a(j, j) = 2.0 * inv_h2 - grid.k2;
    a(j, j + 1) = -inv_h2;
  }
  return a;
}

ComplexVector helmholtz_rhs(const HelmholtzGrid& grid, Complex p) {
  const std::size_t n = grid.dim();
  ComplexVector b(n);
  b[0] = kI * p;
  const Complex pc = std::conj(p);
  b[n - 1] = pc * pc * pc;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    b[j] = std::sin(2.0 * std::numbers::pi * grid.node(j));
  }
  return b;
}

std::pair<ComplexMatrix, ComplexVector> helmholtz_assemble(const HelmholtzGrid& grid, Complex p) {
  return {helmholtz_matrix(grid), helmholtz_rhs(grid, p)};
}

HelmholtzCostEval helmholtz_cost(const ComplexVector& u, Complex target0, Complex target1) {
  if (u.size() < 2) throw std::invalid_argument("helmholtz_cost expects at least two samples");
  const Complex d0 = u[0] - target0;
  const Complex d1 = u[u.size() - 1] - target1;
  HelmholtzCostEval out{std::norm(d0) + std::norm(d1), ComplexVector(u.size())};
  out.g1[0] = 2.0 * d0;
  out.g1[u.size() - 1] = 2.0 * d1;
  return out;
}

HelmholtzProblem::HelmholtzProblem(HelmholtzGrid grid, Complex target0, Complex target1)
    : grid_(grid), target0_(target0), target1_(target1), a_(helmholtz_matrix(grid)), lu_(a_) {}

HelmholtzProblem HelmholtzProblem::with_generated_targets(std::size_t resolution,
                                                          std::size_t truth_resolution, double k2,
                                                          Complex p_true) {
  if (truth_resolution < resolution) {
    throw std::invalid_argument("target grid must be at least as fine as the inversion grid");
  }
  const HelmholtzGrid truth_grid{truth_resolution, k2};
  const ComplexVector u = lu_solve(helmholtz_matrix(truth_grid), helmholtz_rhs(truth_grid, p_true));
  return HelmholtzProblem(HelmholtzGrid{resolution, k2}, u[0], u[u.size() - 1]);
}

ComplexVector HelmholtzProblem::solve_state(const ComplexVector& p) const {
  check_param_dim(*this, p);
  return lu_.solve(helmholtz_rhs(grid_, p[0]));
}

ComplexVector HelmholtzProblem::constraint(const ComplexVector& x, const ComplexVector& p) const {
  check_param_dim(*this, p);
  return a_ * x - helmholtz_rhs(grid_, p[0]);
}

WirtingerPartials HelmholtzProblem::partials(const ComplexVector&, const ComplexVector& p) const {
  check_param_dim(*this, p);
  const std::size_t n = grid_.dim();
  WirtingerPartials parts;
  parts.d1g = a_;
  parts.d1cg = ComplexMatrix(n, n);
  // g = A u - b(p): db/dp = i e_1 and db/dpbar = 3 conj(p)^2 e_n.
  parts.d2g = ComplexMatrix(n, 1);
  parts.d2g(0, 0) = -kI;
  parts.d2cg = ComplexMatrix(n, 1);
  const Complex pc = std::conj(p[0]);
  parts.d2cg(n - 1, 0) = -3.0 * pc * pc;
  return parts;
}

std::optional<GradientReport> HelmholtzProblem::special_gradient(const ComplexVector& x,
                                                                 const ComplexVector& p,
                                                                 const CostGradients& cg) const {
  return gradient_holo_x(partials(x, p), cg, tangent_kind());
}

double HelmholtzProblem::value(const ComplexVector& x, const ComplexVector&) const {
  return helmholtz_cost(x, target0_, target1_).value;
}

CostGradients HelmholtzProblem::gradients(const ComplexVector& x, const ComplexVector&) const {
  CostGradients cg;
  cg.g1 = helmholtz_cost(x, target0_, target1_).g1;
  cg.g2 = ComplexVector(1);
  return cg;
}

}  // namespace cradjoint
