#include "cradjoint/adjoint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cradjoint {

namespace {

constexpr double kConditionWarning = 1e10;
constexpr double kConsistencyGate = 1e-8;

void check_partials(const WirtingerPartials& p) {
  const std::size_t q = p.d1g.rows();
  const std::size_t n = p.d1g.cols();
  const std::size_t m = p.d2g.cols();
  if (p.d1cg.rows() != q || p.d1cg.cols() != n || p.d2g.rows() != q || p.d2cg.rows() != q ||
      p.d2cg.cols() != m) {
    throw std::invalid_argument("inconsistent Wirtinger partial dimensions");
  }
}

void check_cost(const WirtingerPartials& p, const CostGradients& cg) {
  if (cg.g1.size() != p.state_dim() || cg.g2.size() != p.param_dim()) {
    throw std::invalid_argument("cost gradient dimensions do not match the partials");
  }
}

ComplexVector stack_cost(const CostGradients& cg) {
  const std::size_t n = cg.g1.size();
  ComplexVector s(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = cg.g1[i];
    s[n + i] = std::conj(cg.g1[i]);
  }
  return s;
}

struct BlockSolve {
  StateSensitivities sens;
  double residual = 0.0;
  double cond = 0.0;
};

BlockSolve solve_block(const WirtingerPartials& parts) {
  auto [m, rhs] = assemble_block(parts);
  const std::size_t n = parts.state_dim();
  BlockSolve out;
  ComplexMatrix s;
  if (m.rows() == m.cols()) {
    LuFactorization lu(m);
    s = lu.solve(rhs);
    out.residual = max_abs(m * s - rhs);
    out.cond = lu.condition_1norm_estimate();
  } else if (m.rows() > m.cols()) {
    auto [sol, res] = lstsq_solve(m, rhs);
    if (res > kConsistencyGate * max_abs(rhs)) {
      throw InconsistentSystemError(
          "differentiated constraint has no solution: least-squares residual " +
          std::to_string(res) + " exceeds the consistency gate");
    }
    s = std::move(sol);
    out.residual = res;
  } else {
    throw RankDeficientError("sensitivity system is underdetermined: constraint does not locally determine the state");
  }
  out.sens.dxdp = ComplexMatrix(n, s.cols());
  out.sens.dxbardp = ComplexMatrix(n, s.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      out.sens.dxdp(i, j) = s(i, j);
      out.sens.dxbardp(i, j) = s(n + i, j);
    }
  return out;
}

ComplexVector assemble_gradient(const StateSensitivities& sens, const CostGradients& cg,
                                TangentSpaceKind kind) {
  ComplexVector grad = conj_transpose(sens.dxdp) * cg.g1;
  grad += conj_transpose(sens.dxbardp) * conj(cg.g1);
  grad += cg.g2;
  if (kind == TangentSpaceKind::RealHilbert) grad = project_real(grad);
  return grad;
}

}  // namespace

const char* to_string(GradientPath path) {
  switch (path) {
    case GradientPath::GeneralDirect: return "general-direct";
    case GradientPath::GeneralAdjoint: return "general-adjoint";
    case GradientPath::HoloInX: return "holomorphic-in-state";
    case GradientPath::FullyHolo: return "fully-holomorphic";
    case GradientPath::LinearConstraint: return "linear-constraint";
  }
  return "unknown";
}

std::pair<ComplexMatrix, ComplexMatrix> assemble_block(const WirtingerPartials& parts) {
  check_partials(parts);
  const std::size_t q = parts.constraint_dim();
  const std::size_t n = parts.state_dim();
  const std::size_t m = parts.param_dim();

  ComplexMatrix block(2 * q, 2 * n);
  block.paste(0, 0, parts.d1g);
  block.paste(0, n, parts.d1cg);
  block.paste(q, 0, conj(parts.d1cg));
  block.paste(q, n, conj(parts.d1g));

  ComplexMatrix rhs(2 * q, m);
  rhs.paste(0, 0, -parts.d2g);
  rhs.paste(q, 0, -conj(parts.d2cg));
  return {std::move(block), std::move(rhs)};
}

StateSensitivities solve_sensitivities(const WirtingerPartials& parts) {
  return solve_block(parts).sens;
}

AdjointVariables solve_adjoint_variables(const WirtingerPartials& parts, const CostGradients& cg) {
  check_cost(parts, cg);
  auto [block, rhs] = assemble_block(parts);
  (void)rhs;
  const ComplexMatrix madj = conj_transpose(block);  // 2n x 2q
  const ComplexVector stack = stack_cost(cg);
  ComplexVector lambda;
  if (madj.rows() == madj.cols()) {
    lambda = LuFactorization(madj).solve(stack);
  } else if (madj.rows() < madj.cols()) {
    lambda = minnorm_solve(madj, as_column(stack)).column(0);
  } else {
    throw RankDeficientError("multiplier system is overdetermined: constraint does not locally determine the state");
  }
  const std::size_t q = parts.constraint_dim();
  return {lambda.segment(0, q), lambda.segment(q, q)};
}

bool conjugate_pair_violated(const AdjointVariables& vars, double rel_tol) {
  const double scale = std::max(norm2(vars.lam1), 1e-300);
  return norm2(vars.lam1 - conj(vars.lam2)) > rel_tol * scale;
}

GradientReport gradient_general(const WirtingerPartials& parts, const CostGradients& cg,
                                TangentSpaceKind kind) {
  check_cost(parts, cg);
  const BlockSolve solved = solve_block(parts);
  GradientReport report;
  report.grad = assemble_gradient(solved.sens, cg, kind);
  report.path = GradientPath::GeneralDirect;
  report.block_residual = solved.residual;
  report.tangent_kind = kind;
  report.condition_estimate = solved.cond;
  report.ill_conditioned = solved.cond > kConditionWarning;
  return report;
}

GradientReport gradient_adjoint_path(const WirtingerPartials& parts, const CostGradients& cg,
                                     TangentSpaceKind kind) {
  check_cost(parts, cg);
  auto [block, rhs] = assemble_block(parts);
  const ComplexMatrix madj = conj_transpose(block);
  const ComplexVector stack = stack_cost(cg);

  GradientReport report;
  report.path = GradientPath::GeneralAdjoint;
  report.tangent_kind = kind;

  ComplexVector lambda;
  if (madj.rows() == madj.cols()) {
    LuFactorization lu(madj);
    lambda = lu.solve(stack);
    report.condition_estimate = lu.condition_1norm_estimate();
    report.ill_conditioned = report.condition_estimate > kConditionWarning;
  } else if (madj.rows() < madj.cols()) {
    lambda = minnorm_solve(madj, as_column(stack)).column(0);
  } else {
    throw RankDeficientError("multiplier system is overdetermined: constraint does not locally determine the state");
  }
  report.block_residual = norm_inf(madj * lambda - stack);

  const std::size_t q = parts.constraint_dim();
  const AdjointVariables vars{lambda.segment(0, q), lambda.segment(q, q)};
  report.conjugate_pair_violation = conjugate_pair_violated(vars);

  ComplexVector grad = conj_transpose(rhs) * lambda;
  grad += cg.g2;
  if (kind == TangentSpaceKind::RealHilbert) grad = project_real(grad);
  report.grad = std::move(grad);
  return report;
}

GradientReport gradient_holo_x(const WirtingerPartials& parts, const CostGradients& cg,
                               TangentSpaceKind kind) {
  check_cost(parts, cg);
  if (max_abs(parts.d1cg) > 0.0) {
    throw NotHolomorphicInStateError("constraint is not holomorphic in the state: d1cg is nonzero");
  }
  if (parts.d1g.rows() != parts.d1g.cols()) {
    throw std::invalid_argument("reduced solve requires a square state Jacobian");
  }

  LuFactorization lu(parts.d1g);
  StateSensitivities sens;
  sens.dxdp = lu.solve(-parts.d2g);
  double residual = max_abs(parts.d1g * sens.dxdp + parts.d2g);

  GradientReport report;
  if (max_abs(parts.d2cg) == 0.0) {
    sens.dxbardp = ComplexMatrix(parts.state_dim(), parts.param_dim());
    report.path = GradientPath::FullyHolo;
  } else {
    // conj(d1g) dxbardp = -conj(d2cg), solved through the same factorization.
    sens.dxbardp = conj(lu.solve(-parts.d2cg));
    residual = std::max(residual, max_abs(conj(parts.d1g) * sens.dxbardp + conj(parts.d2cg)));
    report.path = GradientPath::HoloInX;
  }

  report.grad = assemble_gradient(sens, cg, kind);
  report.block_residual = residual;
  report.tangent_kind = kind;
  report.condition_estimate = lu.condition_1norm_estimate();
  report.ill_conditioned = report.condition_estimate > kConditionWarning;
  return report;
}

GradientReport gradient_linear(const ComplexMatrix& a, const ComplexMatrix& daxdp,
                               const CostGradients& cg, TangentSpaceKind kind) {
  if (a.rows() != a.cols() || daxdp.rows() != a.rows()) {
    throw std::invalid_argument("linear-constraint gradient requires square A and matching dAxdp");
  }
  if (cg.g1.size() != a.rows() || cg.g2.size() != daxdp.cols()) {
    throw std::invalid_argument("cost gradient dimensions do not match the linear constraint");
  }
  LuFactorization lu(a);
  const ComplexVector lambda = lu.solve_adjoint(cg.g1);  // A^H lambda = g1

  GradientReport report;
  report.path = GradientPath::LinearConstraint;
  report.tangent_kind = kind;
  report.block_residual = norm_inf(conj_transpose(a) * lambda - cg.g1);
  report.condition_estimate = lu.condition_1norm_estimate();
  report.ill_conditioned = report.condition_estimate > kConditionWarning;

  ComplexVector grad = -(conj_transpose(daxdp) * lambda);
  grad += cg.g2;
  if (kind == TangentSpaceKind::RealHilbert) grad = project_real(grad);
  report.grad = std::move(grad);
  return report;
}

std::vector<double> realified_gradient(const GradientReport& report) {
  if (report.tangent_kind == TangentSpaceKind::RealHilbert) {
    std::vector<double> out(report.grad.size());
    for (std::size_t i = 0; i < report.grad.size(); ++i) out[i] = report.grad[i].real();
    return out;
  }
  return realify(report.grad);
}

}  // namespace cradjoint
