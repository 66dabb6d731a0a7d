// Acceptance suite: end-to-end checks of the gradient engine against its
// finite-difference oracle, the alternative solve paths, and the Helmholtz
// inverse-problem protocol. One pass/fail line is printed per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "cradjoint/fdcheck.hpp"
#include "cradjoint/optimize.hpp"
#include "field_export.hpp"
#include "problem_registry.hpp"
#include "support.hpp"

using namespace cradjoint;
using tool::AxisSpec;
using tool::FieldExport;
using tool::HelmholtzOptions;
using tool::ProblemInstance;

namespace {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string sci(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2e", value);
  return buffer;
}

void report_line(int index, const std::string& label, bool ok, double ms,
                 const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s (%.0f ms)\n", ok ? "PASS" : "FAIL", index, label.c_str(),
              detail.c_str(), ms);
  std::fflush(stdout);
}

double rel_vs_fd(const std::vector<double>& fd, const std::vector<double>& engine) {
  double dev = 0.0;
  double scale = 1e-8;
  for (std::size_t i = 0; i < fd.size(); ++i) {
    dev = std::max(dev, std::abs(fd[i] - engine[i]));
    scale = std::max(scale, std::abs(fd[i]));
  }
  return dev / scale;
}

double rel_between(const ComplexVector& a, const ComplexVector& b) {
  return norm_inf(a - b) / (1.0 + norm_inf(a));
}

std::vector<double> fd_gradient_of(const ConstraintProblem& constraint, const CostProblem& cost,
                                   const ComplexVector& p) {
  return fd_total_gradient([&](const ComplexVector& q) { return cost_at(constraint, cost, q); }, p,
                           constraint.tangent_kind());
}

ComplexVector decode_coords(const std::vector<double>& coords, TangentSpaceKind kind,
                            std::size_t m) {
  ComplexVector p(m);
  for (std::size_t i = 0; i < m; ++i) {
    p[i] = kind == TangentSpaceKind::RealHilbert ? Complex(coords[i], 0.0)
                                                 : Complex(coords[i], coords[m + i]);
  }
  return p;
}

std::vector<double> encode_param(const ComplexVector& p, TangentSpaceKind kind) {
  const std::size_t m = p.size();
  std::vector<double> coords(kind == TangentSpaceKind::RealHilbert ? m : 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    coords[i] = p[i].real();
    if (kind == TangentSpaceKind::ComplexHilbert) coords[m + i] = p[i].imag();
  }
  return coords;
}

const HelmholtzOptions kCoarseHelm{60, 301, 4.0, Complex(0.5, 0.5)};

}  // namespace

TEST_CASE("criterion 1: oracle agreement on the linear-constraint example") {
  Stopwatch timer;
  const Example1Problem problem;
  std::mt19937_64 rng(20250101);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ComplexVector p{testsup::uniform(rng, -0.4, 0.4), testsup::uniform(rng, -0.4, 0.4)};
    const GradientReport engine = gradient_auto_at(problem, problem, p);
    worst = std::max(worst, rel_vs_fd(fd_gradient_of(problem, problem, p),
                                      realified_gradient(engine)));
  }
  const double ms = timer.ms();
  const bool ok = worst <= 1e-5 && ms < 1000.0;
  report_line(1, "oracle agreement, ex1", ok, ms, "max rel dev " + sci(worst));
  CHECK(worst <= 1e-5);
  CHECK(ms < 1000.0);
}

TEST_CASE("criterion 2: oracle agreement on the fully non-holomorphic example") {
  Stopwatch timer;
  const ProblemInstance instance = ProblemInstance::make("ex2");
  std::mt19937_64 rng(20250202);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ComplexVector p = instance.sample_parameter(rng);  // rejects condition > 1e8
    const GradientReport engine = gradient_direct_at(instance.constraint(), instance.cost(), p);
    worst = std::max(worst, rel_vs_fd(fd_gradient_of(instance.constraint(), instance.cost(), p),
                                      realified_gradient(engine)));
  }
  const double ms = timer.ms();
  const bool ok = worst <= 1e-5 && ms < 1000.0;
  report_line(2, "oracle agreement, ex2", ok, ms, "max rel dev " + sci(worst));
  CHECK(worst <= 1e-5);
  CHECK(ms < 1000.0);
}

TEST_CASE("criterion 3: direct, multiplier and reduced paths agree") {
  Stopwatch timer;
  std::mt19937_64 rng(20250303);
  double worst = 0.0;
  for (const std::string name : {"ex1", "ex2", "helmholtz"}) {
    const ProblemInstance instance = ProblemInstance::make(name, kCoarseHelm);
    for (int k = 0; k < 20; ++k) {
      const ComplexVector p = instance.sample_parameter(rng);
      const GradientReport direct = gradient_direct_at(instance.constraint(), instance.cost(), p);
      const GradientReport adjoint = gradient_adjoint_at(instance.constraint(), instance.cost(), p);
      worst = std::max(worst, rel_between(direct.grad, adjoint.grad));
      if (const auto special = gradient_special_at(instance.constraint(), instance.cost(), p)) {
        worst = std::max(worst, rel_between(direct.grad, special->grad));
      }
    }
  }
  const double ms = timer.ms();
  const bool ok = worst <= 1e-9 && ms < 2000.0;
  report_line(3, "path equivalence on all problems", ok, ms, "max rel dev " + sci(worst));
  CHECK(worst <= 1e-9);
  CHECK(ms < 2000.0);
}

TEST_CASE("criterion 4: Helmholtz inverse reproduction") {
  Stopwatch timer;
  const Complex p_true{0.5, 0.5};
  const HelmholtzProblem problem = HelmholtzProblem::with_generated_targets(120, 1000, 4.0, p_true);

  OptimizerConfig adjoint_cfg;
  adjoint_cfg.gradient_source = GradientSource::Adjoint;
  const OptimizerRun adjoint_run = minimize(problem, problem, {Complex(0.0)}, adjoint_cfg);

  OptimizerConfig fd_cfg = adjoint_cfg;
  fd_cfg.gradient_source = GradientSource::FiniteDifference;
  const OptimizerRun fd_run = minimize(problem, problem, {Complex(0.0)}, fd_cfg);

  const double p_err = std::abs(adjoint_run.final_p[0] - p_true);
  const double ms = timer.ms();
  const bool ok = p_err <= 2e-3 && adjoint_run.final_cost <= 1e-8 &&
                  adjoint_run.n_cost_evals < fd_run.n_cost_evals && ms < 10000.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail), "|p - true| %.2e, cost %.2e, evals %zu vs %zu", p_err,
                adjoint_run.final_cost, adjoint_run.n_cost_evals, fd_run.n_cost_evals);
  report_line(4, "Helmholtz inverse reproduction", ok, ms, detail);
  CHECK(p_err <= 2e-3);
  CHECK(adjoint_run.final_cost <= 1e-8);
  CHECK(adjoint_run.n_cost_evals < fd_run.n_cost_evals);
  CHECK(ms < 10000.0);
}

TEST_CASE("criterion 5: printed partial matrices verified by the Wirtinger oracle") {
  Stopwatch timer;
  std::mt19937_64 rng(20250505);
  const Example2Problem ex2;
  double worst = 0.0;
  bool flipped_rejected = true;
  for (int k = 0; k < 5; ++k) {
    // ex2: all four Jacobians at a conditioned random parameter.
    ComplexVector p2{testsup::rand_complex(rng, 0.5)};
    while (LuFactorization(ex2_matrix(p2[0])).condition_1norm_estimate() > 1e6) {
      p2 = ComplexVector{testsup::rand_complex(rng, 0.5)};
    }
    const ComplexVector z = ex2.solve_state(p2);
    const WirtingerPartials parts = ex2.partials(z, p2);
    const auto state_jac =
        fd_wirtinger_jacobian([&](const ComplexVector& zz) { return ex2.constraint(zz, p2); }, z);
    const auto param_jac =
        fd_wirtinger_jacobian([&](const ComplexVector& q) { return ex2.constraint(z, q); }, p2);
    worst = std::max({worst, max_abs(state_jac.dz - parts.d1g), max_abs(state_jac.dzbar - parts.d1cg),
                      max_abs(param_jac.dz - parts.d2g), max_abs(param_jac.dzbar - parts.d2cg)});

    // ex1: d(Az)/dp, with the printed sign variant of the (0,1) entry rejected.
    const double p1 = testsup::uniform(rng, 0.1, 0.4);
    const double q1 = testsup::uniform(rng, 0.1, 0.4);
    const ComplexVector zz = testsup::rand_vector(rng, 3);
    const auto jac = fd_wirtinger_jacobian(
        [&](const ComplexVector& q) { return ex1_matrix(q[0].real(), q[1].real()) * zz; },
        {p1, q1});
    const ComplexMatrix fd_dAzdp = jac.dz + jac.dzbar;  // real-coordinate derivative
    const ComplexMatrix mine = ex1_dAzdp(p1, q1, zz);
    worst = std::max(worst, max_abs(fd_dAzdp - mine));
    ComplexMatrix flipped = mine;
    flipped(0, 1) = 2.0 * q1 * zz[0] - 4.0 * q1 * zz[1] + 4.0 * zz[2];
    flipped_rejected = flipped_rejected && max_abs(fd_dAzdp - flipped) > 1e-3;
  }
  const double ms = timer.ms();
  const bool ok = worst <= 1e-6 && flipped_rejected && ms < 1000.0;
  report_line(5, "printed-matrix verification", ok, ms,
              "max abs dev " + sci(worst) +
                  (flipped_rejected ? ", sign variant rejected" : ", sign variant NOT rejected"));
  CHECK(worst <= 1e-6);
  CHECK(flipped_rejected);
  CHECK(ms < 1000.0);
}

TEST_CASE("criterion 6: the gradient direction dominates random directions to first order") {
  Stopwatch timer;
  std::mt19937_64 rng(20250606);
  const double epsilon = 1e-4;
  double worst_gap = 0.0;
  for (const std::string name : {"ex1", "ex2", "helmholtz"}) {
    const ProblemInstance instance = ProblemInstance::make(name, kCoarseHelm);
    const ConstraintProblem& constraint = instance.constraint();
    const CostProblem& cost = instance.cost();
    const TangentSpaceKind kind = constraint.tangent_kind();
    const std::size_t m = constraint.param_dim();
    int accepted = 0;
    while (accepted < 10) {
      const ComplexVector p = instance.sample_parameter(rng);
      const GradientReport engine = gradient_auto_at(constraint, cost, p);
      std::vector<double> g = realified_gradient(engine);
      double gnorm = 0.0;
      for (double v : g) gnorm += v * v;
      gnorm = std::sqrt(gnorm);
      if (gnorm <= 1e-3) continue;  // keep clear of stationary points
      ++accepted;

      const std::vector<double> base = encode_param(p, kind);
      std::vector<double> ghat = g;
      for (double& v : ghat) v /= gnorm;
      std::vector<double> coords = base;
      for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += epsilon * ghat[i];
      const double f_grad = cost_at(constraint, cost, decode_coords(coords, kind, m));

      for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> dir(base.size());
        double dnorm = 0.0;
        for (double& v : dir) {
          v = testsup::uniform(rng, -1.0, 1.0);
        }
        for (double v : dir) dnorm += v * v;
        dnorm = std::sqrt(dnorm);
        if (dnorm == 0.0) continue;
        coords = base;
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += epsilon * dir[i] / dnorm;
        const double f_dir = cost_at(constraint, cost, decode_coords(coords, kind, m));
        worst_gap = std::max(worst_gap, f_dir - f_grad);
      }
    }
  }
  const double ms = timer.ms();
  const bool ok = worst_gap <= 1e-8;
  report_line(6, "steepest-ascent dominance", ok, ms, "worst gap " + sci(worst_gap));
  CHECK(worst_gap <= 1e-8);
}

TEST_CASE("criterion 7: classical adjoint recovered on a real linear problem") {
  Stopwatch timer;
  // A(p) = A0 + p1 B1 + p2 B2 with everything real; cost ||x - x_star||^2.
  const ComplexMatrix a0 = ComplexMatrix::from_rows({{4.0, 1.0, 0.5}, {0.0, 3.0, 1.0}, {0.5, 0.25, 5.0}});
  const ComplexMatrix b1 = ComplexMatrix::from_rows({{1.0, 0.0, 2.0}, {0.5, 1.0, 0.0}, {0.0, 1.5, 1.0}});
  const ComplexMatrix b2 = ComplexMatrix::from_rows({{0.0, 2.0, 1.0}, {1.0, 0.0, 0.5}, {2.0, 0.0, 1.0}});
  const ComplexVector rhs{1.0, 2.0, -1.0};
  const ComplexVector x_star{0.25, -0.5, 0.75};
  const double p1 = 0.3, p2 = -0.2;

  const ComplexMatrix a = a0 + Complex(p1) * ComplexMatrix(b1) + Complex(p2) * ComplexMatrix(b2);
  const ComplexVector x = lu_solve(a, rhs);

  // Longhand classical route: solve A^T lambda = -f_x, then df/dp_k = (B_k x)^T lambda.
  ComplexVector fx = 2.0 * (x - x_star);
  const ComplexVector lambda = lu_solve(conj_transpose(a), -fx);
  const ComplexVector b1x = b1 * x;
  const ComplexVector b2x = b2 * x;
  ComplexVector classical(2);
  for (std::size_t i = 0; i < 3; ++i) {
    classical[0] += b1x[i] * lambda[i];
    classical[1] += b2x[i] * lambda[i];
  }

  WirtingerPartials parts;
  parts.d1g = a;
  parts.d1cg = ComplexMatrix(3, 3);
  ComplexMatrix d2g(3, 2);
  d2g.set_column(0, b1x);
  d2g.set_column(1, b2x);
  parts.d2g = d2g;
  parts.d2cg = ComplexMatrix(3, 2);
  const CostGradients cg{fx, ComplexVector(2)};
  const GradientReport general = gradient_general(parts, cg, TangentSpaceKind::RealHilbert);
  const GradientReport linear = gradient_linear(a, d2g, cg, TangentSpaceKind::RealHilbert);

  const double dev_general = testsup::max_abs_diff(general.grad, classical);
  const double dev_linear = testsup::max_abs_diff(linear.grad, classical);
  const double ms = timer.ms();
  const bool ok = dev_general <= 1e-12 && dev_linear <= 1e-12;
  report_line(7, "classical adjoint degeneration", ok, ms,
              "max abs dev " + sci(std::max(dev_general, dev_linear)));
  CHECK(dev_general <= 1e-12);
  CHECK(dev_linear <= 1e-12);
}

TEST_CASE("criterion 8: Helmholtz endpoint error shrinks at second order") {
  Stopwatch timer;
  const Complex p{0.5, 0.5};
  const HelmholtzGrid fine{1000, 4.0};
  const ComplexVector uref = lu_solve(helmholtz_matrix(fine), helmholtz_rhs(fine, p));
  const auto endpoint_error = [&](std::size_t n) {
    const HelmholtzGrid grid{n, 4.0};
    const ComplexVector u = lu_solve(helmholtz_matrix(grid), helmholtz_rhs(grid, p));
    return std::max(std::abs(u[0] - uref[0]), std::abs(u[u.size() - 1] - uref[uref.size() - 1]));
  };
  const double e60 = endpoint_error(60);
  const double e120 = endpoint_error(120);
  const double ratio = e60 / e120;
  const double ms = timer.ms();
  const bool ok = ratio >= 3.4 && ratio <= 4.6 && ms < 2000.0;
  report_line(8, "Helmholtz discretization order", ok, ms, "error ratio " + std::string(std::to_string(ratio)));
  CHECK(ratio >= 3.4);
  CHECK(ratio <= 4.6);
  CHECK(ms < 2000.0);
}

TEST_CASE("criterion 9: minimal-gradient grid point sits at the ex2 saddle") {
  Stopwatch timer;
  const ProblemInstance instance = ProblemInstance::make("ex2");
  const AxisSpec axis{-0.5, 0.5, 41};
  const FieldExport field = tool::compute_gradient_field(instance, axis, axis);

  const double sx = 0.4, sy = 0.3;
  double best_norm = 0.0;
  double best_x = 0.0, best_y = 0.0;
  bool found = false;
  for (std::size_t iy = 0; iy < axis.count; ++iy) {
    for (std::size_t ix = 0; ix < axis.count; ++ix) {
      if (!std::isfinite(field.grad_re[iy][ix])) continue;
      const double x = field.x.tick(ix);
      const double y = field.y.tick(iy);
      if (std::hypot(x - sx, y - sy) > 0.1) continue;
      const double n = std::hypot(field.grad_re[iy][ix], field.grad_im[iy][ix]);
      if (!found || n < best_norm) {
        found = true;
        best_norm = n;
        best_x = x;
        best_y = y;
      }
    }
  }
  const double dist = std::hypot(best_x - sx, best_y - sy);
  const double cell_diagonal = std::hypot(field.x.tick(1) - field.x.tick(0),
                                          field.y.tick(1) - field.y.tick(0));
  const double ms = timer.ms();
  const bool ok = found && dist <= cell_diagonal + 1e-12;
  char detail[120];
  std::snprintf(detail, sizeof(detail), "argmin |grad| at %.3f%+.3fi, %.4f from the saddle", best_x,
                best_y, dist);
  report_line(9, "stationary-point geography", ok, ms, detail);
  CHECK(found);
  CHECK(dist <= cell_diagonal + 1e-12);
}
