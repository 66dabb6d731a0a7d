#include "cradjoint/optimize.hpp"

#include <cmath>
#include <stdexcept>

#include "cradjoint/fdcheck.hpp"

namespace cradjoint {

namespace {

using RealVec = std::vector<double>;

double dot(const RealVec& a, const RealVec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const RealVec& a) { return std::sqrt(dot(a, a)); }

ComplexVector decode(const RealVec& coords, TangentSpaceKind kind, std::size_t m) {
  ComplexVector p(m);
  if (kind == TangentSpaceKind::RealHilbert) {
    for (std::size_t i = 0; i < m; ++i) p[i] = coords[i];
  } else {
    for (std::size_t i = 0; i < m; ++i) p[i] = Complex(coords[i], coords[m + i]);
  }
  return p;
}

RealVec encode(const ComplexVector& p, TangentSpaceKind kind) {
  const std::size_t m = p.size();
  RealVec coords(kind == TangentSpaceKind::RealHilbert ? m : 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    coords[i] = p[i].real();
    if (kind == TangentSpaceKind::ComplexHilbert) coords[m + i] = p[i].imag();
  }
  return coords;
}

// Dense symmetric BFGS update of the inverse Hessian approximation.
void bfgs_update(std::vector<RealVec>& h, const RealVec& s, const RealVec& y, bool first_update) {
  const std::size_t d = s.size();
  const double ys = dot(y, s);
  if (ys <= 1e-12 * norm(y) * norm(s)) return;  // curvature too small, keep h

  if (first_update) {
    const double scale = ys / dot(y, y);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) h[i][j] = i == j ? scale : 0.0;
  }
  const double rho = 1.0 / ys;
  // h <- (I - rho s y^T) h (I - rho y s^T) + rho s s^T
  RealVec hy(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) hy[i] = dot(h[i], y);
  const double yhy = dot(y, hy);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      h[i][j] += -rho * (s[i] * hy[j] + hy[i] * s[j]) + rho * rho * yhy * s[i] * s[j] +
                 rho * s[i] * s[j];
    }
  }
}

}  // namespace

const char* to_string(Termination t) {
  switch (t) {
    case Termination::GradientTolerance: return "gradient-tolerance";
    case Termination::MaxIterations: return "max-iterations";
    case Termination::LineSearchFailure: return "line-search-failure";
  }
  return "unknown";
}

OptimizerRun minimize(const ConstraintProblem& constraint, const CostProblem& cost,
                      const ComplexVector& p0, const OptimizerConfig& cfg) {
  if (cfg.armijo_c <= 0.0 || cfg.armijo_c >= 1.0 || cfg.backtrack_factor <= 0.0 ||
      cfg.backtrack_factor >= 1.0) {
    throw std::invalid_argument("optimizer config out of range");
  }
  const TangentSpaceKind kind = constraint.tangent_kind();
  const std::size_t m = constraint.param_dim();
  const std::size_t d = kind == TangentSpaceKind::RealHilbert ? m : 2 * m;

  OptimizerRun run;

  const auto eval_cost = [&](const RealVec& coords) {
    ++run.n_cost_evals;
    return cost_at(constraint, cost, decode(coords, kind, m));
  };
  const auto eval_grad = [&](const RealVec& coords) -> RealVec {
    ++run.n_grad_evals;
    const ComplexVector p = decode(coords, kind, m);
    if (cfg.gradient_source == GradientSource::Adjoint) {
      return realified_gradient(gradient_auto_at(constraint, cost, p));
    }
    FdConfig fd;
    fd.step = cfg.fd_step;
    return fd_total_gradient(
        [&](const ComplexVector& q) {
          ++run.n_cost_evals;
          return cost_at(constraint, cost, q);
        },
        p, kind, fd);
  };

  RealVec x = encode(p0, kind);
  double fx = eval_cost(x);
  RealVec gx = eval_grad(x);

  std::vector<RealVec> h(d, RealVec(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) h[i][i] = 1.0;
  bool first_update = true;

  run.trace.push_back({decode(x, kind, m), fx, norm(gx)});
  run.termination = Termination::MaxIterations;

  for (std::size_t iter = 0; iter < cfg.max_iters; ++iter) {
    if (norm(gx) <= cfg.grad_tol) {
      run.termination = Termination::GradientTolerance;
      break;
    }

    RealVec direction(d, 0.0);
    if (cfg.method == OptimizeMethod::Bfgs) {
      for (std::size_t i = 0; i < d; ++i) direction[i] = -dot(h[i], gx);
    } else {
      for (std::size_t i = 0; i < d; ++i) direction[i] = -gx[i];
    }
    double slope = dot(gx, direction);
    if (slope >= 0.0) {
      // Not a descent direction; fall back to steepest descent.
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) h[i][j] = i == j ? 1.0 : 0.0;
        direction[i] = -gx[i];
      }
      first_update = true;
      slope = dot(gx, direction);
    }

    double alpha = cfg.initial_step;
    bool accepted = false;
    RealVec x_new(d, 0.0);
    double f_new = fx;
    for (int backtrack = 0; backtrack < 60; ++backtrack) {
      for (std::size_t i = 0; i < d; ++i) x_new[i] = x[i] + alpha * direction[i];
      f_new = eval_cost(x_new);
      if (f_new <= fx + cfg.armijo_c * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= cfg.backtrack_factor;
    }
    if (!accepted) {
      run.termination = Termination::LineSearchFailure;
      break;
    }

    const RealVec g_new = eval_grad(x_new);
    if (cfg.method == OptimizeMethod::Bfgs) {
      RealVec s(d), y(d);
      for (std::size_t i = 0; i < d; ++i) {
        s[i] = x_new[i] - x[i];
        y[i] = g_new[i] - gx[i];
      }
      bfgs_update(h, s, y, first_update);
      first_update = false;
    }

    x = x_new;
    fx = f_new;
    gx = g_new;
    run.trace.push_back({decode(x, kind, m), fx, norm(gx)});

    if (norm(gx) <= cfg.grad_tol) {
      run.termination = Termination::GradientTolerance;
      break;
    }
  }

  run.final_p = decode(x, kind, m);
  run.final_cost = fx;
  return run;
}

}  // namespace cradjoint
