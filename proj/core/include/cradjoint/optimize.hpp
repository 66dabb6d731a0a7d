#pragma once

#include <cstddef>
#include <vector>

#include "cradjoint/problems.hpp"

namespace cradjoint {

enum class OptimizeMethod { GradientDescent, Bfgs };
enum class GradientSource { Adjoint, FiniteDifference };
enum class Termination { GradientTolerance, MaxIterations, LineSearchFailure };

const char* to_string(Termination t);

struct OptimizerConfig {
  OptimizeMethod method = OptimizeMethod::Bfgs;
  GradientSource gradient_source = GradientSource::Adjoint;
  std::size_t max_iters = 200;
  double grad_tol = 1e-9;
  double armijo_c = 1e-4;        // in (0, 1)
  double backtrack_factor = 0.5;  // in (0, 1)
  double initial_step = 1.0;
  double fd_step = 1e-6;  // step for the finite-difference gradient source
};

struct TracePoint {
  ComplexVector p;
  double cost;
  double grad_norm;  // 2-norm of the realified gradient
};

struct OptimizerRun {
  ComplexVector final_p;
  double final_cost = 0.0;
  std::size_t n_cost_evals = 0;
  std::size_t n_grad_evals = 0;
  std::vector<TracePoint> trace;  // accepted iterates, initial point included
  Termination termination = Termination::MaxIterations;
};

/// Minimize p -> f(x(p), p) over the realified parameter coordinates with
/// Armijo backtracking. Every cost evaluation is counted, including
/// line-search probes and the finite-difference probes of the FD gradient
/// source. The iteration is deterministic: identical inputs give identical
/// traces.
OptimizerRun minimize(const ConstraintProblem& constraint, const CostProblem& cost,
                      const ComplexVector& p0, const OptimizerConfig& cfg = {});

}  // namespace cradjoint
