#include "problem_registry.hpp"

#include <stdexcept>

namespace cradjoint::tool {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

}  // namespace

ProblemInstance ProblemInstance::make(const std::string& name, const HelmholtzOptions& helm) {
  ProblemInstance instance;
  instance.name_ = name;
  if (name == "ex1") {
    auto problem = std::make_shared<Example1Problem>();
    instance.constraint_ = problem.get();
    instance.cost_ = problem.get();
    instance.owner_ = std::move(problem);
  } else if (name == "ex2") {
    auto problem = std::make_shared<Example2Problem>();
    instance.constraint_ = problem.get();
    instance.cost_ = problem.get();
    instance.owner_ = std::move(problem);
  } else if (name == "helmholtz") {
    auto problem = std::make_shared<HelmholtzProblem>(HelmholtzProblem::with_generated_targets(
        helm.resolution, helm.truth_resolution, helm.k2, helm.p_true));
    instance.constraint_ = problem.get();
    instance.cost_ = problem.get();
    instance.owner_ = std::move(problem);
  } else {
    throw std::invalid_argument("unknown problem: " + name);
  }
  return instance;
}

void ProblemInstance::default_range(double& x0, double& x1, double& y0, double& y1) const {
  if (name_ == "helmholtz") {
    x0 = -1.0;
    x1 = 1.0;
    y0 = -1.0;
    y1 = 1.0;
  } else {
    x0 = -0.5;
    x1 = 0.5;
    y0 = -0.5;
    y1 = 0.5;
  }
}

ComplexVector ProblemInstance::sample_parameter(std::mt19937_64& rng) const {
  double x0, x1, y0, y1;
  default_range(x0, x1, y0, y1);
  if (name_ == "ex1") {
    return {uniform(rng, x0, x1), uniform(rng, y0, y1)};
  }
  if (name_ == "ex2") {
    for (;;) {
      const Complex p{uniform(rng, x0, x1), uniform(rng, y0, y1)};
      try {
        if (LuFactorization(ex2_matrix(p)).condition_1norm_estimate() <= 1e8) return {p};
      } catch (const NumericError&) {
        // singular draw, reject
      }
    }
  }
  return {Complex(uniform(rng, x0, x1), uniform(rng, y0, y1))};
}

}  // namespace cradjoint::tool
