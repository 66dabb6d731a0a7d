#include <benchmark/benchmark.h>

#include <random>

#include "cradjoint/optimize.hpp"
#include "cradjoint/problems.hpp"

using namespace cradjoint;

namespace {

ComplexMatrix random_system(std::mt19937_64& rng, std::size_t n) {
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const double v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      a(i, j) = Complex(2.0 * u - 1.0, 2.0 * v - 1.0);
    }
    a(i, i) += Complex(static_cast<double>(n), 0.0);
  }
  return a;
}

void BM_LuFactorSolve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(17);
  const ComplexMatrix a = random_system(rng, n);
  ComplexVector b(n);
  for (auto& z : b) z = Complex(static_cast<double>(rng() >> 11) * 0x1.0p-53, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lu_solve(a, b));
  }
}
BENCHMARK(BM_LuFactorSolve)->Arg(16)->Arg(64)->Arg(122)->Arg(244);

void BM_Ex1GradientLinear(benchmark::State& state) {
  const Example1Problem problem;
  const ComplexVector p{0.3, -0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_special_at(problem, problem, p));
  }
}
BENCHMARK(BM_Ex1GradientLinear);

void BM_Ex1GradientGeneral(benchmark::State& state) {
  const Example1Problem problem;
  const ComplexVector p{0.3, -0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_direct_at(problem, problem, p));
  }
}
BENCHMARK(BM_Ex1GradientGeneral);

void BM_Ex2GradientDirect(benchmark::State& state) {
  const Example2Problem problem;
  const ComplexVector p{Complex(0.2, 0.1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_direct_at(problem, problem, p));
  }
}
BENCHMARK(BM_Ex2GradientDirect);

void BM_Ex2GradientAdjoint(benchmark::State& state) {
  const Example2Problem problem;
  const ComplexVector p{Complex(0.2, 0.1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_adjoint_at(problem, problem, p));
  }
}
BENCHMARK(BM_Ex2GradientAdjoint);

void BM_HelmholtzGradientReduced(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const HelmholtzProblem problem =
      HelmholtzProblem::with_generated_targets(n, 2 * n + 1, 4.0, {0.5, 0.5});
  const ComplexVector p{Complex(0.25, -0.4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_auto_at(problem, problem, p));
  }
}
BENCHMARK(BM_HelmholtzGradientReduced)->Arg(60)->Arg(120);

void BM_HelmholtzGradientGeneral(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const HelmholtzProblem problem =
      HelmholtzProblem::with_generated_targets(n, 2 * n + 1, 4.0, {0.5, 0.5});
  const ComplexVector p{Complex(0.25, -0.4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_direct_at(problem, problem, p));
  }
}
BENCHMARK(BM_HelmholtzGradientGeneral)->Arg(60)->Arg(120);

void BM_HelmholtzCostEval(benchmark::State& state) {
  const HelmholtzProblem problem = HelmholtzProblem::with_generated_targets(120, 1000, 4.0, {0.5, 0.5});
  const ComplexVector p{Complex(0.25, -0.4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost_at(problem, problem, p));
  }
}
BENCHMARK(BM_HelmholtzCostEval);

void BM_HelmholtzInverseBfgs(benchmark::State& state) {
  const HelmholtzProblem problem = HelmholtzProblem::with_generated_targets(120, 1000, 4.0, {0.5, 0.5});
  OptimizerConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize(problem, problem, {Complex(0.0)}, cfg));
  }
}
BENCHMARK(BM_HelmholtzInverseBfgs);

}  // namespace

BENCHMARK_MAIN();
