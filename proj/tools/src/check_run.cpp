#include "check_run.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "cradjoint/fdcheck.hpp"
#include "log.hpp"

namespace cradjoint::tool {

namespace {

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

}  // namespace

CheckSummary run_check(const ProblemInstance& problem, const CheckOptions& options) {
  CheckSummary summary;
  summary.problem = problem.name();
  summary.samples = options.samples;
  summary.seed = options.seed;

  const ConstraintProblem& constraint = problem.constraint();
  const CostProblem& cost = problem.cost();

  std::mt19937_64 rng(options.seed);
  for (int k = 0; k < options.samples; ++k) {
    const ComplexVector p = problem.sample_parameter(rng);

    const GradientReport direct = gradient_direct_at(constraint, cost, p);
    const GradientReport adjoint = gradient_adjoint_at(constraint, cost, p);
    summary.max_rel_paths = std::max(summary.max_rel_paths, rel_between(direct.grad, adjoint.grad));
    if (const auto special = gradient_special_at(constraint, cost, p)) {
      summary.max_rel_paths =
          std::max(summary.max_rel_paths, rel_between(direct.grad, special->grad));
    }

    const std::vector<double> fd = fd_total_gradient(
        [&](const ComplexVector& q) { return cost_at(constraint, cost, q); }, p,
        constraint.tangent_kind());
    summary.max_rel_fd = std::max(summary.max_rel_fd, rel_vs_fd(fd, realified_gradient(direct)));

    log_debug("check sample " + std::to_string(k) + ": rel_fd so far " +
              std::to_string(summary.max_rel_fd));
  }

  summary.pass = summary.max_rel_fd <= options.fd_tol && summary.max_rel_paths <= options.path_tol;
  return summary;
}

void print_check_summary(const CheckSummary& summary, const CheckOptions& options,
                         std::ostream& os) {
  os << "problem " << summary.problem << ": " << summary.samples << " seeded samples (seed "
     << summary.seed << ")\n";
  os << "  max relative deviation vs finite differences: " << summary.max_rel_fd
     << " (tolerance " << options.fd_tol << ")\n";
  os << "  max relative deviation between engine paths:  " << summary.max_rel_paths
     << " (tolerance " << options.path_tol << ")\n";
  os << "  " << (summary.pass ? "PASS" : "FAIL") << "\n";

  nlohmann::json doc;
  doc["schema"] = "check/1";
  doc["problem"] = summary.problem;
  doc["samples"] = summary.samples;
  doc["seed"] = summary.seed;
  doc["max_rel_fd"] = summary.max_rel_fd;
  doc["max_rel_paths"] = summary.max_rel_paths;
  doc["tol_fd"] = options.fd_tol;
  doc["tol_paths"] = options.path_tol;
  doc["pass"] = summary.pass;
  os << doc.dump() << "\n";
}

}  // namespace cradjoint::tool
