#pragma once

#include <memory>
#include <random>
#include <string>

#include "cradjoint/problems.hpp"

namespace cradjoint::tool {

/// Options the Helmholtz instance needs; ignored by other problems.
struct HelmholtzOptions {
  std::size_t resolution = 120;
  std::size_t truth_resolution = 1000;
  double k2 = 4.0;
  Complex p_true{0.5, 0.5};
};

/// A constructed example problem with both of its facets.
class ProblemInstance {
 public:
  static ProblemInstance make(const std::string& name, const HelmholtzOptions& helm = {});

  const std::string& name() const { return name_; }
  const ConstraintProblem& constraint() const { return *constraint_; }
  const CostProblem& cost() const { return *cost_; }

  /// Default plotting/sampling box [x0, x1] x [y0, y1], axes being the two
  /// real parameters (ex1) or (Re p, Im p).
  void default_range(double& x0, double& x1, double& y0, double& y1) const;

  /// Seeded uniform draw from the admissible domain. The ex2 draw rejects
  /// parameters whose matrix condition estimate exceeds 1e8.
  ComplexVector sample_parameter(std::mt19937_64& rng) const;

 private:
  std::string name_;
  std::shared_ptr<void> owner_;
  const ConstraintProblem* constraint_ = nullptr;
  const CostProblem* cost_ = nullptr;
};

}  // namespace cradjoint::tool
