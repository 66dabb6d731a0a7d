#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "problem_registry.hpp"

namespace cradjoint::tool {

struct CheckOptions {
  int samples = 20;
  std::uint64_t seed = 7;
  double fd_tol = 1e-5;    // engine vs finite differences, relative
  double path_tol = 1e-9;  // engine path vs engine path, relative
};

struct CheckSummary {
  std::string problem;
  int samples = 0;
  std::uint64_t seed = 0;
  double max_rel_fd = 0.0;      // auto path vs central differences
  double max_rel_paths = 0.0;   // worst pairwise deviation between engine paths
  bool pass = false;
};

/// Draw seeded parameters from the admissible domain and compare the engine
/// gradient against the finite-difference oracle plus every alternative
/// engine path.
CheckSummary run_check(const ProblemInstance& problem, const CheckOptions& options);

/// Human-readable lines followed by a one-line JSON summary.
void print_check_summary(const CheckSummary& summary, const CheckOptions& options,
                         std::ostream& os);

}  // namespace cradjoint::tool
