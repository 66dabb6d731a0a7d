#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cradjoint/optimize.hpp"

namespace cradjoint::tool {

struct InverseOptions {
  std::size_t resolution = 120;
  std::size_t truth_resolution = 1000;
  double k2 = 4.0;
  Complex p_true{0.5, 0.5};
  Complex p0{0.0, 0.0};
  std::vector<std::string> methods{"adjoint", "fd"};  // gradient sources
  double cost_gate = 1e-6;  // per-method pass threshold for the exit code
};

struct InverseRow {
  std::string method;
  std::size_t n_cost_evals = 0;
  Complex final_p;
  double final_cost = 0.0;
  std::size_t n_grad_evals = 0;
  std::size_t iterations = 0;
  std::string termination;
};

struct InverseReportData {
  InverseOptions options;
  std::vector<InverseRow> rows;

  bool all_within_gate() const;
};

/// Generate endpoint targets on the truth grid at p_true, then run a BFGS
/// inversion on the working grid once per requested gradient source.
InverseReportData run_inverse(const InverseOptions& options);

void print_inverse_report(const InverseReportData& report, std::ostream& os);
void write_inverse_report(const InverseReportData& report, std::ostream& os);
void write_inverse_report_file(const InverseReportData& report, const std::string& path);
InverseReportData load_inverse_report(std::istream& is);

}  // namespace cradjoint::tool
