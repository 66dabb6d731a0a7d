#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "problem_registry.hpp"

namespace cradjoint::tool {

struct AxisSpec {
  double min = -0.5;
  double max = 0.5;
  std::size_t count = 41;

  double tick(std::size_t index) const;
};

/// Cost and gradient components sampled over a parameter-plane grid.
/// Matrices are indexed [iy][ix]; NaN entries mark grid points where the
/// state solve is singular. For a complex scalar parameter the two gradient
/// planes hold Re and Im of the gradient; for ex1 they hold the two real
/// components.
struct FieldExport {
  std::string problem;
  std::string path_used;
  AxisSpec x;
  AxisSpec y;
  std::vector<std::vector<double>> cost;
  std::vector<std::vector<double>> grad_re;
  std::vector<std::vector<double>> grad_im;
};

FieldExport compute_gradient_field(const ProblemInstance& problem, const AxisSpec& x,
                                   const AxisSpec& y);

/// Deterministic serialization: sorted keys, shortest round-trip floats,
/// NaN cells written as JSON null and indexed in "nulls" as [row, col].
void write_field_export(const FieldExport& field, std::ostream& os);
void write_field_export_file(const FieldExport& field, const std::string& path);

/// Rejects documents whose schema major version is not 1.
FieldExport load_field_export(std::istream& is);
FieldExport load_field_export_file(const std::string& path);

}  // namespace cradjoint::tool
