#include "field_export.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "cradjoint/version.hpp"
#include "log.hpp"

namespace cradjoint::tool {

namespace {

using nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

json plane_to_json(const std::vector<std::vector<double>>& plane) {
  json rows = json::array();
  for (const auto& row : plane) {
    json cells = json::array();
    for (double v : row) {
      if (std::isnan(v)) {
        cells.push_back(nullptr);
      } else {
        cells.push_back(v);
      }
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::vector<std::vector<double>> plane_from_json(const json& rows) {
  std::vector<std::vector<double>> plane;
  for (const auto& row : rows) {
    std::vector<double> cells;
    for (const auto& v : row) {
      cells.push_back(v.is_null() ? kNan : v.get<double>());
    }
    plane.push_back(std::move(cells));
  }
  return plane;
}

int schema_major(const std::string& schema, const std::string& family) {
  const std::string prefix = family + "/";
  if (schema.rfind(prefix, 0) != 0) {
    throw std::invalid_argument("unexpected schema family: " + schema);
  }
  return std::stoi(schema.substr(prefix.size()));
}

}  // namespace

double AxisSpec::tick(std::size_t index) const {
  if (count <= 1) return min;
  return min + (max - min) * static_cast<double>(index) / static_cast<double>(count - 1);
}

FieldExport compute_gradient_field(const ProblemInstance& problem, const AxisSpec& x,
                                   const AxisSpec& y) {
  const ConstraintProblem& constraint = problem.constraint();
  const bool real_params = constraint.tangent_kind() == TangentSpaceKind::RealHilbert;
  if (real_params && constraint.param_dim() != 2) {
    throw std::invalid_argument("field export over a real domain needs two parameters");
  }
  if (!real_params && constraint.param_dim() != 1) {
    throw std::invalid_argument("field export over a complex domain needs a scalar parameter");
  }

  FieldExport field;
  field.problem = problem.name();
  field.x = x;
  field.y = y;
  field.cost.assign(y.count, std::vector<double>(x.count, kNan));
  field.grad_re = field.cost;
  field.grad_im = field.cost;

  std::size_t singular = 0;
  for (std::size_t iy = 0; iy < y.count; ++iy) {
    for (std::size_t ix = 0; ix < x.count; ++ix) {
      const double px = x.tick(ix);
      const double py = y.tick(iy);
      const ComplexVector p =
          real_params ? ComplexVector{px, py} : ComplexVector{Complex(px, py)};
      try {
        const GradientReport report = gradient_auto_at(constraint, problem.cost(), p);
        field.cost[iy][ix] = cost_at(constraint, problem.cost(), p);
        if (real_params) {
          field.grad_re[iy][ix] = report.grad[0].real();
          field.grad_im[iy][ix] = report.grad[1].real();
        } else {
          field.grad_re[iy][ix] = report.grad[0].real();
          field.grad_im[iy][ix] = report.grad[0].imag();
        }
        if (field.path_used.empty()) field.path_used = to_string(report.path);
      } catch (const NumericError&) {
        ++singular;  // leave the NaN marker in place
      }
    }
  }
  if (singular > 0) {
    log_info("field export: " + std::to_string(singular) + " singular grid points recorded as null");
  }
  return field;
}

void write_field_export(const FieldExport& field, std::ostream& os) {
  json doc;
  doc["schema"] = "fieldexport/1";
  doc["problem"] = field.problem;
  doc["axes"] = {
      {"x", {{"min", field.x.min}, {"max", field.x.max}, {"count", field.x.count}}},
      {"y", {{"min", field.y.min}, {"max", field.y.max}, {"count", field.y.count}}},
  };
  doc["cost"] = plane_to_json(field.cost);
  doc["grad_re"] = plane_to_json(field.grad_re);
  doc["grad_im"] = plane_to_json(field.grad_im);
  json nulls = json::array();
  for (std::size_t iy = 0; iy < field.cost.size(); ++iy) {
    for (std::size_t ix = 0; ix < field.cost[iy].size(); ++ix) {
      if (std::isnan(field.cost[iy][ix])) nulls.push_back(json::array({iy, ix}));
    }
  }
  doc["nulls"] = std::move(nulls);
  doc["meta"] = {{"path", field.path_used}, {"tool_version", kVersion}};
  os << doc.dump(2) << "\n";
}

void write_field_export_file(const FieldExport& field, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  write_field_export(field, os);
  if (!os.good()) throw std::runtime_error("failed writing output file: " + path);
}

FieldExport load_field_export(std::istream& is) {
  const json doc = json::parse(is);
  const int major = schema_major(doc.at("schema").get<std::string>(), "fieldexport");
  if (major != 1) {
    throw std::invalid_argument("unsupported fieldexport schema major " + std::to_string(major));
  }
  FieldExport field;
  field.problem = doc.at("problem").get<std::string>();
  const json& ax = doc.at("axes");
  field.x = {ax.at("x").at("min"), ax.at("x").at("max"), ax.at("x").at("count")};
  field.y = {ax.at("y").at("min"), ax.at("y").at("max"), ax.at("y").at("count")};
  field.cost = plane_from_json(doc.at("cost"));
  field.grad_re = plane_from_json(doc.at("grad_re"));
  field.grad_im = plane_from_json(doc.at("grad_im"));
  if (doc.contains("meta")) field.path_used = doc["meta"].value("path", "");
  return field;
}

FieldExport load_field_export_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open input file: " + path);
  return load_field_export(is);
}

}  // namespace cradjoint::tool
