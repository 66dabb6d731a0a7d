#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cradjoint/version.hpp"
#include "check_run.hpp"
#include "complex_arg.hpp"
#include "field_export.hpp"
#include "inverse_run.hpp"
#include "log.hpp"
#include "problem_registry.hpp"

namespace tool = cradjoint::tool;

namespace {

struct GridArg {
  std::size_t nx = 41;
  std::size_t ny = 41;
};

GridArg parse_grid(const std::string& text) {
  const auto sep = text.find('x');
  if (sep == std::string::npos) throw CLI::ValidationError("--grid expects NXxNY, e.g. 41x41");
  GridArg grid;
  grid.nx = std::stoul(text.substr(0, sep));
  grid.ny = std::stoul(text.substr(sep + 1));
  if (grid.nx < 2 || grid.ny < 2) throw CLI::ValidationError("--grid counts must be at least 2");
  return grid;
}

void parse_range(const std::string& text, double& x0, double& x1, double& y0, double& y1) {
  // Format: x0:x1,y0:y1
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--range expects x0:x1,y0:y1");
  const std::string xs = text.substr(0, comma);
  const std::string ys = text.substr(comma + 1);
  const auto cx = xs.find(':');
  const auto cy = ys.find(':');
  if (cx == std::string::npos || cy == std::string::npos) {
    throw CLI::ValidationError("--range expects x0:x1,y0:y1");
  }
  x0 = std::stod(xs.substr(0, cx));
  x1 = std::stod(xs.substr(cx + 1));
  y0 = std::stod(ys.substr(0, cy));
  y1 = std::stod(ys.substr(cy + 1));
  if (!(x0 < x1) || !(y0 < y1)) throw CLI::ValidationError("--range bounds must increase");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steepest-ascent gradients for complex constrained problems"};
  app.set_version_flag("--version", std::string(cradjoint::kVersion));
  app.require_subcommand(1);

  // Shared options.
  std::string problem_name;
  std::string grid_text = "41x41";
  std::string range_text;
  std::string out_path;
  std::size_t resolution = 120;
  std::size_t truth_resolution = 1000;
  std::string p_true_text = "0.5+0.5i";
  std::string p0_text = "0";
  int samples = 20;
  std::uint64_t seed = 7;
  std::vector<std::string> methods;

  CLI::App* gradfield = app.add_subcommand(
      "gradfield", "Export cost and gradient values over a parameter-plane grid as JSON");
  gradfield->add_option("--problem", problem_name, "Problem: ex1, ex2 or helmholtz")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2", "helmholtz"}));
  gradfield->add_option("--grid", grid_text, "Grid counts NXxNY (default 41x41)");
  gradfield->add_option("--range", range_text, "Axis bounds x0:x1,y0:y1 (default per problem)");
  gradfield->add_option("--n", resolution, "Helmholtz working resolution");
  gradfield->add_option("--truth-n", truth_resolution, "Helmholtz target-grid resolution");
  gradfield->add_option("--p-true", p_true_text, "Helmholtz target-generating parameter");
  gradfield->add_option("--out", out_path, "Output JSON path")->required();

  CLI::App* check = app.add_subcommand(
      "check", "Verify engine gradients against finite differences at seeded random points");
  check->add_option("--problem", problem_name, "Problem: ex1, ex2 or helmholtz")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2", "helmholtz"}));
  check->add_option("--samples", samples, "Number of sampled parameter points")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "Sampling seed");
  check->add_option("--n", resolution, "Helmholtz working resolution");
  check->add_option("--truth-n", truth_resolution, "Helmholtz target-grid resolution");
  check->add_option("--p-true", p_true_text, "Helmholtz target-generating parameter");

  CLI::App* inverse = app.add_subcommand(
      "inverse", "Solve the Helmholtz boundary-data inverse problem and report per-method stats");
  inverse->add_option("--n", resolution, "Working resolution (default 120)");
  inverse->add_option("--truth-n", truth_resolution, "Target-grid resolution (default 1000)");
  inverse->add_option("--method", methods, "Gradient source: adjoint or fd (repeatable)")
      ->check(CLI::IsMember({"adjoint", "fd"}));
  inverse->add_option("--p-true", p_true_text, "True parameter (default 0.5+0.5i)");
  inverse->add_option("--p0", p0_text, "Initial parameter (default 0)");
  inverse->add_option("--out", out_path, "Optional output JSON path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gradfield->parsed()) {
      tool::HelmholtzOptions helm{resolution, truth_resolution, 4.0,
                                  tool::parse_complex(p_true_text)};
      const tool::ProblemInstance instance = tool::ProblemInstance::make(problem_name, helm);
      const GridArg grid = parse_grid(grid_text);
      double x0, x1, y0, y1;
      instance.default_range(x0, x1, y0, y1);
      if (!range_text.empty()) parse_range(range_text, x0, x1, y0, y1);
      const tool::FieldExport field = tool::compute_gradient_field(
          instance, {x0, x1, grid.nx}, {y0, y1, grid.ny});
      try {
        tool::write_field_export_file(field, out_path);
      } catch (const std::exception& e) {
        tool::log_error(e.what());
        return 2;
      }
      tool::log_info("wrote " + out_path);
      return 0;
    }

    if (check->parsed()) {
      tool::HelmholtzOptions helm{resolution, truth_resolution, 4.0,
                                  tool::parse_complex(p_true_text)};
      const tool::ProblemInstance instance = tool::ProblemInstance::make(problem_name, helm);
      tool::CheckOptions options;
      options.samples = samples;
      options.seed = seed;
      const tool::CheckSummary summary = tool::run_check(instance, options);
      tool::print_check_summary(summary, options, std::cout);
      return summary.pass ? 0 : 1;
    }

    if (inverse->parsed()) {
      tool::InverseOptions options;
      options.resolution = resolution;
      options.truth_resolution = truth_resolution;
      options.p_true = tool::parse_complex(p_true_text);
      options.p0 = tool::parse_complex(p0_text);
      if (!methods.empty()) options.methods = methods;
      const tool::InverseReportData report = tool::run_inverse(options);
      tool::print_inverse_report(report, std::cout);
      if (!out_path.empty()) {
        tool::write_inverse_report_file(report, out_path);
        tool::log_info("wrote " + out_path);
      }
      return report.all_within_gate() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    tool::log_error(e.what());
    return 1;
  }
  return 0;
}
