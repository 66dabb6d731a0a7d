#include "inverse_run.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "cradjoint/problems.hpp"
#include "complex_arg.hpp"
#include "log.hpp"

namespace cradjoint::tool {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) { return {j.at("re"), j.at("im")}; }

}  // namespace

bool InverseReportData::all_within_gate() const {
  for (const auto& row : rows) {
    if (!(row.final_cost <= options.cost_gate)) return false;
  }
  return !rows.empty();
}

InverseReportData run_inverse(const InverseOptions& options) {
  if (options.resolution < 4) throw std::invalid_argument("resolution must be at least 4");
  if (options.truth_resolution < options.resolution) {
    throw std::invalid_argument("truth resolution must be at least the working resolution");
  }
  for (const auto& method : options.methods) {
    if (method != "adjoint" && method != "fd") {
      throw std::invalid_argument("unknown method: " + method + " (expected adjoint or fd)");
    }
  }

  log_info("generating targets on the truth grid (resolution " +
           std::to_string(options.truth_resolution) + ")");
  const HelmholtzProblem problem = HelmholtzProblem::with_generated_targets(
      options.resolution, options.truth_resolution, options.k2, options.p_true);

  InverseReportData report;
  report.options = options;
  for (const auto& method : options.methods) {
    OptimizerConfig cfg;
    cfg.method = OptimizeMethod::Bfgs;
    cfg.gradient_source =
        method == "adjoint" ? GradientSource::Adjoint : GradientSource::FiniteDifference;
    const OptimizerRun run = minimize(problem, problem, {options.p0}, cfg);

    InverseRow row;
    row.method = method;
    row.n_cost_evals = run.n_cost_evals;
    row.final_p = run.final_p[0];
    row.final_cost = run.final_cost;
    row.n_grad_evals = run.n_grad_evals;
    row.iterations = run.trace.empty() ? 0 : run.trace.size() - 1;
    row.termination = to_string(run.termination);
    report.rows.push_back(row);
    log_info("method " + method + ": final p " + format_complex(row.final_p) + ", cost " +
             std::to_string(row.final_cost));
  }
  return report;
}

void print_inverse_report(const InverseReportData& report, std::ostream& os) {
  os << "Helmholtz inverse problem: resolution " << report.options.resolution << ", truth "
     << report.options.truth_resolution << ", k^2 " << report.options.k2 << "\n";
  os << "true p " << format_complex(report.options.p_true) << ", start "
     << format_complex(report.options.p0) << "\n";
  os << "method    cost-evals  grad-evals  final p                       final cost\n";
  for (const auto& row : report.rows) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-9s %10zu  %10zu  %-28s  %.6e", row.method.c_str(),
                  row.n_cost_evals, row.n_grad_evals, format_complex(row.final_p).c_str(),
                  row.final_cost);
    os << line << "  (" << row.termination << ")\n";
  }
}

void write_inverse_report(const InverseReportData& report, std::ostream& os) {
  json doc;
  doc["schema"] = "inverse/1";
  doc["truth_p"] = complex_to_json(report.options.p_true);
  json rows = json::array();
  json details = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"method", row.method},
                    {"n_cost_evals", row.n_cost_evals},
                    {"final_p", complex_to_json(row.final_p)},
                    {"final_cost", row.final_cost}});
    details.push_back({{"method", row.method},
                       {"n_grad_evals", row.n_grad_evals},
                       {"iterations", row.iterations},
                       {"termination", row.termination}});
  }
  doc["rows"] = std::move(rows);
  doc["details"] = std::move(details);
  doc["config"] = {{"n", report.options.resolution},
                   {"truth_n", report.options.truth_resolution},
                   {"k2", report.options.k2},
                   {"p0", complex_to_json(report.options.p0)},
                   {"methods", report.options.methods},
                   {"cost_gate", report.options.cost_gate}};
  os << doc.dump(2) << "\n";
}

void write_inverse_report_file(const InverseReportData& report, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  write_inverse_report(report, os);
  if (!os.good()) throw std::runtime_error("failed writing output file: " + path);
}

InverseReportData load_inverse_report(std::istream& is) {
  const json doc = json::parse(is);
  const std::string schema = doc.at("schema").get<std::string>();
  if (schema.rfind("inverse/", 0) != 0) {
    throw std::invalid_argument("unexpected schema family: " + schema);
  }
  if (std::stoi(schema.substr(8)) != 1) {
    throw std::invalid_argument("unsupported inverse schema major");
  }
  InverseReportData report;
  report.options.p_true = complex_from_json(doc.at("truth_p"));
  if (doc.contains("config")) {
    const json& cfg = doc["config"];
    report.options.resolution = cfg.value("n", std::size_t{120});
    report.options.truth_resolution = cfg.value("truth_n", std::size_t{1000});
    report.options.k2 = cfg.value("k2", 4.0);
    if (cfg.contains("p0")) report.options.p0 = complex_from_json(cfg["p0"]);
  }
  for (const auto& row : doc.at("rows")) {
    InverseRow r;
    r.method = row.at("method").get<std::string>();
    r.n_cost_evals = row.at("n_cost_evals").get<std::size_t>();
    r.final_p = complex_from_json(row.at("final_p"));
    r.final_cost = row.at("final_cost").get<double>();
    report.rows.push_back(r);
  }
  return report;
}

}  // namespace cradjoint::tool
