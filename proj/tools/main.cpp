// Command-line front end: spectral reports for point-interaction operators.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pointint/config.hpp"
#include "pointint/errors.hpp"
#include "pointint/gamma.hpp"
#include "pointint/laurent.hpp"
#include "pointint/search.hpp"
#include "pointint/spectrum.hpp"
#include "pointint/zero_modes.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pointint;

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json matrix_json(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json basis_json(const ComplexMatrix& basis) {
  ordered_json cols = ordered_json::array();
  for (int j = 0; j < basis.cols(); ++j) {
    ordered_json vec = ordered_json::array();
    for (int i = 0; i < basis.rows(); ++i) vec.push_back(complex_json(basis(i, j)));
    cols.push_back(vec);
  }
  return cols;
}

ordered_json config_json(const Configuration& config) {
  ordered_json j;
  j["centers"] = ordered_json::array();
  for (const auto& y : config.centers) j["centers"].push_back({y.x(), y.y(), y.z()});
  j["alphas"] = config.alphas;
  if (!config.label.empty()) j["label"] = config.label;
  return j;
}

ordered_json bound_states_json(const SpectrumResult& spectrum) {
  ordered_json states = ordered_json::array();
  for (const auto& s : spectrum.states) {
    ordered_json state;
    state["lambda"] = s.lambda;
    state["energy"] = s.energy;
    state["multiplicity"] = s.multiplicity;
    state["coefficients"] = basis_json(s.coefficient_basis);
    states.push_back(state);
  }
  return states;
}

ordered_json zero_modes_json(const ZeroModeReport& report) {
  ordered_json z;
  z["e"] = report.e;
  z["r"] = report.r;
  z["kind"] = to_string(report.kind);
  z["bases"]["eigen"] = basis_json(report.eigen_basis);
  z["bases"]["resonance"] = basis_json(report.resonance_basis);
  z["borderline"] = report.borderline;
  return z;
}

ordered_json laurent_json(const LaurentExpansion& exp) {
  ordered_json l;
  l["a_minus2"] = matrix_json(exp.a_minus2);
  l["a_minus1"] = matrix_json(exp.a_minus1);
  l["method"] = to_string(exp.method);
  if (exp.discrepancy)
    l["discrepancy"] = *exp.discrepancy;
  else
    l["discrepancy"] = nullptr;
  return l;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IOFailure("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IOFailure("failed writing " + path);
}

void write_report(const std::string& path, const ordered_json& report) {
  write_text_file(path, report.dump(2) + "\n");
}

// Accepts either a registry spec like "tetrahedron(1)" or a file path.
Configuration resolve_config(const std::string& text, const std::vector<double>& alphas) {
  Configuration config;
  std::string name;
  std::vector<double> params;
  if (parse_registry_spec(text, name, params))
    config = registry_get(name, params);
  else
    config = load(text);
  if (!alphas.empty()) {
    if (alphas.size() != config.centers.size())
      throw ParseFailure("--alphas needs exactly one value per center");
    config.alphas = alphas;
    validate(config);
  }
  return config;
}

std::string format_complex(const Complex& z) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

void print_matrix(const std::string& name, const ComplexMatrix& m) {
  std::cout << name << " =\n";
  for (int i = 0; i < m.rows(); ++i) {
    std::cout << "  ";
    for (int j = 0; j < m.cols(); ++j) std::cout << format_complex(m(i, j)) << (j + 1 < m.cols() ? "  " : "");
    std::cout << "\n";
  }
}

void print_config(const Configuration& config) {
  std::cout << "configuration";
  if (!config.label.empty()) std::cout << " [" << config.label << "]";
  std::cout << ": N = " << config.size() << "\n";
  for (int j = 0; j < config.size(); ++j) {
    const auto& y = config.centers[j];
    std::printf("  y%-2d = (% .6g, % .6g, % .6g)   alpha = % .6g\n", j, y.x(), y.y(), y.z(),
                config.alphas[j]);
  }
}

void print_spectrum(const SpectrumResult& spectrum) {
  if (spectrum.states.empty()) {
    std::cout << "no negative eigenvalues\n";
  } else {
    std::cout << "bound states:\n";
    std::printf("  %-14s %-14s %s\n", "lambda", "energy", "multiplicity");
    for (const auto& s : spectrum.states)
      std::printf("  %-14.9g %-14.9g %d\n", s.lambda, s.energy, s.multiplicity);
  }
  for (const auto& d : spectrum.diagnostics) std::cout << "diagnostic: " << d << "\n";
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
  return values;
}

Vec3 parse_vec3(const std::string& text) {
  const auto v = parse_number_list(text);
  if (v.size() != 3) throw ParseFailure("expected x,y,z: " + text);
  return Vec3(v[0], v[1], v[2]);
}

int run(int argc, char** argv) {
  CLI::App app{"Low-energy spectral analysis of 3D Schroedinger operators with point interactions"};
  app.require_subcommand(1);

  std::string config_arg, out_path, alphas_arg;

  auto add_config_options = [&](CLI::App* cmd) {
    cmd->add_option("config", config_arg,
                    "configuration: registry spec like tetrahedron(1) or a JSON file path")
        ->required();
    cmd->add_option("--alphas", alphas_arg, "override couplings, comma separated");
  };

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full spectral + zero-energy report");
  add_config_options(analyze);
  double analyze_lambda_max = 0.0, analyze_tol = default_rank_tol;
  analyze->add_option("--lambda-max", analyze_lambda_max, "scan limit for bound states");
  analyze->add_option("--tol", analyze_tol, "relative rank tolerance");
  analyze->add_option("--out", out_path, "write a JSON report");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "negative eigenvalues");
  add_config_options(spectrum_cmd);
  double spectrum_lambda_max = 0.0;
  spectrum_cmd->add_option("--lambda-max", spectrum_lambda_max, "scan limit");
  spectrum_cmd->add_option("--out", out_path, "write a JSON report");

  // laurent
  auto* laurent_cmd = app.add_subcommand("laurent", "singular part of Gamma(z)^{-1} at z = 0");
  add_config_options(laurent_cmd);
  std::string method_arg = "both";
  double laurent_radius = 0.0;
  int laurent_nodes = 256;
  laurent_cmd->add_option("--method", method_arg, "closed|contour|both")
      ->check(CLI::IsMember({"closed", "contour", "both"}));
  laurent_cmd->add_option("--radius", laurent_radius, "starting contour radius");
  laurent_cmd->add_option("--nodes", laurent_nodes, "contour quadrature nodes");
  laurent_cmd->add_option("--out", out_path, "write a JSON report");

  // kernel
  auto* kernel_cmd = app.add_subcommand("kernel", "resolvent kernel value");
  add_config_options(kernel_cmd);
  std::string z_arg, x_arg, xp_arg;
  int grid_points = 0;
  kernel_cmd->add_option("--z", z_arg, "spectral parameter re,im")->required();
  kernel_cmd->add_option("--x", x_arg, "first point x,y,z")->required();
  kernel_cmd->add_option("--xp", xp_arg, "second point x,y,z")->required();
  kernel_cmd->add_option("--grid", grid_points, "sample count along the segment x -> xp");
  kernel_cmd->add_option("--out", out_path, "write CSV samples (with --grid)");

  // search
  auto* search_cmd = app.add_subcommand("search", "maximize the zero-eigenvalue multiplicity");
  int search_n = 3, search_budget = 10000;
  std::uint64_t search_seed = 1;
  search_cmd->add_option("--n", search_n, "number of centers")->required();
  search_cmd->add_option("--budget", search_budget, "annealing iterations");
  search_cmd->add_option("--seed", search_seed, "random seed");
  search_cmd->add_option("--out", out_path, "write a JSON report");

  // registry
  auto* registry_cmd = app.add_subcommand("registry", "benchmark configurations");
  auto* registry_list = registry_cmd->add_subcommand("list", "list entries");
  auto* registry_show = registry_cmd->add_subcommand("show", "print one entry as JSON");
  std::string show_arg;
  registry_show->add_option("name", show_arg, "registry spec, e.g. tetrahedron(1)")->required();
  registry_cmd->require_subcommand(1);

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "smallest singular value of Gamma(z) on a real grid");
  add_config_options(scan_cmd);
  std::string range_arg = "0.01,10";
  int scan_points = 1000;
  scan_cmd->add_option("--range", range_arg, "z_min,z_max");
  scan_cmd->add_option("--points", scan_points, "grid size");
  scan_cmd->add_option("--out", out_path, "write CSV of the scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  const std::vector<double> alpha_override =
      alphas_arg.empty() ? std::vector<double>{} : parse_number_list(alphas_arg);

  if (analyze->parsed()) {
    const Configuration config = resolve_config(config_arg, alpha_override);
    print_config(config);
    const SpectrumResult spectrum = find_negative_eigenvalues(config, analyze_lambda_max, analyze_tol);
    const ZeroModeReport zero = classify_zero_energy(config, analyze_tol);
    const LaurentExpansion laurent = compute_laurent(config, LaurentMethod::both, analyze_tol);
    print_spectrum(spectrum);
    std::cout << "zero-energy: e = " << zero.e << ", r = " << zero.r << " (" << to_string(zero.kind)
              << (zero.borderline ? ", borderline" : "") << ")\n";
    if (laurent.discrepancy)
      std::printf("laurent: %s, closed vs contour discrepancy %.3g\n", to_string(laurent.kind),
                  *laurent.discrepancy);
    if (!out_path.empty()) {
      ordered_json report;
      report["config"] = config_json(config);
      report["bound_states"] = bound_states_json(spectrum);
      report["zero_modes"] = zero_modes_json(zero);
      report["laurent"] = laurent_json(laurent);
      ordered_json diag = ordered_json::array();
      for (const auto& d : spectrum.diagnostics) diag.push_back(d);
      for (const auto& n : laurent.notes) diag.push_back(n);
      report["diagnostics"] = diag;
      write_report(out_path, report);
    }
    return 0;
  }

  if (spectrum_cmd->parsed()) {
    const Configuration config = resolve_config(config_arg, alpha_override);
    print_config(config);
    const SpectrumResult spectrum = find_negative_eigenvalues(config, spectrum_lambda_max);
    print_spectrum(spectrum);
    if (!out_path.empty()) {
      ordered_json report;
      report["config"] = config_json(config);
      report["bound_states"] = bound_states_json(spectrum);
      ordered_json diag = ordered_json::array();
      for (const auto& d : spectrum.diagnostics) diag.push_back(d);
      report["diagnostics"] = diag;
      write_report(out_path, report);
    }
    return 0;
  }

  if (laurent_cmd->parsed()) {
    const Configuration config = resolve_config(config_arg, alpha_override);
    print_config(config);
    LaurentMethod method = LaurentMethod::both;
    if (method_arg == "closed") method = LaurentMethod::closed_form;
    if (method_arg == "contour") method = LaurentMethod::contour;
    const LaurentExpansion exp =
        compute_laurent(config, method, default_rank_tol, laurent_radius, laurent_nodes);
    std::cout << "case: " << to_string(exp.kind) << ", method: " << to_string(exp.method) << "\n";
    print_matrix("A_-2", exp.a_minus2);
    print_matrix("A_-1", exp.a_minus1);
    if (exp.discrepancy)
      std::printf("max discrepancy (comparable coefficients): %.3g\n", *exp.discrepancy);
    for (const auto& n : exp.notes) std::cout << "note: " << n << "\n";
    if (!out_path.empty()) {
      ordered_json report;
      report["config"] = config_json(config);
      report["laurent"] = laurent_json(exp);
      ordered_json diag = ordered_json::array();
      for (const auto& n : exp.notes) diag.push_back(n);
      report["diagnostics"] = diag;
      write_report(out_path, report);
    }
    return 0;
  }

  if (kernel_cmd->parsed()) {
    const Configuration config = resolve_config(config_arg, alpha_override);
    const auto zv = parse_number_list(z_arg);
    if (zv.size() != 2) throw ParseFailure("--z expects re,im");
    const Complex z(zv[0], zv[1]);
    const Vec3 x = parse_vec3(x_arg);
    const Vec3 xp = parse_vec3(xp_arg);
    const Complex value = resolvent_kernel(config, z, x, xp);
    std::cout << "kernel(" << format_complex(z) << "; x, x') = " << format_complex(value) << "\n";
    if (grid_points > 0 && !out_path.empty()) {
      std::ostringstream csv;
      csv << "t,x1,x2,x3,re,im\n";
      for (int i = 0; i < grid_points; ++i) {
        const double t = static_cast<double>(i) / grid_points;
        const Vec3 xt = x + t * (xp - x);
        char line[256];
        try {
          const Complex k = resolvent_kernel(config, z, xt, xp);
          std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t, xt.x(),
                        xt.y(), xt.z(), k.real(), k.imag());
        } catch (const Error&) {
          std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,nan,nan\n", t, xt.x(), xt.y(),
                        xt.z());
        }
        csv << line;
      }
      write_text_file(out_path, csv.str());
      std::cout << "wrote " << grid_points << " samples to " << out_path << "\n";
    }
    return 0;
  }

  if (search_cmd->parsed()) {
    const SearchResult result = maximize_zero_multiplicity(search_n, search_budget, search_seed);
    std::cout << "best found: e = " << result.e << ", r = " << result.r
              << " (objective " << result.objective << ", " << result.iterations << " iterations)\n";
    print_config(result.config);
    if (!out_path.empty()) {
      ordered_json report;
      report["config"] = config_json(result.config);
      report["e"] = result.e;
      report["r"] = result.r;
      report["objective"] = result.objective;
      report["seed"] = result.seed;
      report["iterations"] = result.iterations;
      write_report(out_path, report);
    }
    return 0;
  }

  if (registry_list->parsed()) {
    for (const auto& entry : registry_entries())
      std::printf("%-22s %d param(s)  %s\n", entry.name.c_str(), entry.parameter_count,
                  entry.synopsis.c_str());
    return 0;
  }

  if (registry_show->parsed()) {
    std::string name;
    std::vector<double> params;
    if (!parse_registry_spec(show_arg, name, params)) {
      name = show_arg;
      params.clear();
    }
    const Configuration config = registry_get(name, params);
    std::cout << to_json_string(config) << "\n";
    return 0;
  }

  if (scan_cmd->parsed()) {
    const Configuration config = resolve_config(config_arg, alpha_override);
    const auto range = parse_number_list(range_arg);
    if (range.size() != 2) throw ParseFailure("--range expects z_min,z_max");
    const ScanResult result = scan_real_axis(config, range[0], range[1], scan_points);
    std::printf("min singular value %.6g at z = %.6g over [%g, %g] with %d points\n",
                result.min_singular_value, result.argmin, range[0], range[1], scan_points);
    if (!out_path.empty()) {
      std::ostringstream csv;
      csv << "z,sigma_min\n";
      for (size_t i = 0; i < result.grid.size(); ++i) {
        char line[128];
        std::snprintf(line, sizeof(line), "%.17g,%.17g\n", result.grid[i],
                      result.singular_values[i]);
        csv << line;
      }
      write_text_file(out_path, csv.str());
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BadParameterCount& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
