#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "location/instance_io.hpp"
#include "location/oracle.hpp"
#include "location/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitInternal = 3;

location::GridSpec parse_window(const std::string& arg, double step) {
  location::GridSpec spec;
  spec.step = step;
  int consumed = 0;
  const int fields =
      std::sscanf(arg.c_str(), "%lf,%lf,%lf,%lf%n", &spec.x1_min, &spec.x1_max,
                  &spec.x2_min, &spec.x2_max, &consumed);
  if (fields != 4 || consumed != static_cast<int>(arg.size()) || !spec.valid()) {
    throw location::ParseError(
        "window: expected x1min,x1max,x2min,x2max with x1min <= x1max and "
        "x2min <= x2max");
  }
  return spec;
}

void print_summary(const location::InstanceFile& file,
                   const location::SolutionReport& report,
                   const std::optional<location::VerificationVerdict>& verdict) {
  const location::Point x = report.point(file.alpha);
  std::cerr << "points: " << file.instance.points.size()
            << (file.instance.constraint ? " (constrained)" : " (unconstrained)")
            << "\n";
  std::cerr << "lambda = " << report.lambda;
  if (report.lambda0) std::cerr << ", lambda0 = " << *report.lambda0;
  std::cerr << ", case " << location::to_string(report.case_tag)
            << (report.exact ? ", exact" : ", approximate") << "\n";
  std::cerr << "x(" << file.alpha << ") = (" << x[0] << ", " << x[1] << ")\n";
  if (verdict) {
    std::cerr << "audit: " << (verdict->pass ? "pass" : "fail")
              << ", grid min " << verdict->grid_min << ", gap "
              << verdict->grid_gap << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the weighted minimax rectilinear location problem"};
  app.require_subcommand(1);

  std::string file_path;
  double alpha = 0.5;
  bool audit = false;
  double step = 0.05;
  std::string contours_path;
  std::string window_arg;
  bool verbose = false;

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("file", file_path, "Instance file (JSON)")->required();
  CLI::Option* alpha_opt = solve->add_option(
      "--alpha", alpha, "Solution parameter in [0,1]; overrides the file value");
  solve->add_flag("--audit", audit, "Check the report against the grid oracle");
  CLI::Option* step_opt = solve->add_option(
      "--step", step, "Grid step for --audit and --contours (default 0.05)");
  CLI::Option* contours_opt = solve->add_option(
      "--contours", contours_path, "Write CSV samples of phi, phi1, psi here");
  CLI::Option* window_opt = solve->add_option(
      "--window", window_arg, "Contour window as x1min,x1max,x2min,x2max");
  solve->add_flag("--verbose", verbose, "Human-readable summary on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    location::InstanceFile file = location::load_instance(file_path);
    if (alpha_opt->count() > 0) {
      if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw location::ParseError("alpha: value outside [0, 1]");
      }
      file.alpha = alpha;
    }
    if (step_opt->count() > 0 && !(step > 0.0)) {
      throw location::ParseError("step: positive value required");
    }

    const location::SolutionReport report =
        location::solve_constrained(file.instance, file.alpha);

    double grid_step = file.audit ? file.audit->step : 0.05;
    if (step_opt->count() > 0) grid_step = step;

    std::optional<location::VerificationVerdict> verdict;
    if (audit || file.audit) {
      const location::GridSpec grid =
          location::audit_window(file.instance, report, grid_step);
      verdict = location::verify_report(file.instance, report, grid);
    }

    if (contours_opt->count() > 0) {
      if (window_opt->count() == 0) {
        throw location::ParseError("contours: --window is required");
      }
      const location::GridSpec window = parse_window(window_arg, grid_step);
      location::write_contours(file.instance, report, window, contours_path);
    }

    std::cout << location::report_to_json(file, report, verdict);
    if (verbose) print_summary(file, report, verdict);
    return kExitOk;
  } catch (const location::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const location::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
