// Command-line front end; talks to the library through the C interface only.
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "axiflow/axiflow.h"

namespace {

struct RunOptions {
  std::string scheme = "E";
  std::string quadrature;  // empty: scheme default
  std::string constraints = "area_volume";
  std::string shape = "semicircle";
  std::string out = "axiflow_out";
  int J = 64;
  double dt = 1e-3;
  double T = 1.0;
  double kappa_bar = 0.0;
  double alpha = 1.0;
  double xi = 1.0;
  double rho_hat_0 = 0.0;
  double rho_hat_1 = 0.0;
  int every = 1;
  int snapshot_every = 0;
  int n_theta = 64;
};

struct ConvergeOptions {
  std::vector<int> J = {32, 64, 128, 256};
  double kappa_bar = -1.0;
  double r0 = 1.0;
  double T = 1.0;
  std::string out;
};

int fail(const std::string& what, axf_status s) {
  std::cerr << "error: " << what << ": " << axf_status_string(s) << ": " << axf_last_error() << "\n";
  std::cerr << "termination=error\n";
  return 2;
}

std::string join(const std::filesystem::path& dir, const std::string& name) { return (dir / name).string(); }

// Replaces `run --config FILE` by the file's `key = value` entries spelled as
// long flags, placed before the explicit flags so that those take precedence.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args.front() != "run") return args;
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string file;
    std::size_t used = 0;
    if (args[i] == "--config" && i + 1 < args.size()) {
      file = args[i + 1];
      used = 2;
    } else if (args[i].rfind("--config=", 0) == 0) {
      file = args[i].substr(9);
      used = 1;
    } else {
      continue;
    }
    std::ifstream in(file);
    if (!in) throw CLI::FileError::Missing(file);
    std::vector<std::string> flags;
    for (const auto& item : CLI::ConfigINI().from_config(in)) {
      if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == "default"))
        throw CLI::ConfigError("sections are not supported in " + file + ": " + item.fullname());
      if (item.name == "++" || item.name == "--") continue;
      flags.push_back("--" + item.name);
      flags.insert(flags.end(), item.inputs.begin(), item.inputs.end());
    }
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + used));
    args.insert(args.begin() + 1, flags.begin(), flags.end());
    break;
  }
  return args;
}

int do_run(const RunOptions& o) {
  axf_run_config cfg;
  axf_run_config_init(&cfg);
  if (auto s = axf_flow_from_string(o.scheme.c_str(), &cfg.flow); s != AXF_OK) return fail("scheme", s);
  const bool mean_based = cfg.flow == AXF_FLOW_F || cfg.flow == AXF_FLOW_F_STAR || cfg.flow == AXF_FLOW_I_STAR;
  const std::string quad = o.quadrature.empty() ? (mean_based ? "exact" : "lumped") : o.quadrature;
  if (auto s = axf_quadrature_from_string(quad.c_str(), &cfg.quadrature); s != AXF_OK) return fail("quadrature", s);
  if (auto s = axf_constraints_from_string(o.constraints.c_str(), &cfg.constraints); s != AXF_OK)
    return fail("constraints", s);
  if (cfg.flow == AXF_FLOW_F && cfg.quadrature == AXF_QUAD_LUMPED)
    std::cerr << "warning: the lumped linear F scheme is not robust; element ratios may blow up\n";
  cfg.dt = o.dt;
  cfg.T = o.T;
  cfg.kappa_bar = o.kappa_bar;
  cfg.alpha = o.alpha;
  cfg.xi = o.xi;
  cfg.rho_hat[0] = o.rho_hat_0;
  cfg.rho_hat[1] = o.rho_hat_1;
  cfg.every = o.every;
  cfg.snapshot_every = o.snapshot_every;

  axf_curve* initial = nullptr;
  if (auto s = axf_curve_from_shape(o.shape.c_str(), o.J, &initial); s != AXF_OK) return fail("shape", s);
  axf_run* run = nullptr;
  const axf_status s = axf_run_flow(initial, &cfg, &run);
  axf_curve_free(initial);
  if (s != AXF_OK) return fail("run", s);

  const std::filesystem::path dir(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    axf_run_free(run);
    std::cerr << "error: cannot create output directory '" << o.out << "': " << ec.message() << "\n";
    std::cerr << "termination=error\n";
    return 2;
  }
  axf_status ws = axf_run_write_diagnostics(run, join(dir, "diagnostics.csv").c_str());
  for (int i = 0; ws == AXF_OK && i < axf_run_snapshot_count(run); ++i) {
    axf_curve* snap = nullptr;
    ws = axf_run_snapshot(run, i, &snap);
    if (ws != AXF_OK) break;
    char name[64];
    std::snprintf(name, sizeof name, "profile_%05d.csv", i);
    ws = axf_curve_write_profile(snap, join(dir, name).c_str());
    axf_curve_free(snap);
  }
  axf_curve* final_curve = nullptr;
  if (ws == AXF_OK) ws = axf_run_final_curve(run, &final_curve);
  if (ws == AXF_OK) ws = axf_curve_write_profile(final_curve, join(dir, "final_profile.csv").c_str());
  if (ws == AXF_OK) ws = axf_curve_write_obj(final_curve, join(dir, "final.obj").c_str(), o.n_theta);
  if (ws != AXF_OK) {
    axf_curve_free(final_curve);
    axf_run_free(run);
    return fail("output", ws);
  }

  double area = 0.0, volume = 0.0, ratio = 0.0;
  axf_curve_measures(final_curve, &area, &volume, &ratio);
  const axf_termination term = axf_run_termination(run);
  std::printf("scheme            %s (%s)\n", axf_flow_name(cfg.flow), quad.c_str());
  std::printf("shape             %s, J=%d\n", o.shape.c_str(), o.J);
  std::printf("termination       %s: %s\n", axf_run_termination_name(run), axf_run_message(run));
  std::printf("steps             %d\n", axf_run_steps(run));
  std::printf("final time        %.10g\n", axf_curve_time(final_curve));
  std::printf("area              %.10g\n", area);
  std::printf("volume            %.10g\n", volume);
  std::printf("element ratio     %.6g\n", ratio);
  std::printf("volume change     %.6f%%\n", 100.0 * axf_run_relative_volume_change(run));
  if (cfg.flow == AXF_FLOW_F_STAR || cfg.flow == AXF_FLOW_I_STAR)
    std::printf("stability         %d violations\n", axf_run_stability_violations(run));
  if (cfg.flow == AXF_FLOW_F_STAR || cfg.flow == AXF_FLOW_I_STAR || cfg.flow == AXF_FLOW_HELFRICH)
    std::printf("max Newton iters  %d\n", axf_run_max_newton_iterations(run));
  if (cfg.flow == AXF_FLOW_HELFRICH)
    std::printf("max drift         area %.3e, volume %.3e\n", axf_run_max_area_drift(run),
                axf_run_max_volume_drift(run));
  if (cfg.flow == AXF_FLOW_WILLMORE || cfg.flow == AXF_FLOW_HELFRICH) {
    axf_diagnostics_row last;
    axf_run_row(run, axf_run_row_count(run) - 1, &last);
    std::printf("Willmore energy   %.6f\n", last.Wh);
  }
  std::printf("output            %s\n", o.out.c_str());
  std::cerr << "termination=" << axf_run_termination_name(run) << " t=" << axf_curve_time(final_curve)
            << " steps=" << axf_run_steps(run) << "\n";
  axf_curve_free(final_curve);
  axf_run_free(run);
  return term == AXF_TERMINATION_SOLVER_FAILURE ? 3 : 0;
}

int do_converge(const ConvergeOptions& o) {
  std::vector<axf_convergence_row> rows(o.J.size());
  if (auto s = axf_converge(o.J.data(), static_cast<int>(o.J.size()), o.kappa_bar, o.r0, o.T, rows.data());
      s != AXF_OK)
    return fail("converge", s);
  std::string csv = "J,h,dt,error,eoc,final_time,steps\n";
  std::printf("%6s %12s %12s %10s %12s\n", "J", "h", "error", "EOC", "final t");
  for (const auto& r : rows) {
    char eoc[32] = "-";
    if (!std::isnan(r.eoc)) std::snprintf(eoc, sizeof eoc, "%.6f", r.eoc);
    std::printf("%6d %12.4e %12.4e %10s %12.8f\n", r.J, r.h, r.error, eoc, r.final_time);
    char line[256];
    std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", r.J, r.h, r.dt, r.error, r.eoc,
                  r.final_time, r.steps);
    csv += line;
  }
  std::printf("errors are max over steps of ||X|-r(t_m)| at the achieved times t_m (last t_m >= T)\n");
  if (!o.out.empty()) {
    std::FILE* f = std::fopen(o.out.c_str(), "w");
    if (!f || std::fputs(csv.c_str(), f) < 0) {
      if (f) std::fclose(f);
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return 2;
    }
    std::fclose(f);
  }
  return 0;
}

int do_shapes() {
  for (int i = 0; i < axf_shape_count(); ++i) {
    const char *name = nullptr, *syntax = nullptr, *desc = nullptr;
    axf_shape_info(i, &name, &syntax, &desc);
    std::printf("%-24s %-44s %s\n", name, syntax, desc);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Axisymmetric surface diffusion, intermediate, Willmore and Helfrich flows", "axiflow"};
  app.require_subcommand(1);

  RunOptions ro;
  auto* run = app.add_subcommand("run", "evolve an initial shape and write diagnostics, profiles and a surface mesh");
  std::string config_file;
  run->add_option("--config", config_file, "configuration file with 'key = value' lines (keys are the long flag names)");
  run->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  run->add_option("--scheme", ro.scheme, "E, F, F_star, I_star, willmore or helfrich")->capture_default_str();
  run->add_option("--quadrature", ro.quadrature, "lumped or exact (default: lumped for E/willmore/helfrich, exact otherwise)");
  run->add_option("--constraints", ro.constraints, "helfrich constraints: area_volume, area, volume or none")
      ->capture_default_str();
  run->add_option("--shape", ro.shape, "initial shape, e.g. capsule:1x7x1 (see `shapes`)")->capture_default_str();
  run->add_option("--J", ro.J, "number of elements")->capture_default_str();
  run->add_option("--dt", ro.dt, "time step")->capture_default_str();
  run->add_option("--T", ro.T, "final time")->capture_default_str();
  run->add_option("--kappa-bar", ro.kappa_bar, "spontaneous curvature")->capture_default_str();
  run->add_option("--alpha", ro.alpha, "intermediate-law coefficient alpha")->capture_default_str();
  run->add_option("--xi", ro.xi, "intermediate-law coefficient xi")->capture_default_str();
  run->add_option("--rho-hat-0", ro.rho_hat_0, "contact energy change at endpoint 0")->capture_default_str();
  run->add_option("--rho-hat-1", ro.rho_hat_1, "contact energy change at endpoint 1")->capture_default_str();
  run->add_option("--out", ro.out, "output directory")->capture_default_str();
  run->add_option("--every", ro.every, "diagnostics cadence in steps")->capture_default_str();
  run->add_option("--snapshot-every", ro.snapshot_every, "profile snapshot cadence in steps (0: none)")
      ->capture_default_str();
  run->add_option("--n-theta", ro.n_theta, "azimuthal segments of the OBJ mesh")->capture_default_str();

  ConvergeOptions co;
  auto* conv = app.add_subcommand("converge", "Willmore convergence test against the exact shrinking/expanding sphere");
  conv->add_option("--J", co.J, "comma-separated element counts")->delimiter(',')->capture_default_str();
  conv->add_option("--kappa-bar", co.kappa_bar, "spontaneous curvature")->capture_default_str();
  conv->add_option("--r0", co.r0, "initial radius")->capture_default_str();
  conv->add_option("--T", co.T, "final time")->capture_default_str();
  conv->add_option("--out", co.out, "optional CSV file for the table");

  app.add_subcommand("shapes", "list the initial shape generators");

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0) std::cerr << "termination=error\n";
    return code;
  }
  if (*run) return do_run(ro);
  if (*conv) return do_converge(co);
  return do_shapes();
}
