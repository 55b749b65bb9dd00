#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "axiflow/schemes.hpp"

namespace axiflow {

struct DiagnosticsRow {
  double t = 0.0;
  double E = 0.0;
  double A = 0.0;
  double V = 0.0;
  double Wh = std::numeric_limits<double>::quiet_NaN();
  double ratio = 0.0;
  double max_r = 0.0;
  double z_extent = 0.0;
  double lambda_A = 0.0;
  double lambda_V = 0.0;
  int newton_iters = 0;
  double wall_time = 0.0;  // seconds spent in the step; not exported
};

// Called after every accepted step with the step index, the new curve and the step report.
using StepObserver = std::function<void(int step, const StepReport& report)>;

struct RunConfig {
  Curve initial;
  FlowParams params;
  double T = 1.0;
  int every = 1;           // record a diagnostics row every `every` steps (plus first and last)
  int snapshot_every = 0;  // keep a copy of the curve every k steps; 0 disables
  StepObserver observer;
};

enum class Termination { completed, off_axis, solver_failure };

const char* to_string(Termination t);

struct RunResult {
  Curve final_curve;
  NodalScalarField final_kappa;
  std::vector<DiagnosticsRow> rows;
  std::vector<Curve> snapshots;
  Termination termination = Termination::completed;
  std::string message;
  int steps = 0;
  double volume_start = 0.0;
  double volume_end = 0.0;
  double area_start = 0.0;
  int stability_violations = 0;
  double max_stability_excess = 0.0;   // max of (E_after + D - E_before) / E_before
  int max_newton_iterations = 0;
  double max_area_drift = 0.0;         // max per-step |A - A0| / A0
  double max_volume_drift = 0.0;       // max per-step |V - V0| / |V0|

  double relative_volume_change() const { return (volume_end - volume_start) / std::abs(volume_start); }
};

// Throws InvalidArgument for invalid configurations; step failures end the
// run with Termination::solver_failure and the last valid state.
RunResult run_flow(const RunConfig& config);

// Radius of the sphere evolving under Willmore flow with spontaneous curvature kappa_bar.
double exact_sphere_radius(double t, double kappa_bar, double r0);

struct ConvergenceRow {
  int J = 0;
  double h = 0.0;
  double dt = 0.0;
  double error = 0.0;
  double eoc = std::numeric_limits<double>::quiet_NaN();
  double final_time = 0.0;
  int steps = 0;
};

std::vector<ConvergenceRow> convergence_study(const std::vector<int>& Js, double kappa_bar = -1.0,
                                              double r0 = 1.0, double T = 1.0);

}  // namespace axiflow
