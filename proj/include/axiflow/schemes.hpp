#pragma once

#include <string>

#include "axiflow/fem.hpp"
#include "axiflow/geometry.hpp"
#include "axiflow/mesh.hpp"

namespace axiflow {

enum class Flow {
  surface_diffusion_E,      // kappa-based surface diffusion, linear
  surface_diffusion_F,      // mean-curvature-based surface diffusion, linear
  surface_diffusion_Fstar,  // mean-curvature-based, unconditionally stable, Newton
  intermediate_Istar,       // intermediate law, unconditionally stable, Newton
  willmore,
  helfrich,
};

enum class ConstraintMode { area_volume, area, volume, none };

const char* to_string(Flow f);
const char* to_string(ConstraintMode m);

struct FlowParams {
  Flow flow = Flow::surface_diffusion_E;
  Quadrature quadrature = Quadrature::lumped;
  double dt = 1e-3;
  double kappa_bar = 0.0;
  double alpha = 1.0;
  double xi = 1.0;
  ContactSpec contact;
  ConstraintMode constraints = ConstraintMode::area_volume;
  double newton_tol = 1e-12;      // relative residual tolerance for the Newton schemes
  double constraint_tol = 1e-10;  // relative area/volume tolerance for Helfrich
  int max_newton = 20;
};

// Throws InvalidArgument if the parameters do not fit the topology.
void validate_params(const GridTopology& topo, const FlowParams& params);

struct StepReport {
  Curve curve;
  NodalScalarField kappa;  // kappa (E, Willmore, Helfrich) or kappa_S (F, F*, I*)
  NodalScalarField y;      // Y for the intermediate law, empty otherwise
  int newton_iterations = 0;
  double lambda_A = 0.0;
  double lambda_V = 0.0;
  double residual = 0.0;  // final nonlinear residual (max norm), 0 for linear schemes

  // Discrete stability inequality, evaluated for F* and I*.
  bool stability_checked = false;
  double energy_before = 0.0;
  double energy_after = 0.0;
  double dissipation = 0.0;
  // E_after + dissipation - E_before; must not exceed 1e-12 * E_before.
  double stability_excess() const { return energy_after + dissipation - energy_before; }
  bool stability_holds() const {
    return !stability_checked || stability_excess() <= 1e-12 * std::abs(energy_before);
  }
};

StepReport step_sd_E(const Curve& curve, const FlowParams& params);
StepReport step_sd_F(const Curve& curve, const FlowParams& params);
StepReport step_sd_F_star(const Curve& curve, const FlowParams& params);
StepReport step_intermediate_star(const Curve& curve, const FlowParams& params);
StepReport step_willmore(const Curve& curve, const NodalScalarField& kappa_prev,
                         const FlowParams& params);

struct HelfrichTargets {
  double area = 0.0;
  double volume = 0.0;
  double lambda_A = 0.0;  // initial guesses
  double lambda_V = 0.0;
};

StepReport step_helfrich(const Curve& curve, const NodalScalarField& kappa_prev,
                         const FlowParams& params, const HelfrichTargets& targets);

}  // namespace axiflow
