#pragma once

#include <utility>
#include <vector>

#include "axiflow/fem.hpp"
#include "axiflow/mesh.hpp"

namespace axiflow {

double area_A(const Curve& curve);
double energy_E(const Curve& curve, const ContactSpec& contact);
// Signed enclosed volume, -pi * integral of r^2 z_rho, integrated exactly.
double volume_V(const Curve& curve);

// Nodal part of the azimuthal curvature term: value[i] = omega_i.e1 / r_i off
// the axis; on axis nodes the term is replaced by -kappa_i (value unused).
struct KappaOperator {
  std::vector<double> value;
  std::vector<bool> axis;

  // kappa_i - K_i(kappa): kappa_i - value_i, or 2 kappa_i on the axis.
  double kappa_minus(int i, double kappa) const { return axis[i] ? 2.0 * kappa : kappa - value[i]; }
  // Coefficient d and shift c with kappa - K(kappa) = d*kappa - c.
  double factor(int i) const { return axis[i] ? 2.0 : 1.0; }
  double shift(int i) const { return axis[i] ? 0.0 : value[i]; }
};

KappaOperator kappa_operator(const Curve& curve, const FrameData& frames);

// Lumped nodal masses: half the lengths of the adjacent elements.
std::vector<double> lumped_mass(const GridTopology& topo, const FrameData& frames);

NodalScalarField curvature_init(const Curve& curve, const FrameData& frames);

double willmore_energy(const Curve& curve, const NodalScalarField& kappa, double kappa_bar);

struct CurvatureDiagnostics {
  NodalScalarField mean;      // kappa_S
  NodalScalarField gaussian;  // K_S
};

CurvatureDiagnostics curvature_diagnostics(const Curve& curve, const FrameData& frames,
                                           const NodalScalarField& kappa);

struct Variations {
  NodalVectorField area;    // d area_A / d X_i
  NodalVectorField volume;  // d volume_V / d X_i
};

// Exact first variations of area_A and volume_V with respect to each nodal
// coordinate; components fixed by the boundary classes are zeroed.
Variations variations(const Curve& curve);

}  // namespace axiflow
