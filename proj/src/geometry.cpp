#include "axiflow/geometry.hpp"

#include <cmath>
#include <numbers>

#include "axiflow/error.hpp"

namespace axiflow {

using std::numbers::pi;

double area_A(const Curve& curve) {
  const auto& topo = curve.topology();
  double s = 0.0;
  for (int e = 0; e < topo.elements(); ++e) {
    const Vec2 a = curve[topo.left(e)], b = curve[topo.right(e)];
    s += norm(b - a) * 0.5 * (a.r + b.r);
  }
  return 2.0 * pi * s;
}

double energy_E(const Curve& curve, const ContactSpec& contact) {
  const auto& topo = curve.topology();
  double e = area_A(curve);
  if (topo.closed()) return e;
  for (int p = 0; p < 2; ++p) {
    const Vec2 x = curve[p == 0 ? 0 : topo.elements()];
    switch (topo.endpoint_class(p)) {
      case BoundaryClass::cylinder_slip: e += 2.0 * pi * contact.rho_hat[p] * x.r * x.z; break;
      case BoundaryClass::plane_slip: e += pi * contact.rho_hat[p] * x.r * x.r; break;
      default: break;
    }
  }
  return e;
}

double volume_V(const Curve& curve) {
  const auto& topo = curve.topology();
  double s = 0.0;
  for (int e = 0; e < topo.elements(); ++e) {
    const Vec2 a = curve[topo.left(e)], b = curve[topo.right(e)];
    s += (b.z - a.z) * (a.r * a.r + a.r * b.r + b.r * b.r);
  }
  return -pi * s / 3.0;
}

KappaOperator kappa_operator(const Curve& curve, const FrameData& frames) {
  const auto& topo = curve.topology();
  const int n = curve.nodes();
  KappaOperator k;
  k.value.assign(n, 0.0);
  k.axis.assign(n, false);
  for (int i = 0; i < n; ++i) {
    if (topo.is_axis(i)) {
      k.axis[i] = true;
      continue;
    }
    if (!(curve[i].r > 0.0))
      throw DomainError("kappa operator: non-positive radius at node " + std::to_string(i));
    k.value[i] = frames.omega[i].r / curve[i].r;
  }
  return k;
}

std::vector<double> lumped_mass(const GridTopology& topo, const FrameData& frames) {
  std::vector<double> m(topo.nodes(), 0.0);
  for (int e = 0; e < topo.elements(); ++e) {
    m[topo.left(e)] += 0.5 * frames.length[e];
    m[topo.right(e)] += 0.5 * frames.length[e];
  }
  return m;
}

NodalScalarField curvature_init(const Curve& curve, const FrameData& frames) {
  const auto& topo = curve.topology();
  const auto m = lumped_mass(topo, frames);
  std::vector<Vec2> kv(curve.nodes(), Vec2{});
  for (int e = 0; e < topo.elements(); ++e) {
    kv[topo.left(e)] += frames.tangent[e];
    kv[topo.right(e)] -= frames.tangent[e];
  }
  NodalScalarField kappa(curve.nodes());
  for (int i = 0; i < curve.nodes(); ++i) {
    const double nw = norm(frames.omega[i]);
    if (!(nw > 0.0))
      throw DegenerateMesh(-1, "curvature init: vanishing lumped normal at node " + std::to_string(i));
    kappa[i] = dot(kv[i], frames.omega[i]) / (m[i] * nw);
  }
  return kappa;
}

double willmore_energy(const Curve& curve, const NodalScalarField& kappa, double kappa_bar) {
  const FrameData f = compute_frames(curve);
  const auto& topo = curve.topology();
  const auto m = lumped_mass(topo, f);
  double s = 0.0;
  for (int i = 0; i < curve.nodes(); ++i) {
    if (topo.is_axis(i) || curve[i].r == 0.0) continue;
    const double d = kappa[i] - kappa_bar - f.omega[i].r / curve[i].r;
    s += m[i] * curve[i].r * d * d;
  }
  return pi * s;
}

CurvatureDiagnostics curvature_diagnostics(const Curve& curve, const FrameData& frames,
                                           const NodalScalarField& kappa) {
  const KappaOperator k = kappa_operator(curve, frames);
  CurvatureDiagnostics d;
  d.mean.resize(curve.nodes());
  d.gaussian.resize(curve.nodes());
  for (int i = 0; i < curve.nodes(); ++i) {
    const double kk = k.axis[i] ? -kappa[i] : k.value[i];
    d.mean[i] = kappa[i] - kk;
    d.gaussian[i] = -kappa[i] * kk;
  }
  return d;
}

Variations variations(const Curve& curve) {
  const auto& topo = curve.topology();
  const int n = curve.nodes();
  Variations v;
  v.area.assign(n, Vec2{});
  v.volume.assign(n, Vec2{});
  for (int e = 0; e < topo.elements(); ++e) {
    const int ia = topo.left(e), ib = topo.right(e);
    const Vec2 a = curve[ia], b = curve[ib];
    const double len = norm(b - a);
    const double rbar = 0.5 * (a.r + b.r);
    const Vec2 tau = len > 0.0 ? (1.0 / len) * (b - a) : Vec2{};
    v.area[ia] += 2.0 * pi * (Vec2{0.5 * len, 0.0} - rbar * tau);
    v.area[ib] += 2.0 * pi * (Vec2{0.5 * len, 0.0} + rbar * tau);
    const double dz = b.z - a.z;
    const double q = (a.r * a.r + a.r * b.r + b.r * b.r) / 3.0;
    v.volume[ia] += Vec2{-pi * dz * (2.0 * a.r + b.r) / 3.0, pi * q};
    v.volume[ib] += Vec2{-pi * dz * (a.r + 2.0 * b.r) / 3.0, -pi * q};
  }
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 2; ++c)
      if (!topo.component_free(i, c)) {
        v.area[i][c] = 0.0;
        v.volume[i][c] = 0.0;
      }
  return v;
}

}  // namespace axiflow
