#include "axiflow/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "axiflow/error.hpp"

namespace axiflow {

using std::numbers::pi;

const char* to_string(Flow f) {
  switch (f) {
    case Flow::surface_diffusion_E: return "E";
    case Flow::surface_diffusion_F: return "F";
    case Flow::surface_diffusion_Fstar: return "F_star";
    case Flow::intermediate_Istar: return "I_star";
    case Flow::willmore: return "willmore";
    case Flow::helfrich: return "helfrich";
  }
  return "?";
}

const char* to_string(ConstraintMode m) {
  switch (m) {
    case ConstraintMode::area_volume: return "area_volume";
    case ConstraintMode::area: return "area";
    case ConstraintMode::volume: return "volume";
    case ConstraintMode::none: return "none";
  }
  return "?";
}

void validate_params(const GridTopology& topo, const FlowParams& p) {
  if (!(p.dt > 0.0) || !std::isfinite(p.dt)) throw InvalidArgument("time step must be positive");
  if (!std::isfinite(p.kappa_bar)) throw InvalidArgument("kappa_bar must be finite");
  if (!(p.alpha > 0.0) || !(p.xi > 0.0)) throw InvalidArgument("alpha and xi must be positive");
  if (!(p.newton_tol > 0.0) || !(p.constraint_tol > 0.0) || p.max_newton < 1)
    throw InvalidArgument("Newton tolerances and iteration limit must be positive");
  if (p.flow == Flow::willmore || p.flow == Flow::helfrich) {
    if (!topo.closed())
      for (int e = 0; e < 2; ++e)
        if (topo.endpoint_class(e) != BoundaryClass::axis)
          throw InvalidArgument(std::string(to_string(p.flow)) +
                                " flow requires all endpoints on the axis");
    if (p.contact.rho_hat[0] != 0.0 || p.contact.rho_hat[1] != 0.0)
      throw InvalidArgument(std::string(to_string(p.flow)) +
                            " flow requires all endpoints on the axis; contact energies are not supported");
    if (p.quadrature != Quadrature::lumped)
      throw InvalidArgument(std::string(to_string(p.flow)) + " flow is defined with lumped quadrature only");
  }
  validate_contact(topo, p.contact);
}

namespace {
// Quantities of the current curve shared by every term.
struct Geometry {
  const Curve& x;
  const GridTopology& topo;
  FrameData f;
  std::vector<double> r;

  explicit Geometry(const Curve& c) : x(c), topo(c.topology()), f(compute_frames(c)) {
    r.resize(c.nodes());
    for (int i = 0; i < c.nodes(); ++i) r[i] = c[i].r;
  }
  double rbar(int e) const { return 0.5 * (r[topo.left(e)] + r[topo.right(e)]); }
};

class Builder {
 public:
  Builder(const DofMap& dm) : dm_(dm), sys_(dm.size(), dm.bandwidth(), dm.bandwidth()) {}

  void add(int ni, int ci, int nj, int cj, double v) {
    const int i = dm_.index(ni, ci), j = dm_.index(nj, cj);
    if (i >= 0 && j >= 0) sys_.add(i, j, v);
  }
  void rhs(int ni, int ci, double v) {
    if (const int i = dm_.index(ni, ci); i >= 0) sys_.rhs()[i] += v;
  }
  int pos(int l) const { return dm_.scalar_fields() + l; }
  BlockBandedSystem& system() { return sys_; }

 private:
  const DofMap& dm_;
  BlockBandedSystem sys_;
};

// coef * (r chi nu, dX |X_rho|): rows of scalar field `row`, columns of dX.
void add_motion(Builder& b, const Geometry& g, const QuadratureRule& q, int row, double coef) {
  for (int e = 0; e < g.topo.elements(); ++e) {
    const int n[2] = {g.topo.left(e), g.topo.right(e)};
    const Vec2 nu = g.f.normal[e];
    for (int k = 0; k < q.count; ++k) {
      const double s = q.point[k];
      const double phi[2] = {1.0 - s, s};
      const double rq = g.r[n[0]] * phi[0] + g.r[n[1]] * phi[1];
      const double base = coef * q.weight[k] * g.f.length[e] * rq;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const double v = base * phi[i] * phi[j];
          b.add(n[i], row, n[j], b.pos(0), v * nu.r);
          b.add(n[i], row, n[j], b.pos(1), v * nu.z);
        }
    }
  }
}

// ([r] u nu, eta |X_rho|): rows of position, columns of scalar field `col`.
void add_normal_curvature(Builder& b, const Geometry& g, const QuadratureRule& q, int col,
                          bool weighted) {
  for (int e = 0; e < g.topo.elements(); ++e) {
    const int n[2] = {g.topo.left(e), g.topo.right(e)};
    const Vec2 nu = g.f.normal[e];
    for (int k = 0; k < q.count; ++k) {
      const double s = q.point[k];
      const double phi[2] = {1.0 - s, s};
      const double rq = weighted ? g.r[n[0]] * phi[0] + g.r[n[1]] * phi[1] : 1.0;
      const double base = q.weight[k] * g.f.length[e] * rq;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const double v = base * phi[i] * phi[j];
          b.add(n[i], b.pos(0), n[j], col, v * nu.r);
          b.add(n[i], b.pos(1), n[j], col, v * nu.z);
        }
    }
  }
}

// coef * (r u, zeta |X_rho|) between two scalar fields.
void add_scalar_mass(Builder& b, const Geometry& g, const QuadratureRule& q, int row, int col,
                     double coef) {
  for (int e = 0; e < g.topo.elements(); ++e) {
    const int n[2] = {g.topo.left(e), g.topo.right(e)};
    for (int k = 0; k < q.count; ++k) {
      const double s = q.point[k];
      const double phi[2] = {1.0 - s, s};
      const double rq = g.r[n[0]] * phi[0] + g.r[n[1]] * phi[1];
      const double base = coef * q.weight[k] * g.f.length[e] * rq;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) b.add(n[i], row, n[j], col, base * phi[i] * phi[j]);
    }
  }
}

// coef * (r (d u)_rho, chi_rho |X_rho|^-1); d is an optional nodal factor.
void add_weighted_laplacian(Builder& b, const Geometry& g, int row, int col, double coef,
                            const KappaOperator* d = nullptr) {
  for (int e = 0; e < g.topo.elements(); ++e) {
    const int n[2] = {g.topo.left(e), g.topo.right(e)};
    const double k = coef * g.rbar(e) / g.f.length[e];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double sign = i == j ? 1.0 : -1.0;
        b.add(n[i], row, n[j], col, k * sign * (d ? d->factor(n[j]) : 1.0));
      }
  }
}

// Right-hand side coef * (r u_rho, chi_rho |X_rho|^-1) for a nodal field u.
void rhs_weighted_laplacian(Builder& b, const Geometry& g, int row, double coef,
                            const std::vector<double>& u) {
  for (int e = 0; e < g.topo.elements(); ++e) {
    const int ia = g.topo.left(e), ib = g.topo.right(e);
    const double k = coef * g.rbar(e) / g.f.length[e] * (u[ib] - u[ia]);
    b.rhs(ia, row, -k);
    b.rhs(ib, row, k);
  }
}

// ([r] X^{m+1}_rho, eta_rho |X^m_rho|^-1) split into the increment matrix and
// the known part moved to the right-hand side.
void add_position_stiffness(Builder& b, const Geometry& g, bool weighted) {
  for (int e = 0; e < g.topo.elements(); ++e) {
    const int n[2] = {g.topo.left(e), g.topo.right(e)};
    const double k = (weighted ? g.rbar(e) : 1.0) / g.f.length[e];
    const Vec2 dx = g.x[n[1]] - g.x[n[0]];
    for (int l = 0; l < 2; ++l) {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) b.add(n[i], b.pos(l), n[j], b.pos(l), i == j ? k : -k);
      b.rhs(n[0], b.pos(l), k * dx[l]);
      b.rhs(n[1], b.pos(l), -k * dx[l]);
    }
  }
}

// -(eta.e1, |X^m_rho|) on the right-hand side.
void rhs_area_term(Builder& b, const Geometry& g) {
  for (int e = 0; e < g.topo.elements(); ++e) {
    const double half = 0.5 * g.f.length[e];
    b.rhs(g.topo.left(e), b.pos(0), -half);
    b.rhs(g.topo.right(e), b.pos(0), -half);
  }
}

// Contact-energy terms. `weighted` multiplies by X^m.e1 at the endpoint;
// `implicit_positive` treats the positive part at plane-slip endpoints implicitly.
void add_contact(Builder& b, const Geometry& g, const ContactSpec& c, bool weighted,
                 bool implicit_positive) {
  if (g.topo.closed()) return;
  for (int p = 0; p < 2; ++p) {
    const double rho = c.rho_hat[p];
    if (rho == 0.0) continue;
    const int node = p == 0 ? 0 : g.topo.elements();
    const double w = weighted ? g.r[node] : 1.0;
    switch (g.topo.endpoint_class(p)) {
      case BoundaryClass::cylinder_slip: b.rhs(node, b.pos(1), -rho * w); break;
      case BoundaryClass::plane_slip:
        b.rhs(node, b.pos(0), -rho * w);
        if (implicit_positive) b.add(node, b.pos(0), node, b.pos(0), std::max(rho, 0.0));
        break;
      default: break;
    }
  }
}

Curve advance(const Geometry& g, const DofMap& dm, const std::vector<double>& u) {
  std::vector<Vec2> y = g.x.positions();
  const int s = dm.scalar_fields();
  for (int i = 0; i < g.x.nodes(); ++i)
    for (int l = 0; l < 2; ++l)
      if (const int k = dm.index(i, s + l); k >= 0) y[i][l] += u[k];
  return Curve(g.topo, std::move(y), g.x.time());
}

NodalScalarField extract(const Curve& c, const DofMap& dm, const std::vector<double>& u, int field) {
  NodalScalarField out(c.nodes());
  for (int i = 0; i < c.nodes(); ++i) out[i] = u[dm.scalar(i, field)];
  return out;
}

std::string step_context(const Curve& c, Flow f) {
  return std::string(to_string(f)) + " step at t=" + std::to_string(c.time());
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// E-type system: kappa and position increments; shared by Willmore/Helfrich.
Builder assemble_kappa_system(const Geometry& g, const DofMap& dm, const KappaOperator& kop,
                              Quadrature quad, double dt) {
  const auto q = quadrature_rule(quad);
  Builder b(dm);
  add_motion(b, g, q, 0, 1.0);
  add_weighted_laplacian(b, g, 0, 0, -dt, &kop);
  std::vector<double> shift(g.x.nodes());
  for (int i = 0; i < g.x.nodes(); ++i) shift[i] = kop.shift(i);
  rhs_weighted_laplacian(b, g, 0, -dt, shift);
  add_normal_curvature(b, g, q, 0, false);
  add_position_stiffness(b, g, false);
  return b;
}

}  // namespace

StepReport step_sd_E(const Curve& curve, const FlowParams& params) {
  validate_params(curve.topology(), params);
  const Geometry g(curve);
  const KappaOperator kop = kappa_operator(curve, g.f);
  const DofMap dm(curve.topology(), 1);
  Builder b = assemble_kappa_system(g, dm, kop, params.quadrature, params.dt);
  add_contact(b, g, params.contact, false, false);
  const auto u = solve(b.system(), step_context(curve, params.flow));
  StepReport rep;
  rep.curve = advance(g, dm, u).with_time(curve.time() + params.dt);
  rep.kappa = extract(curve, dm, u, 0);
  return rep;
}

namespace {
// Mean-curvature-based systems: F (one scalar) or I (Y, kappa_S). The area
// term (eta.e1, |X_rho|) is left out and handled by the caller.
Builder assemble_mean_system(const Geometry& g, const DofMap& dm, const FlowParams& p,
                             bool implicit_positive) {
  const auto q = quadrature_rule(p.quadrature);
  const bool intermediate = dm.scalar_fields() == 2;
  const int ks = intermediate ? 1 : 0;
  Builder b(dm);
  add_motion(b, g, q, 0, 1.0);
  add_weighted_laplacian(b, g, 0, 0, -p.dt);
  if (intermediate) {
    add_weighted_laplacian(b, g, 1, 0, 1.0 / p.xi);
    add_scalar_mass(b, g, q, 1, 0, 1.0 / p.alpha);
    add_scalar_mass(b, g, q, 1, 1, -1.0);
  }
  add_normal_curvature(b, g, q, ks, true);
  add_position_stiffness(b, g, true);
  add_contact(b, g, p.contact, true, implicit_positive);
  return b;
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r);
  return buf;
}

struct NewtonResult {
  std::vector<double> u;
  int iterations = 0;
  double residual = 0.0;
};

// Solves A u + n(X^m + dX(u)) = b, where n collects (eta.e1, |X_rho|).
NewtonResult newton_area_term(const Geometry& g, const DofMap& dm, const BlockBandedSystem& a,
                              std::vector<double> u, const FlowParams& p, const std::string& ctx) {
  const int s = dm.scalar_fields();
  const auto& topo = g.topo;
  double lmax0 = *std::max_element(g.f.length.begin(), g.f.length.end());
  const double rhs_norm = max_abs(a.rhs()), mat_norm = a.norm_inf();

  auto residual = [&](const std::vector<double>& v, std::vector<Vec2>& tau, std::vector<double>& len) {
    const Curve y = advance(g, dm, v);
    std::vector<double> r = a.multiply(v);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= a.rhs()[i];
    tau.resize(topo.elements());
    len.resize(topo.elements());
    for (int e = 0; e < topo.elements(); ++e) {
      const Vec2 d = y[topo.right(e)] - y[topo.left(e)];
      len[e] = norm(d);
      if (!(len[e] > 1e-14 * lmax0))
        throw NewtonFailure(ctx + ": element " + std::to_string(e) + " collapsed during Newton iteration");
      tau[e] = (1.0 / len[e]) * d;
      for (int n : {topo.left(e), topo.right(e)})
        if (const int k = dm.index(n, s); k >= 0) r[k] += 0.5 * len[e];
    }
    return r;
  };

  NewtonResult res;
  std::vector<Vec2> tau;
  std::vector<double> len;
  std::vector<double> r = residual(u, tau, len);
  for (int it = 1; it <= p.max_newton; ++it) {
    BlockBandedSystem jac = a;
    for (int e = 0; e < topo.elements(); ++e) {
      const int n[2] = {topo.left(e), topo.right(e)};
      for (int i = 0; i < 2; ++i) {
        const int row = dm.index(n[i], s);
        if (row < 0) continue;
        for (int j = 0; j < 2; ++j)
          for (int l = 0; l < 2; ++l)
            if (const int col = dm.index(n[j], s + l); col >= 0)
              jac.add(row, col, (j == 1 ? 0.5 : -0.5) * tau[e][l]);
      }
    }
    for (double& v : r) v = -v;
    jac.rhs() = r;
    const auto du = solve(jac, ctx);
    for (size_t i = 0; i < u.size(); ++i) u[i] += du[i];
    r = residual(u, tau, len);
    res.iterations = it;
    res.residual = max_abs(r);
    // Normwise backward error, so the test stays attainable when the unknowns are large.
    if (res.residual <= p.newton_tol * (1.0 + rhs_norm + mat_norm * max_abs(u))) {
      res.u = std::move(u);
      return res;
    }
  }
  throw NewtonFailure(ctx + ": Newton did not converge in " + std::to_string(p.max_newton) +
                      " iterations (residual " + format_residual(res.residual) + ")");
}

StepReport mean_curvature_step(const Curve& curve, const FlowParams& p, bool intermediate, bool star) {
  validate_params(curve.topology(), p);
  const Geometry g(curve);
  const DofMap dm(curve.topology(), intermediate ? 2 : 1);
  const std::string ctx = step_context(curve, p.flow);

  Builder lin = assemble_mean_system(g, dm, p, false);
  rhs_area_term(lin, g);
  std::vector<double> u = solve(lin.system(), ctx);

  StepReport rep;
  if (star) {
    Builder nl = assemble_mean_system(g, dm, p, true);
    auto nr = newton_area_term(g, dm, nl.system(), std::move(u), p, ctx);
    u = std::move(nr.u);
    rep.newton_iterations = nr.iterations;
    rep.residual = nr.residual;
  }
  rep.curve = advance(g, dm, u).with_time(curve.time() + p.dt);
  if (intermediate) {
    rep.y = extract(curve, dm, u, 0);
    rep.kappa = extract(curve, dm, u, 1);
  } else {
    rep.kappa = extract(curve, dm, u, 0);
  }

  if (star) {
    const auto& topo = curve.topology();
    rep.stability_checked = true;
    rep.energy_before = energy_E(curve, p.contact);
    rep.energy_after = energy_E(rep.curve, p.contact);
    const NodalScalarField& grad = intermediate ? rep.y : rep.kappa;
    const double gw = intermediate ? 1.0 / p.alpha : 1.0;
    double d = 0.0;
    for (int e = 0; e < topo.elements(); ++e) {
      const double du = grad[topo.right(e)] - grad[topo.left(e)];
      d += gw * g.rbar(e) * du * du / g.f.length[e];
    }
    if (intermediate) {
      const auto q = quadrature_rule(p.quadrature);
      double m = 0.0;
      for (int e = 0; e < topo.elements(); ++e) {
        const int ia = topo.left(e), ib = topo.right(e);
        const double da = rep.kappa[ia] - rep.y[ia] / p.alpha;
        const double db = rep.kappa[ib] - rep.y[ib] / p.alpha;
        for (int k = 0; k < q.count; ++k) {
          const double s = q.point[k];
          const double v = (1.0 - s) * da + s * db;
          const double rq = (1.0 - s) * g.r[ia] + s * g.r[ib];
          m += q.weight[k] * g.f.length[e] * rq * v * v;
        }
      }
      d += p.xi * m;
    }
    rep.dissipation = 2.0 * pi * p.dt * d;
  }
  return rep;
}

}  // namespace

StepReport step_sd_F(const Curve& curve, const FlowParams& params) {
  return mean_curvature_step(curve, params, false, false);
}

StepReport step_sd_F_star(const Curve& curve, const FlowParams& params) {
  return mean_curvature_step(curve, params, false, true);
}

StepReport step_intermediate_star(const Curve& curve, const FlowParams& params) {
  return mean_curvature_step(curve, params, true, true);
}

namespace {

// Lumped nodal source of the Willmore right-hand side; on the axis the
// azimuthal ratio is replaced by the substitution kappa - K(kappa) = 2 kappa.
std::vector<double> willmore_source(const Geometry& g, const KappaOperator& kop,
                                    const NodalScalarField& kappa, double kbar) {
  std::vector<double> f(g.x.nodes(), 0.0);
  for (int i = 0; i < g.x.nodes(); ++i) {
    const double w1 = g.f.omega[i].r;
    const double a = kop.kappa_minus(i, kappa[i]);
    f[i] = -2.0 * (a - kbar) * kappa[i] * w1 - 0.5 * g.r[i] * (a * a - kbar * kbar) * a;
  }
  return f;
}

void check_kappa(const Curve& curve, const NodalScalarField& kappa) {
  if (static_cast<int>(kappa.size()) != curve.nodes())
    throw InvalidArgument("curvature field has " + std::to_string(kappa.size()) + " values, expected " +
                          std::to_string(curve.nodes()));
}

}  // namespace

StepReport step_willmore(const Curve& curve, const NodalScalarField& kappa_prev,
                         const FlowParams& params) {
  validate_params(curve.topology(), params);
  check_kappa(curve, kappa_prev);
  const Geometry g(curve);
  const KappaOperator kop = kappa_operator(curve, g.f);
  const DofMap dm(curve.topology(), 1);
  Builder b = assemble_kappa_system(g, dm, kop, Quadrature::lumped, params.dt);
  const auto m = lumped_mass(curve.topology(), g.f);
  const auto f = willmore_source(g, kop, kappa_prev, params.kappa_bar);
  for (int i = 0; i < curve.nodes(); ++i) b.rhs(i, 0, params.dt * m[i] * f[i]);
  const auto u = solve(b.system(), step_context(curve, params.flow));
  StepReport rep;
  rep.curve = advance(g, dm, u).with_time(curve.time() + params.dt);
  rep.kappa = extract(curve, dm, u, 0);
  return rep;
}

StepReport step_helfrich(const Curve& curve, const NodalScalarField& kappa_prev,
                         const FlowParams& params, const HelfrichTargets& targets) {
  if (params.constraints == ConstraintMode::none) {
    FlowParams wp = params;
    wp.flow = Flow::willmore;
    return step_willmore(curve, kappa_prev, wp);
  }
  validate_params(curve.topology(), params);
  check_kappa(curve, kappa_prev);
  const bool use_a = params.constraints != ConstraintMode::volume;
  const bool use_v = params.constraints != ConstraintMode::area;
  if ((use_a && !(targets.area > 0.0)) || (use_v && targets.volume == 0.0))
    throw InvalidArgument("helfrich: reference area/volume must be nonzero");

  const Geometry g(curve);
  const KappaOperator kop = kappa_operator(curve, g.f);
  const DofMap dm(curve.topology(), 1);
  const std::string ctx = step_context(curve, params.flow);
  Builder b = assemble_kappa_system(g, dm, kop, Quadrature::lumped, params.dt);
  const auto m = lumped_mass(curve.topology(), g.f);
  const auto f = willmore_source(g, kop, kappa_prev, params.kappa_bar);
  for (int i = 0; i < curve.nodes(); ++i) b.rhs(i, 0, params.dt * m[i] * f[i]);

  const int n = dm.size();
  std::vector<double> rk(n, 0.0), rn(n, 0.0);
  for (int i = 0; i < curve.nodes(); ++i) {
    const int k = dm.scalar(i);
    const double w = params.dt * m[i] * g.r[i];
    rk[k] = w * kop.kappa_minus(i, kappa_prev[i]);
    rn[k] = w;
  }
  const BandedLU lu(b.system(), ctx);
  const auto ug = lu.solve(b.system().rhs());
  const auto uk = lu.solve(rk);
  const auto un = lu.solve(rn);

  double la = use_a ? targets.lambda_A : 0.0;
  double lv = use_v ? targets.lambda_V : 0.0;
  auto combine = [&](double a, double v) {
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) u[i] = ug[i] + a * uk[i] + v * un[i];
    return u;
  };
  auto directional = [&](const NodalVectorField& grad, const std::vector<double>& u) {
    double s = 0.0;
    for (int i = 0; i < curve.nodes(); ++i)
      for (int l = 0; l < 2; ++l)
        if (const int k = dm.position(i, l); k >= 0) s += grad[i][l] * u[k];
    return s;
  };

  StepReport rep;
  for (int it = 1; it <= params.max_newton; ++it) {
    const Curve y = advance(g, dm, combine(la, lv));
    const double fa = area_A(y) - targets.area;
    const double fv = volume_V(y) - targets.volume;
    const Variations var = variations(y);
    const double a11 = directional(var.area, uk), a12 = directional(var.area, un);
    const double a21 = directional(var.volume, uk), a22 = directional(var.volume, un);
    if (use_a && use_v) {
      const double det = a11 * a22 - a12 * a21;
      if (!(std::abs(det) > 1e-300) || !std::isfinite(det))
        throw SingularSystem(ctx + ": singular multiplier Newton matrix");
      la -= (a22 * fa - a12 * fv) / det;
      lv -= (-a21 * fa + a11 * fv) / det;
    } else if (use_a) {
      if (a11 == 0.0) throw SingularSystem(ctx + ": singular multiplier Newton matrix");
      la -= fa / a11;
    } else {
      if (a22 == 0.0) throw SingularSystem(ctx + ": singular multiplier Newton matrix");
      lv -= fv / a22;
    }
    const auto u = combine(la, lv);
    const Curve next = advance(g, dm, u);
    const double ea = std::abs(area_A(next) - targets.area) / targets.area;
    const double ev = std::abs(volume_V(next) - targets.volume) / std::abs(targets.volume);
    if ((!use_a || ea <= params.constraint_tol) && (!use_v || ev <= params.constraint_tol)) {
      rep.curve = next.with_time(curve.time() + params.dt);
      rep.kappa = extract(curve, dm, u, 0);
      rep.newton_iterations = it;
      rep.lambda_A = la;
      rep.lambda_V = lv;
      rep.residual = std::max(use_a ? ea : 0.0, use_v ? ev : 0.0);
      return rep;
    }
  }
  throw NewtonFailure(ctx + ": multiplier Newton did not converge in " +
                      std::to_string(params.max_newton) + " iterations");
}

}  // namespace axiflow
