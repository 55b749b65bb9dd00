#include "axiflow/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "axiflow/error.hpp"
#include "axiflow/shapes.hpp"

namespace axiflow {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::off_axis: return "off_axis";
    case Termination::solver_failure: return "solver_failure";
  }
  return "?";
}

namespace {

bool is_willmore(Flow f) { return f == Flow::willmore || f == Flow::helfrich; }

DiagnosticsRow make_row(const Curve& c, const FlowParams& p, double wh) {
  DiagnosticsRow row;
  row.t = c.time();
  row.A = area_A(c);
  row.E = energy_E(c, p.contact);
  row.V = volume_V(c);
  row.Wh = wh;
  row.ratio = element_ratio(c);
  double zmin = c[0].z, zmax = c[0].z;
  row.max_r = c[0].r;
  for (const auto& x : c.positions()) {
    row.max_r = std::max(row.max_r, x.r);
    zmin = std::min(zmin, x.z);
    zmax = std::max(zmax, x.z);
  }
  row.z_extent = zmax - zmin;
  return row;
}

bool negative_off_axis(const Curve& c) {
  for (int i = 0; i < c.nodes(); ++i)
    if (!c.topology().is_axis(i) && c[i].r < 0.0) return true;
  return false;
}

}  // namespace

RunResult run_flow(const RunConfig& cfg) {
  const Curve& x0 = cfg.initial;
  const FlowParams& p = cfg.params;
  if (!(cfg.T > 0.0) || !std::isfinite(cfg.T)) throw InvalidArgument("final time T must be positive");
  if (cfg.every < 1) throw InvalidArgument("output cadence must be >= 1");
  if (cfg.snapshot_every < 0) throw InvalidArgument("snapshot cadence must be >= 0");
  validate_params(x0.topology(), p);
  const ValidationReport vr = validate_state(x0);
  if (vr.off_axis_negative || vr.degenerate) throw InvalidArgument("initial curve invalid: " + vr.summary());

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const bool willmore = is_willmore(p.flow);
  RunResult res;
  Curve cur = x0.with_time(0.0);
  NodalScalarField kappa;
  if (willmore) kappa = curvature_init(cur, compute_frames(cur));
  HelfrichTargets targets{area_A(cur), volume_V(cur), 0.0, 0.0};
  res.volume_start = targets.volume;
  res.area_start = targets.area;
  res.rows.push_back(make_row(cur, p, willmore ? willmore_energy(cur, kappa, p.kappa_bar) : nan));
  if (cfg.snapshot_every > 0) res.snapshots.push_back(cur);

  const double t_end = cfg.T * (1.0 - 1e-12);
  int m = 0;
  while (m * p.dt < t_end) {
    const auto start = std::chrono::steady_clock::now();
    StepReport rep;
    try {
      switch (p.flow) {
        case Flow::surface_diffusion_E: rep = step_sd_E(cur, p); break;
        case Flow::surface_diffusion_F: rep = step_sd_F(cur, p); break;
        case Flow::surface_diffusion_Fstar: rep = step_sd_F_star(cur, p); break;
        case Flow::intermediate_Istar: rep = step_intermediate_star(cur, p); break;
        case Flow::willmore: rep = step_willmore(cur, kappa, p); break;
        case Flow::helfrich: rep = step_helfrich(cur, kappa, p, targets); break;
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_argument) throw;
      res.termination = Termination::solver_failure;
      res.message = "step " + std::to_string(m + 1) + " (t=" + std::to_string(cur.time()) + "): " + e.what();
      break;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (negative_off_axis(rep.curve)) {
      res.termination = Termination::off_axis;
      res.message = "negative radius off the axis after step " + std::to_string(m + 1) + " (t=" +
                    std::to_string((m + 1) * p.dt) + ")";
      break;
    }
    if (rep.stability_checked) {
      const double excess = rep.stability_excess() / std::abs(rep.energy_before);
      res.max_stability_excess = m == 0 ? excess : std::max(res.max_stability_excess, excess);
      if (!rep.stability_holds()) ++res.stability_violations;
    }
    // Energy of the old geometry paired with the new curvature.
    const double wh = willmore ? willmore_energy(cur, rep.kappa, p.kappa_bar) : nan;
    ++m;
    cur = rep.curve.with_time(m * p.dt);
    rep.curve = cur;
    if (willmore) kappa = rep.kappa;
    if (p.flow == Flow::helfrich) {
      targets.lambda_A = rep.lambda_A;
      targets.lambda_V = rep.lambda_V;
    }
    res.max_newton_iterations = std::max(res.max_newton_iterations, rep.newton_iterations);
    const double A = area_A(cur), V = volume_V(cur);
    res.max_area_drift = std::max(res.max_area_drift, std::abs(A - res.area_start) / res.area_start);
    res.max_volume_drift = std::max(res.max_volume_drift, std::abs(V - res.volume_start) / std::abs(res.volume_start));
    if (cfg.observer) cfg.observer(m, rep);

    const bool last = !(m * p.dt < t_end);
    if (m % cfg.every == 0 || last) {
      DiagnosticsRow row = make_row(cur, p, wh);
      row.lambda_A = rep.lambda_A;
      row.lambda_V = rep.lambda_V;
      row.newton_iters = rep.newton_iterations;
      row.wall_time = wall;
      res.rows.push_back(row);
    }
    if (cfg.snapshot_every > 0 && (m % cfg.snapshot_every == 0 || last)) res.snapshots.push_back(cur);
  }
  res.steps = m;
  res.final_curve = cur;
  res.final_kappa = kappa;
  res.volume_end = volume_V(cur);
  if (res.termination == Termination::completed)
    res.message = "reached t=" + std::to_string(cur.time()) + " after " + std::to_string(m) + " steps";
  return res;
}

double exact_sphere_radius(double t, double kb, double r0) {
  if (!(r0 > 0.0) || !std::isfinite(r0)) throw InvalidArgument("sphere radius must be positive");
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("time must be nonnegative");
  if (kb == 0.0 || t == 0.0) return r0;
  const double z0 = r0 + 2.0 / kb;
  if (z0 == 0.0) return r0;
  auto g = [&](double z) {
    return 0.5 * (z * z - z0 * z0) - 4.0 / kb * (z - z0) + 4.0 / (kb * kb) * std::log(z / z0) + kb * kb * t;
  };
  auto dg = [&](double z) { return (kb * z - 2.0) * (kb * z - 2.0) / (kb * kb * z); };
  // g(z0) > 0; the root lies between z0 and the end state of the flow.
  const double zend = kb < 0.0 ? 0.0 : 2.0 / kb;
  if (kb > 0.0 && g(zend) > 0.0)
    throw DomainError("exact_sphere_radius: sphere has collapsed before t=" + std::to_string(t));
  double good = z0, bad = zend;  // g(good) > 0, g(bad) <= 0 (or -inf at 0)
  double z = 0.5 * (good + bad);
  for (int it = 0; it < 400; ++it) {
    const double gz = g(z);
    if (gz > 0.0) good = z; else bad = z;
    double next = z - gz / dg(z);
    const double lo = std::min(good, bad), hi = std::max(good, bad);
    if (!(next > lo && next < hi)) next = 0.5 * (good + bad);
    const double step = std::abs(next - z);
    z = next;
    if (step <= 1e-15 * (std::abs(z) + std::abs(2.0 / kb)) || hi - lo <= 1e-15 * std::abs(2.0 / kb)) break;
  }
  const double r = z - 2.0 / kb;
  if (!(r > 0.0)) throw DomainError("exact_sphere_radius: no positive root");
  return r;
}

std::vector<ConvergenceRow> convergence_study(const std::vector<int>& Js, double kb, double r0, double T) {
  if (Js.empty()) throw InvalidArgument("convergence study needs at least one J");
  std::vector<ConvergenceRow> rows;
  for (int J : Js) {
    ShapeSpec spec;
    spec.kind = ShapeKind::perturbed_semicircle;
    spec.params = {0.1, r0};
    spec.J = J;
    RunConfig cfg;
    cfg.initial = generate_initial(spec);
    const FrameData f = compute_frames(cfg.initial);
    ConvergenceRow row;
    row.J = J;
    row.h = *std::max_element(f.length.begin(), f.length.end());
    row.dt = 0.1 * row.h * row.h;
    cfg.params.flow = Flow::willmore;
    cfg.params.dt = row.dt;
    cfg.params.kappa_bar = kb;
    cfg.T = T;
    cfg.every = 1 << 30;
    double err = 0.0;
    cfg.observer = [&](int, const StepReport& rep) {
      const double r = exact_sphere_radius(rep.curve.time(), kb, r0);
      for (const auto& x : rep.curve.positions()) err = std::max(err, std::abs(norm(x) - r));
    };
    const RunResult res = run_flow(cfg);
    if (res.termination != Termination::completed)
      throw DomainError("convergence study J=" + std::to_string(J) + ": " + res.message);
    row.error = err;
    row.final_time = res.final_curve.time();
    row.steps = res.steps;
    if (!rows.empty())
      row.eoc = std::log(rows.back().error / err) / std::log(rows.back().h / row.h);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace axiflow
