#include "axiflow/axiflow.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "axiflow/driver.hpp"
#include "axiflow/error.hpp"
#include "axiflow/io.hpp"
#include "axiflow/shapes.hpp"

struct axf_curve {
  axiflow::Curve curve;
};

struct axf_run {
  axiflow::RunResult result;
};

namespace {

thread_local std::string g_last_error;

axf_status to_status(axiflow::ErrorCode c) {
  switch (c) {
    case axiflow::ErrorCode::invalid_argument: return AXF_ERR_INVALID_ARGUMENT;
    case axiflow::ErrorCode::degenerate_mesh: return AXF_ERR_DEGENERATE_MESH;
    case axiflow::ErrorCode::singular_system: return AXF_ERR_SINGULAR_SYSTEM;
    case axiflow::ErrorCode::newton_failure: return AXF_ERR_NEWTON_FAILURE;
    case axiflow::ErrorCode::domain_error: return AXF_ERR_DOMAIN;
    case axiflow::ErrorCode::io_error: return AXF_ERR_IO;
  }
  return AXF_ERR_INTERNAL;
}

template <class F>
axf_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return AXF_OK;
  } catch (const axiflow::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return AXF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AXF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return AXF_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw axiflow::InvalidArgument(what);
}

axiflow::BoundaryClass to_class(axf_boundary b) {
  switch (b) {
    case AXF_BOUNDARY_AXIS: return axiflow::BoundaryClass::axis;
    case AXF_BOUNDARY_CYLINDER_SLIP: return axiflow::BoundaryClass::cylinder_slip;
    case AXF_BOUNDARY_PLANE_SLIP: return axiflow::BoundaryClass::plane_slip;
    case AXF_BOUNDARY_DIRICHLET: return axiflow::BoundaryClass::dirichlet;
  }
  throw axiflow::InvalidArgument("unknown boundary class");
}

struct Named {
  const char* name;
  int value;
};

constexpr Named kFlows[] = {{"E", AXF_FLOW_E},           {"F", AXF_FLOW_F},
                            {"F_star", AXF_FLOW_F_STAR}, {"I_star", AXF_FLOW_I_STAR},
                            {"willmore", AXF_FLOW_WILLMORE}, {"helfrich", AXF_FLOW_HELFRICH}};
constexpr Named kQuads[] = {{"lumped", AXF_QUAD_LUMPED}, {"exact", AXF_QUAD_EXACT}};
constexpr Named kConstraints[] = {{"area_volume", AXF_CONSTRAIN_AREA_VOLUME},
                                  {"area", AXF_CONSTRAIN_AREA},
                                  {"volume", AXF_CONSTRAIN_VOLUME},
                                  {"none", AXF_CONSTRAIN_NONE}};

template <size_t N>
int lookup(const Named (&table)[N], const char* name, const char* what) {
  require(name != nullptr, "null name");
  for (const auto& e : table)
    if (std::strcmp(e.name, name) == 0) return e.value;
  std::string choices;
  for (const auto& e : table) choices += std::string(choices.empty() ? "" : ", ") + e.name;
  throw axiflow::InvalidArgument(std::string("unknown ") + what + " '" + name + "' (expected one of " +
                                 choices + ")");
}

axiflow::DiagnosticsRow const& row_at(const axf_run* run, int index) {
  require(run != nullptr, "null run");
  require(index >= 0 && index < static_cast<int>(run->result.rows.size()), "row index out of range");
  return run->result.rows[index];
}

}  // namespace

extern "C" {

const char* axf_last_error(void) { return g_last_error.c_str(); }

const char* axf_status_string(axf_status s) {
  switch (s) {
    case AXF_OK: return "ok";
    case AXF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AXF_ERR_DEGENERATE_MESH: return "degenerate mesh";
    case AXF_ERR_SINGULAR_SYSTEM: return "singular system";
    case AXF_ERR_NEWTON_FAILURE: return "Newton failure";
    case AXF_ERR_DOMAIN: return "domain error";
    case AXF_ERR_IO: return "I/O error";
    case AXF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void axf_run_config_init(axf_run_config* c) {
  if (!c) return;
  c->flow = AXF_FLOW_E;
  c->quadrature = AXF_QUAD_LUMPED;
  c->dt = 1e-3;
  c->T = 1.0;
  c->kappa_bar = 0.0;
  c->alpha = 1.0;
  c->xi = 1.0;
  c->rho_hat[0] = c->rho_hat[1] = 0.0;
  c->constraints = AXF_CONSTRAIN_AREA_VOLUME;
  c->every = 1;
  c->snapshot_every = 0;
}

axf_status axf_flow_from_string(const char* name, axf_flow* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = static_cast<axf_flow>(lookup(kFlows, name, "scheme"));
  });
}

axf_status axf_quadrature_from_string(const char* name, axf_quadrature* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = static_cast<axf_quadrature>(lookup(kQuads, name, "quadrature"));
  });
}

axf_status axf_constraints_from_string(const char* name, axf_constraints* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = static_cast<axf_constraints>(lookup(kConstraints, name, "constraint mode"));
  });
}

const char* axf_flow_name(axf_flow flow) {
  for (const auto& e : kFlows)
    if (e.value == flow) return e.name;
  return "?";
}

axf_status axf_curve_from_shape(const char* shape, int J, axf_curve** out) {
  return guarded([&] {
    require(shape != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    auto c = axiflow::generate_initial(axiflow::parse_shape(shape, J));
    *out = new axf_curve{std::move(c)};
  });
}

axf_status axf_curve_from_points(int J, int closed, axf_boundary class0, axf_boundary class1,
                                 const double* r, const double* z, axf_curve** out) {
  return guarded([&] {
    require(r != nullptr && z != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    std::map<int, axiflow::BoundaryClass> classes;
    if (!closed) classes = {{0, to_class(class0)}, {1, to_class(class1)}};
    auto topo = axiflow::build_topology(J, closed ? axiflow::Closure::closed : axiflow::Closure::open, classes);
    std::vector<axiflow::Vec2> x(topo.nodes());
    for (int i = 0; i < topo.nodes(); ++i) x[i] = {r[i], z[i]};
    *out = new axf_curve{axiflow::Curve(topo, std::move(x))};
  });
}

void axf_curve_free(axf_curve* curve) { delete curve; }

int axf_curve_nodes(const axf_curve* c) { return c ? c->curve.nodes() : 0; }

int axf_curve_closed(const axf_curve* c) { return c && c->curve.topology().closed() ? 1 : 0; }

double axf_curve_time(const axf_curve* c) { return c ? c->curve.time() : 0.0; }

axf_status axf_curve_positions(const axf_curve* c, double* r, double* z) {
  return guarded([&] {
    require(c != nullptr && r != nullptr && z != nullptr, "null argument");
    for (int i = 0; i < c->curve.nodes(); ++i) {
      r[i] = c->curve[i].r;
      z[i] = c->curve[i].z;
    }
  });
}

axf_status axf_curve_measures(const axf_curve* c, double* area, double* volume, double* ratio) {
  return guarded([&] {
    require(c != nullptr, "null curve");
    if (area) *area = axiflow::area_A(c->curve);
    if (volume) *volume = axiflow::volume_V(c->curve);
    if (ratio) *ratio = axiflow::element_ratio(c->curve);
  });
}

axf_status axf_curve_write_profile(const axf_curve* c, const char* path) {
  return guarded([&] {
    require(c != nullptr && path != nullptr, "null argument");
    axiflow::write_file_atomic(path, axiflow::profile_csv(c->curve));
  });
}

axf_status axf_curve_write_obj(const axf_curve* c, const char* path, int n_theta) {
  return guarded([&] {
    require(c != nullptr && path != nullptr, "null argument");
    axiflow::write_file_atomic(path, axiflow::surface_obj(c->curve, n_theta));
  });
}

axf_status axf_run_flow(const axf_curve* initial, const axf_run_config* config, axf_run** out) {
  return guarded([&] {
    require(initial != nullptr && config != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    axiflow::RunConfig cfg;
    cfg.initial = initial->curve;
    auto& p = cfg.params;
    require(config->flow >= AXF_FLOW_E && config->flow <= AXF_FLOW_HELFRICH, "unknown flow");
    require(config->quadrature == AXF_QUAD_LUMPED || config->quadrature == AXF_QUAD_EXACT,
            "unknown quadrature");
    require(config->constraints >= AXF_CONSTRAIN_AREA_VOLUME && config->constraints <= AXF_CONSTRAIN_NONE,
            "unknown constraint mode");
    p.flow = static_cast<axiflow::Flow>(config->flow);
    p.quadrature = config->quadrature == AXF_QUAD_EXACT ? axiflow::Quadrature::exact : axiflow::Quadrature::lumped;
    p.dt = config->dt;
    p.kappa_bar = config->kappa_bar;
    p.alpha = config->alpha;
    p.xi = config->xi;
    p.contact.rho_hat = {config->rho_hat[0], config->rho_hat[1]};
    p.constraints = static_cast<axiflow::ConstraintMode>(config->constraints);
    cfg.T = config->T;
    cfg.every = config->every;
    cfg.snapshot_every = config->snapshot_every;
    auto res = axiflow::run_flow(cfg);
    *out = new axf_run{std::move(res)};
  });
}

void axf_run_free(axf_run* run) { delete run; }

axf_termination axf_run_termination(const axf_run* run) {
  return run ? static_cast<axf_termination>(run->result.termination) : AXF_TERMINATION_SOLVER_FAILURE;
}

const char* axf_run_termination_name(const axf_run* run) {
  return run ? axiflow::to_string(run->result.termination) : "";
}

const char* axf_run_message(const axf_run* run) { return run ? run->result.message.c_str() : ""; }

int axf_run_steps(const axf_run* run) { return run ? run->result.steps : 0; }

double axf_run_relative_volume_change(const axf_run* run) {
  return run ? run->result.relative_volume_change() : 0.0;
}

double axf_run_max_area_drift(const axf_run* run) { return run ? run->result.max_area_drift : 0.0; }

double axf_run_max_volume_drift(const axf_run* run) { return run ? run->result.max_volume_drift : 0.0; }

int axf_run_stability_violations(const axf_run* run) { return run ? run->result.stability_violations : 0; }

double axf_run_max_stability_excess(const axf_run* run) {
  return run ? run->result.max_stability_excess : 0.0;
}

int axf_run_max_newton_iterations(const axf_run* run) { return run ? run->result.max_newton_iterations : 0; }

int axf_run_row_count(const axf_run* run) { return run ? static_cast<int>(run->result.rows.size()) : 0; }

axf_status axf_run_row(const axf_run* run, int index, axf_diagnostics_row* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto& r = row_at(run, index);
    *out = {r.t,     r.E,        r.A,        r.V,        r.Wh,           r.ratio,
            r.max_r, r.z_extent, r.lambda_A, r.lambda_V, r.newton_iters, r.wall_time};
  });
}

axf_status axf_run_final_curve(const axf_run* run, axf_curve** out) {
  return guarded([&] {
    require(run != nullptr && out != nullptr, "null argument");
    *out = new axf_curve{run->result.final_curve};
  });
}

int axf_run_snapshot_count(const axf_run* run) {
  return run ? static_cast<int>(run->result.snapshots.size()) : 0;
}

axf_status axf_run_snapshot(const axf_run* run, int index, axf_curve** out) {
  return guarded([&] {
    require(run != nullptr && out != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(run->result.snapshots.size()), "snapshot index out of range");
    *out = new axf_curve{run->result.snapshots[index]};
  });
}

axf_status axf_run_write_diagnostics(const axf_run* run, const char* path) {
  return guarded([&] {
    require(run != nullptr && path != nullptr, "null argument");
    axiflow::write_file_atomic(path, axiflow::diagnostics_csv(run->result.rows));
  });
}

axf_status axf_exact_sphere_radius(double t, double kappa_bar, double r0, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = axiflow::exact_sphere_radius(t, kappa_bar, r0);
  });
}

axf_status axf_converge(const int* Js, int n, double kappa_bar, double r0, double T, axf_convergence_row* rows) {
  return guarded([&] {
    require(Js != nullptr && rows != nullptr && n > 0, "invalid J list");
    const auto res = axiflow::convergence_study(std::vector<int>(Js, Js + n), kappa_bar, r0, T);
    for (int i = 0; i < n; ++i)
      rows[i] = {res[i].J, res[i].h, res[i].dt, res[i].error, res[i].eoc, res[i].final_time, res[i].steps};
  });
}

int axf_shape_count(void) { return static_cast<int>(axiflow::list_shapes().size()); }

axf_status axf_shape_info(int index, const char** name, const char** syntax, const char** description) {
  static const std::vector<axiflow::ShapeInfo> shapes = axiflow::list_shapes();
  return guarded([&] {
    require(index >= 0 && index < static_cast<int>(shapes.size()), "shape index out of range");
    if (name) *name = shapes[index].name.c_str();
    if (syntax) *syntax = shapes[index].syntax.c_str();
    if (description) *description = shapes[index].description.c_str();
  });
}

}  // extern "C"
