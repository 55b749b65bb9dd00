/* C interface to the axisymmetric geometric-flow library. */
#ifndef AXIFLOW_H
#define AXIFLOW_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(AXF_BUILDING_LIBRARY)
#define AXF_API __attribute__((visibility("default")))
#else
#define AXF_API
#endif

typedef enum axf_status {
  AXF_OK = 0,
  AXF_ERR_INVALID_ARGUMENT = 1,
  AXF_ERR_DEGENERATE_MESH = 2,
  AXF_ERR_SINGULAR_SYSTEM = 3,
  AXF_ERR_NEWTON_FAILURE = 4,
  AXF_ERR_DOMAIN = 5,
  AXF_ERR_IO = 6,
  AXF_ERR_INTERNAL = 7
} axf_status;

typedef enum axf_flow {
  AXF_FLOW_E = 0,
  AXF_FLOW_F = 1,
  AXF_FLOW_F_STAR = 2,
  AXF_FLOW_I_STAR = 3,
  AXF_FLOW_WILLMORE = 4,
  AXF_FLOW_HELFRICH = 5
} axf_flow;

typedef enum axf_quadrature { AXF_QUAD_LUMPED = 0, AXF_QUAD_EXACT = 1 } axf_quadrature;

typedef enum axf_constraints {
  AXF_CONSTRAIN_AREA_VOLUME = 0,
  AXF_CONSTRAIN_AREA = 1,
  AXF_CONSTRAIN_VOLUME = 2,
  AXF_CONSTRAIN_NONE = 3
} axf_constraints;

typedef enum axf_boundary {
  AXF_BOUNDARY_AXIS = 0,
  AXF_BOUNDARY_CYLINDER_SLIP = 1,
  AXF_BOUNDARY_PLANE_SLIP = 2,
  AXF_BOUNDARY_DIRICHLET = 3
} axf_boundary;

typedef enum axf_termination {
  AXF_TERMINATION_COMPLETED = 0,
  AXF_TERMINATION_OFF_AXIS = 1,
  AXF_TERMINATION_SOLVER_FAILURE = 2
} axf_termination;

typedef struct axf_curve axf_curve;
typedef struct axf_run axf_run;

typedef struct axf_run_config {
  axf_flow flow;
  axf_quadrature quadrature;
  double dt;
  double T;
  double kappa_bar;
  double alpha;
  double xi;
  double rho_hat[2];
  axf_constraints constraints;
  int every;          /* diagnostics cadence in steps */
  int snapshot_every; /* curve snapshot cadence in steps, 0 = none */
} axf_run_config;

typedef struct axf_diagnostics_row {
  double t, E, A, V, Wh, ratio, max_r, z_extent, lambda_A, lambda_V;
  int newton_iters;
  double wall_time;
} axf_diagnostics_row;

typedef struct axf_convergence_row {
  int J;
  double h, dt, error, eoc, final_time;
  int steps;
} axf_convergence_row;

/* Message of the last failed call on this thread ("" if none). */
AXF_API const char* axf_last_error(void);
AXF_API const char* axf_status_string(axf_status status);

AXF_API void axf_run_config_init(axf_run_config* config);
AXF_API axf_status axf_flow_from_string(const char* name, axf_flow* out);
AXF_API axf_status axf_quadrature_from_string(const char* name, axf_quadrature* out);
AXF_API axf_status axf_constraints_from_string(const char* name, axf_constraints* out);
AXF_API const char* axf_flow_name(axf_flow flow);

/* Curves. */
AXF_API axf_status axf_curve_from_shape(const char* shape, int J, axf_curve** out);
AXF_API axf_status axf_curve_from_points(int J, int closed, axf_boundary class0, axf_boundary class1,
                                         const double* r, const double* z, axf_curve** out);
AXF_API void axf_curve_free(axf_curve* curve);
AXF_API int axf_curve_nodes(const axf_curve* curve);
AXF_API int axf_curve_closed(const axf_curve* curve);
AXF_API double axf_curve_time(const axf_curve* curve);
AXF_API axf_status axf_curve_positions(const axf_curve* curve, double* r, double* z);
AXF_API axf_status axf_curve_measures(const axf_curve* curve, double* area, double* volume,
                                      double* ratio);
AXF_API axf_status axf_curve_write_profile(const axf_curve* curve, const char* path);
AXF_API axf_status axf_curve_write_obj(const axf_curve* curve, const char* path, int n_theta);

/* Runs. */
AXF_API axf_status axf_run_flow(const axf_curve* initial, const axf_run_config* config, axf_run** out);
AXF_API void axf_run_free(axf_run* run);
AXF_API axf_termination axf_run_termination(const axf_run* run);
AXF_API const char* axf_run_termination_name(const axf_run* run);
AXF_API const char* axf_run_message(const axf_run* run);
AXF_API int axf_run_steps(const axf_run* run);
AXF_API double axf_run_relative_volume_change(const axf_run* run);
AXF_API double axf_run_max_area_drift(const axf_run* run);
AXF_API double axf_run_max_volume_drift(const axf_run* run);
AXF_API int axf_run_stability_violations(const axf_run* run);
AXF_API double axf_run_max_stability_excess(const axf_run* run);
AXF_API int axf_run_max_newton_iterations(const axf_run* run);
AXF_API int axf_run_row_count(const axf_run* run);
AXF_API axf_status axf_run_row(const axf_run* run, int index, axf_diagnostics_row* out);
AXF_API axf_status axf_run_final_curve(const axf_run* run, axf_curve** out);
AXF_API int axf_run_snapshot_count(const axf_run* run);
AXF_API axf_status axf_run_snapshot(const axf_run* run, int index, axf_curve** out);
AXF_API axf_status axf_run_write_diagnostics(const axf_run* run, const char* path);

/* Reference solutions and studies. */
AXF_API axf_status axf_exact_sphere_radius(double t, double kappa_bar, double r0, double* out);
/* Fills `rows` (length n) for the perturbed-semicircle Willmore convergence test. */
AXF_API axf_status axf_converge(const int* Js, int n, double kappa_bar, double r0, double T,
                                axf_convergence_row* rows);

/* Shape catalogue; returned strings live for the lifetime of the library. */
AXF_API int axf_shape_count(void);
AXF_API axf_status axf_shape_info(int index, const char** name, const char** syntax,
                                  const char** description);

#ifdef __cplusplus
}
#endif

#endif /* AXIFLOW_H */
