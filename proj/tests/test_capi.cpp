#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "axiflow/axiflow.h"

TEST_CASE("status strings and name lookups") {
  CHECK(std::string(axf_status_string(AXF_OK)) == "ok");
  CHECK(std::string(axf_status_string(AXF_ERR_SINGULAR_SYSTEM)).size() > 0);
  axf_flow f;
  CHECK(axf_flow_from_string("F_star", &f) == AXF_OK);
  CHECK(f == AXF_FLOW_F_STAR);
  CHECK(std::string(axf_flow_name(AXF_FLOW_HELFRICH)) == "helfrich");
  CHECK(axf_flow_from_string("nope", &f) == AXF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(axf_last_error()).find("nope") != std::string::npos);
  axf_quadrature q;
  CHECK(axf_quadrature_from_string("exact", &q) == AXF_OK);
  CHECK(q == AXF_QUAD_EXACT);
  axf_constraints c;
  CHECK(axf_constraints_from_string("volume", &c) == AXF_OK);
  CHECK(c == AXF_CONSTRAIN_VOLUME);
  CHECK(axf_flow_from_string(nullptr, &f) == AXF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("curves from shapes and points") {
  axf_curve* c = nullptr;
  REQUIRE(axf_curve_from_shape("sphere", 64, &c) == AXF_OK);
  CHECK(axf_curve_nodes(c) == 65);
  CHECK_FALSE(axf_curve_closed(c));
  double a, v, ratio;
  REQUIRE(axf_curve_measures(c, &a, &v, &ratio) == AXF_OK);
  CHECK(a == doctest::Approx(4.0 * M_PI).epsilon(1e-3));
  CHECK(v == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-3));
  CHECK(ratio == doctest::Approx(1.0));
  std::vector<double> r(65), z(65);
  REQUIRE(axf_curve_positions(c, r.data(), z.data()) == AXF_OK);
  CHECK(r[0] == 0.0);
  CHECK(z[0] == doctest::Approx(1.0));
  axf_curve_free(c);

  axf_curve* bad = nullptr;
  CHECK(axf_curve_from_shape("capsule:7x1x7", 64, &bad) == AXF_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(axf_curve_from_shape("sphere", 64, nullptr) == AXF_ERR_INVALID_ARGUMENT);

  const double pr[] = {0, 1, 1, 0}, pz[] = {1, 0.5, -0.5, -1};
  axf_curve* p = nullptr;
  REQUIRE(axf_curve_from_points(3, 0, AXF_BOUNDARY_AXIS, AXF_BOUNDARY_AXIS, pr, pz, &p) == AXF_OK);
  CHECK(axf_curve_nodes(p) == 4);
  axf_curve_free(p);
  const double off[] = {0.5, 1, 1, 0};
  CHECK(axf_curve_from_points(3, 0, AXF_BOUNDARY_AXIS, AXF_BOUNDARY_AXIS, off, pz, &p) ==
        AXF_ERR_INVALID_ARGUMENT);
  axf_curve_free(nullptr);
}

TEST_CASE("shape catalogue") {
  const int n = axf_shape_count();
  CHECK(n >= 11);
  const char *name = nullptr, *syntax = nullptr, *desc = nullptr;
  REQUIRE(axf_shape_info(0, &name, &syntax, &desc) == AXF_OK);
  CHECK(std::string(name).size() > 0);
  CHECK(axf_shape_info(n, &name, &syntax, &desc) == AXF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("running a flow through the C interface") {
  axf_curve* c = nullptr;
  REQUIRE(axf_curve_from_shape("capsule:1x4x1", 32, &c) == AXF_OK);
  axf_run_config cfg;
  axf_run_config_init(&cfg);
  cfg.flow = AXF_FLOW_HELFRICH;
  cfg.dt = 1e-3;
  cfg.T = 0.02;
  cfg.every = 5;
  cfg.snapshot_every = 10;
  axf_run* run = nullptr;
  REQUIRE(axf_run_flow(c, &cfg, &run) == AXF_OK);
  CHECK(axf_run_termination(run) == AXF_TERMINATION_COMPLETED);
  CHECK(std::string(axf_run_termination_name(run)) == "completed");
  CHECK(axf_run_steps(run) == 20);
  CHECK(axf_run_max_area_drift(run) <= 1e-8);
  CHECK(axf_run_max_volume_drift(run) <= 1e-8);
  CHECK(axf_run_max_newton_iterations(run) <= 5);
  CHECK(axf_run_row_count(run) == 5);
  axf_diagnostics_row row;
  REQUIRE(axf_run_row(run, 4, &row) == AXF_OK);
  CHECK(row.t == doctest::Approx(0.02));
  CHECK(std::isfinite(row.Wh));
  CHECK(axf_run_row(run, 5, &row) == AXF_ERR_INVALID_ARGUMENT);
  CHECK(axf_run_snapshot_count(run) == 3);
  axf_curve* snap = nullptr;
  REQUIRE(axf_run_snapshot(run, 1, &snap) == AXF_OK);
  CHECK(axf_curve_time(snap) == doctest::Approx(0.01));
  axf_curve_free(snap);
  axf_curve* fin = nullptr;
  REQUIRE(axf_run_final_curve(run, &fin) == AXF_OK);
  CHECK(axf_curve_time(fin) == doctest::Approx(0.02));

  const auto dir = std::filesystem::temp_directory_path() / "axiflow_capi_test";
  std::filesystem::create_directories(dir);
  CHECK(axf_run_write_diagnostics(run, (dir / "d.csv").string().c_str()) == AXF_OK);
  CHECK(axf_curve_write_profile(fin, (dir / "p.csv").string().c_str()) == AXF_OK);
  CHECK(axf_curve_write_obj(fin, (dir / "s.obj").string().c_str(), 16) == AXF_OK);
  CHECK(std::filesystem::file_size(dir / "s.obj") > 0);
  CHECK(axf_curve_write_profile(fin, "/nonexistent-dir/x/p.csv") == AXF_ERR_IO);
  std::filesystem::remove_all(dir);
  axf_curve_free(fin);
  axf_run_free(run);

  cfg.dt = 0.0;
  run = nullptr;
  CHECK(axf_run_flow(c, &cfg, &run) == AXF_ERR_INVALID_ARGUMENT);
  CHECK(run == nullptr);
  CHECK(std::string(axf_last_error()).size() > 0);
  axf_curve_free(c);
}

TEST_CASE("off-axis termination is reported") {
  axf_curve* c = nullptr;
  REQUIRE(axf_curve_from_shape("capsule:1x8x1", 64, &c) == AXF_OK);
  axf_run_config cfg;
  axf_run_config_init(&cfg);
  cfg.flow = AXF_FLOW_E;
  cfg.dt = 1e-3;
  cfg.T = 1.0;
  cfg.every = 100;
  axf_run* run = nullptr;
  REQUIRE(axf_run_flow(c, &cfg, &run) == AXF_OK);
  CHECK(axf_run_termination(run) == AXF_TERMINATION_OFF_AXIS);
  CHECK(std::string(axf_run_message(run)).size() > 0);
  CHECK(std::abs(axf_run_relative_volume_change(run)) < 1e-2);
  axf_run_free(run);
  axf_curve_free(c);
}

TEST_CASE("reference solutions") {
  double r = 0.0;
  REQUIRE(axf_exact_sphere_radius(0.0, -1.0, 1.0, &r) == AXF_OK);
  CHECK(r == 1.0);
  CHECK(axf_exact_sphere_radius(100.0, 1.0, 1.0, &r) == AXF_ERR_DOMAIN);
  const int Js[] = {16, 32};
  axf_convergence_row rows[2];
  REQUIRE(axf_converge(Js, 2, -1.0, 1.0, 0.1, rows) == AXF_OK);
  CHECK(rows[1].J == 32);
  CHECK(rows[1].error < rows[0].error);
  CHECK(rows[1].eoc > 1.5);
  CHECK(axf_converge(Js, 0, -1.0, 1.0, 0.1, rows) == AXF_ERR_INVALID_ARGUMENT);
}
