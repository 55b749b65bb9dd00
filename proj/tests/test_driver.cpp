#include <doctest.h>

#include <cmath>
#include <cstring>

#include "axiflow/driver.hpp"
#include "axiflow/error.hpp"
#include "support.hpp"

using namespace axiflow;
using BC = BoundaryClass;

namespace {

// Classical RK4 on r' = -kb/r (2/r + kb).
double rk4_radius(double T, double kb, double r0, int n) {
  auto f = [&](double r) { return -kb / r * (2.0 / r + kb); };
  const double h = T / n;
  double r = r0;
  for (int i = 0; i < n; ++i) {
    const double k1 = f(r), k2 = f(r + 0.5 * h * k1), k3 = f(r + 0.5 * h * k2), k4 = f(r + h * k3);
    r += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return r;
}

RunConfig config(Curve c, Flow flow, double dt, double T) {
  RunConfig cfg;
  cfg.initial = std::move(c);
  cfg.params.flow = flow;
  cfg.params.dt = dt;
  if (flow == Flow::surface_diffusion_Fstar || flow == Flow::intermediate_Istar)
    cfg.params.quadrature = Quadrature::exact;
  cfg.T = T;
  return cfg;
}

}  // namespace

TEST_CASE("exact sphere radius") {
  CHECK(exact_sphere_radius(3.0, 0.0, 1.7) == 1.7);
  CHECK(exact_sphere_radius(5.0, -2.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (double t : {0.1, 0.5, 1.0}) {
    const double oracle = rk4_radius(t, -1.0, 1.0, 20000);
    CHECK(std::abs(exact_sphere_radius(t, -1.0, 1.0) - oracle) <= 1e-10);
  }
  CHECK(std::abs(exact_sphere_radius(0.2, 1.0, 2.0) - rk4_radius(0.2, 1.0, 2.0, 20000)) <= 1e-10);
  CHECK(std::abs(exact_sphere_radius(0.3, -3.0, 0.5) - rk4_radius(0.3, -3.0, 0.5, 20000)) <= 1e-10);
  CHECK_THROWS_AS(exact_sphere_radius(100.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(exact_sphere_radius(1.0, -1.0, 0.0), InvalidArgument);
}

TEST_CASE("diagnostics and snapshot cadence") {
  RunConfig cfg = config(test::shape(ShapeKind::semicircle, 16), Flow::surface_diffusion_E, 1e-3, 0.01);
  cfg.every = 3;
  cfg.snapshot_every = 5;
  int calls = 0;
  cfg.observer = [&](int step, const StepReport& r) {
    ++calls;
    CHECK(r.curve.time() == doctest::Approx(step * 1e-3));
  };
  const RunResult r = run_flow(cfg);
  CHECK(r.termination == Termination::completed);
  CHECK(r.steps == 10);
  CHECK(calls == 10);
  REQUIRE(r.rows.size() == 5);
  CHECK(r.rows.front().t == 0.0);
  CHECK(r.rows[1].t == doctest::Approx(0.003));
  CHECK(r.rows.back().t == doctest::Approx(0.01));
  CHECK(std::isnan(r.rows.back().Wh));
  CHECK(r.rows.back().E == r.rows.back().A);
  CHECK(r.snapshots.size() == 3);
  CHECK(r.final_curve.time() == doctest::Approx(0.01));
}

TEST_CASE("invalid run configurations") {
  RunConfig cfg = config(test::shape(ShapeKind::semicircle, 16), Flow::surface_diffusion_E, 1e-3, 0.0);
  CHECK_THROWS_AS(run_flow(cfg), InvalidArgument);
  cfg.T = 1.0;
  cfg.every = 0;
  CHECK_THROWS_AS(run_flow(cfg), InvalidArgument);
  cfg = config(test::shape(ShapeKind::quarter_circle_droplet, 16), Flow::willmore, 1e-3, 1.0);
  CHECK_THROWS_AS(run_flow(cfg), InvalidArgument);
}

TEST_CASE("pinch-off ends the run with the last valid curve") {
  const RunResult r = run_flow(config(test::shape(ShapeKind::capsule, 64, {1, 8, 1}), Flow::surface_diffusion_E,
                                      1e-3, 2.0));
  CHECK(r.termination == Termination::off_axis);
  CHECK(r.final_curve.time() == doctest::Approx(0.25).epsilon(0.1));
  CHECK(validate_state(r.final_curve).ok());
  CHECK(std::string(to_string(r.termination)) == "off_axis");
}

TEST_CASE("singular steps end the run as a solver failure") {
  const Curve line = test::open_curve({{1, 1}, {1, 0.5}, {1, 0}, {1, -0.5}, {1, -1}}, BC::cylinder_slip,
                                      BC::cylinder_slip);
  const RunResult r = run_flow(config(line, Flow::surface_diffusion_E, 1e-3, 1.0));
  CHECK(r.termination == Termination::solver_failure);
  CHECK(r.steps == 0);
  CHECK(r.message.find("singular") != std::string::npos);
}

TEST_CASE("stable scheme run records no violations") {
  const RunResult r = run_flow(config(test::shape(ShapeKind::capsule, 32, {1, 4, 1}),
                                      Flow::surface_diffusion_Fstar, 1e-3, 0.05));
  CHECK(r.termination == Termination::completed);
  CHECK(r.stability_violations == 0);
  CHECK(r.max_stability_excess <= 1e-12);
  CHECK(r.max_newton_iterations >= 1);
  CHECK(std::abs(r.relative_volume_change()) < 2e-3);
}

TEST_CASE("Helfrich run tracks constraint drift") {
  RunConfig cfg = config(test::shape(ShapeKind::capsule, 32, {1, 4, 1}), Flow::helfrich, 1e-3, 0.05);
  const RunResult r = run_flow(cfg);
  CHECK(r.termination == Termination::completed);
  CHECK(r.max_area_drift <= 1e-8);
  CHECK(r.max_volume_drift <= 1e-8);
  CHECK(r.max_newton_iterations <= 5);
  CHECK(std::isfinite(r.rows.back().Wh));
  CHECK(r.rows.back().Wh < r.rows.front().Wh);
}

TEST_CASE("runs are deterministic") {
  const RunConfig cfg = config(test::shape(ShapeKind::capsule, 32, {1, 3, 1}), Flow::willmore, 1e-3, 0.02);
  const RunResult a = run_flow(cfg), b = run_flow(cfg);
  REQUIRE(a.final_curve.nodes() == b.final_curve.nodes());
  CHECK(std::memcmp(a.final_curve.positions().data(), b.final_curve.positions().data(),
                    a.final_curve.nodes() * sizeof(Vec2)) == 0);
}

TEST_CASE("convergence study on the coarsest level") {
  const auto rows = convergence_study({32}, -1.0, 1.0, 1.0);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].J == 32);
  CHECK(rows[0].dt == doctest::Approx(0.1 * rows[0].h * rows[0].h));
  CHECK(rows[0].error == doctest::Approx(1.9659e-3).epsilon(0.02));
  CHECK(std::isnan(rows[0].eoc));
  CHECK(rows[0].final_time >= 1.0);
  CHECK_THROWS_AS(convergence_study({}), InvalidArgument);
}
