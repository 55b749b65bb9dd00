#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "axiflow/error.hpp"
#include "axiflow/geometry.hpp"
#include "support.hpp"

using namespace axiflow;
using BC = BoundaryClass;
using std::numbers::pi;

namespace {

// (0,1) -> (1,0) -> (0,-1) with midpoints inserted, which leaves A and V unchanged.
Curve double_cone() {
  return test::open_curve({{0, 1}, {0.5, 0.5}, {1, 0}, {0.5, -0.5}, {0, -1}}, BC::axis, BC::axis);
}

Curve reversed(const Curve& c) {
  std::vector<Vec2> x(c.positions().rbegin(), c.positions().rend());
  return Curve(c.topology(), x);
}

double observed_order(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

}  // namespace

TEST_CASE("area") {
  const Curve axis = test::open_curve({{0, 1}, {0, 0.5}, {0, 0}, {0, -1}}, BC::axis, BC::axis);
  CHECK(area_A(axis) == 0.0);
  CHECK(area_A(double_cone()) == doctest::Approx(2.0 * pi * std::sqrt(2.0)).epsilon(1e-14));

  const double e1 = std::abs(area_A(test::shape(ShapeKind::sphere, 32)) - 4.0 * pi);
  const double e2 = std::abs(area_A(test::shape(ShapeKind::sphere, 64)) - 4.0 * pi);
  CHECK(e2 < 1e-2);
  CHECK(observed_order(e1, e2) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("energy with contact terms") {
  const Curve drop = test::shape(ShapeKind::quarter_circle_droplet, 16, {2.0});
  const auto& x = drop.positions();
  REQUIRE(x.back().r == doctest::Approx(2.0));
  REQUIRE(x.back().z == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(energy_E(drop, {}) == area_A(drop));
  ContactSpec c;
  c.rho_hat[1] = -0.5;
  CHECK(energy_E(drop, c) == doctest::Approx(area_A(drop) - 2.0 * pi));

  const Curve wall = test::open_curve({{0, 4}, {0.5, 3.8}, {0.9, 3.4}, {1, 3}}, BC::axis, BC::cylinder_slip);
  ContactSpec w;
  w.rho_hat[1] = 1.0;
  CHECK(energy_E(wall, w) == doctest::Approx(area_A(wall) + 6.0 * pi));
}

TEST_CASE("volume") {
  CHECK(volume_V(double_cone()) == doctest::Approx(2.0 * pi / 3.0).epsilon(1e-14));
  CHECK(volume_V(reversed(double_cone())) == doctest::Approx(-2.0 * pi / 3.0).epsilon(1e-14));
  const double e1 = std::abs(volume_V(test::shape(ShapeKind::sphere, 32)) - 4.0 * pi / 3.0);
  const double e2 = std::abs(volume_V(test::shape(ShapeKind::sphere, 64)) - 4.0 * pi / 3.0);
  CHECK(observed_order(e1, e2) == doctest::Approx(2.0).epsilon(0.02));
  // Closed generators enclose a solid torus: 2 pi^2 R r^2 in the limit.
  CHECK(volume_V(test::shape(ShapeKind::torus, 512, {2.0, 0.5})) ==
        doctest::Approx(2.0 * pi * pi * 2.0 * 0.25).epsilon(1e-4));
}

TEST_CASE("area and volume scale with c^2 and c^3") {
  for (const Curve& c : {test::shape(ShapeKind::capsule, 64, {1, 7, 1}), test::shape(ShapeKind::torus, 50, {1, 0.25}),
                         test::shape(ShapeKind::dumbbell_cylinder, 40)})
    for (double s : {0.3, 1.7, 12.0}) {
      const Curve d = c.scaled(s);
      CHECK(std::abs(area_A(d) - s * s * area_A(c)) <= 1e-12 * std::abs(area_A(d)));
      CHECK(std::abs(volume_V(d) - s * s * s * volume_V(c)) <= 1e-12 * std::abs(volume_V(d)));
    }
}

TEST_CASE("azimuthal curvature operator") {
  const Curve line = test::open_curve({{2, 1}, {2, 0}, {2, -1}, {2, -2}}, BC::cylinder_slip, BC::cylinder_slip);
  const FrameData f = compute_frames(line);
  const KappaOperator k = kappa_operator(line, f);
  CHECK(k.value[1] == doctest::Approx(0.5));

  const Curve s = test::shape(ShapeKind::sphere, 256);
  const KappaOperator ks = kappa_operator(s, compute_frames(s));
  CHECK(ks.axis[0]);
  CHECK(ks.kappa_minus(0, 1.5) == 3.0);
  CHECK(ks.factor(0) == 2.0);
  CHECK(ks.value[128] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(ks.kappa_minus(128, 0.0) == -ks.value[128]);

  const Curve bad = test::open_curve({{0, 1}, {0, 0.5}, {1, 0}, {0, -1}}, BC::axis, BC::axis);
  CHECK_THROWS_AS(kappa_operator(bad, compute_frames(bad)), DomainError);
}

TEST_CASE("initial curvature") {
  const Curve line = test::open_curve({{2, 1}, {2, 0}, {2, -1}, {2, -2}}, BC::cylinder_slip, BC::cylinder_slip);
  const auto k0 = curvature_init(line, compute_frames(line));
  CHECK(k0[1] == doctest::Approx(0.0));
  CHECK(k0[2] == doctest::Approx(0.0));

  // Clockwise circle of radius 0.5 has outward normals, so kappa = -1/r.
  for (int J : {32, 64}) {
    const Curve c = test::shape(ShapeKind::torus, J, {3.0, 0.5});
    const auto k = curvature_init(c, compute_frames(c));
    for (double v : k) CHECK(v == doctest::Approx(-2.0).epsilon(20.0 / (J * J)));
  }

  const Curve s = test::shape(ShapeKind::sphere, 64);
  const auto ks = curvature_init(s, compute_frames(s));
  for (int i = 1; i < 64; ++i) CHECK(ks[i] == doctest::Approx(-1.0).epsilon(1e-3));
}

TEST_CASE("discrete Willmore energy") {
  const Curve s = test::shape(ShapeKind::sphere, 128);
  const auto k = curvature_init(s, compute_frames(s));
  CHECK(willmore_energy(s, k, -2.0) < 1e-3);

  double prev = 0.0;
  for (int J : {64, 128, 256}) {
    const Curve c = test::shape(ShapeKind::sphere, J);
    const double w = willmore_energy(c, curvature_init(c, compute_frames(c)), 0.0);
    const double err = std::abs(w - 8.0 * pi);
    if (prev > 0.0) CHECK(err < 0.6 * prev);
    prev = err;
  }
  CHECK(prev < 0.05);

  const Curve axis = test::open_curve({{0, 1}, {0, 0.5}, {0, 0}, {0, -1}}, BC::axis, BC::axis);
  CHECK(willmore_energy(axis, {1, 1, 1, 1}, 0.0) == 0.0);
}

TEST_CASE("mean and Gaussian curvature on the unit sphere") {
  const Curve s = test::shape(ShapeKind::sphere, 128);
  const FrameData f = compute_frames(s);
  const auto d = curvature_diagnostics(s, f, curvature_init(s, f));
  for (int i : {1, 30, 64, 127}) {
    CHECK(d.mean[i] == doctest::Approx(-2.0).epsilon(1e-3));
    CHECK(d.gaussian[i] == doctest::Approx(1.0).epsilon(1e-3));
  }
  // Axis nodes use the limit of the azimuthal curvature.
  const auto a = curvature_diagnostics(s, f, NodalScalarField(129, -1.0));
  CHECK(a.mean[0] == -2.0);
  CHECK(a.gaussian[0] == 1.0);
}

TEST_CASE("mean and Gaussian curvature on a cylinder") {
  const Curve c = test::open_curve({{1, 1}, {1, 0.5}, {1, 0}, {1, -0.5}, {1, -1}}, BC::cylinder_slip,
                                   BC::cylinder_slip);
  const FrameData f = compute_frames(c);
  const auto d = curvature_diagnostics(c, f, curvature_init(c, f));
  for (int i = 1; i < 4; ++i) {
    CHECK(d.mean[i] == doctest::Approx(-1.0));
    CHECK(d.gaussian[i] == doctest::Approx(0.0));
  }
}

TEST_CASE("first variations match central differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const Curve& c : {test::shape(ShapeKind::capsule, 24, {1, 4, 1}), test::shape(ShapeKind::torus, 20, {2, 0.7}),
                         test::shape(ShapeKind::quarter_circle_droplet, 16), test::shape(ShapeKind::dumbbell_cylinder, 20)}) {
    const auto& topo = c.topology();
    std::vector<Vec2> d(c.nodes());
    for (int i = 0; i < c.nodes(); ++i)
      for (int k = 0; k < 2; ++k) d[i][k] = topo.component_free(i, k) ? u(rng) : 0.0;
    const Variations v = variations(c);
    double dA = 0.0, dV = 0.0;
    for (int i = 0; i < c.nodes(); ++i) {
      dA += dot(v.area[i], d[i]);
      dV += dot(v.volume[i], d[i]);
    }
    auto moved = [&](double eps) {
      std::vector<Vec2> x = c.positions();
      for (int i = 0; i < c.nodes(); ++i) x[i] += eps * d[i];
      return Curve(topo, x);
    };
    auto error = [&](double eps, auto functional, double exact) {
      const double fd = (functional(moved(eps)) - functional(moved(-eps))) / (2.0 * eps);
      return std::abs(fd - exact);
    };
    const double ea1 = error(2e-2, area_A, dA), ea2 = error(1e-2, area_A, dA);
    const double ev1 = error(2e-2, volume_V, dV), ev2 = error(1e-2, volume_V, dV);
    CHECK(observed_order(ea1, ea2) >= 1.9);
    CHECK(observed_order(ev1, ev2) >= 1.9);
  }
}

TEST_CASE("area variation annihilates vertical translation of a closed curve") {
  const Curve c = test::shape(ShapeKind::torus, 64, {2.0, 0.5});
  const Variations v = variations(c);
  double s = 0.0;
  for (const auto& a : v.area) s += a.z;
  CHECK(std::abs(s) < 1e-12);
}
