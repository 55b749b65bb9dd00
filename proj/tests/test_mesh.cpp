#include <doctest.h>

#include <cmath>
#include <limits>

#include "axiflow/error.hpp"
#include "axiflow/mesh.hpp"
#include "support.hpp"

using namespace axiflow;
using BC = BoundaryClass;

TEST_CASE("closed topology wraps the last element onto node 0") {
  const GridTopology t = build_topology(4, Closure::closed);
  CHECK(t.elements() == 4);
  CHECK(t.nodes() == 4);
  CHECK(t.right(3) == 0);
  CHECK(t.left(3) == 3);
  CHECK(t.endpoint_of(0) == -1);
  CHECK_FALSE(t.boundary(0).has_value());
}

TEST_CASE("open topology with two axis endpoints") {
  const GridTopology t = build_topology(64, Closure::open, {{0, BC::axis}, {1, BC::axis}});
  CHECK(t.nodes() == 65);
  CHECK(t.is_axis(0));
  CHECK(t.is_axis(64));
  CHECK_FALSE(t.is_axis(32));
  CHECK(t.endpoint_of(64) == 1);
  CHECK(t.h() == doctest::Approx(1.0 / 64));
  CHECK_FALSE(t.component_free(0, 0));
  CHECK(t.component_free(0, 1));
}

TEST_CASE("component freedom per boundary class") {
  const GridTopology t = build_topology(4, Closure::open, {{0, BC::dirichlet}, {1, BC::plane_slip}});
  CHECK_FALSE(t.component_free(0, 0));
  CHECK_FALSE(t.component_free(0, 1));
  CHECK(t.component_free(4, 0));
  CHECK_FALSE(t.component_free(4, 1));
  const GridTopology c = build_topology(4, Closure::open, {{0, BC::cylinder_slip}, {1, BC::axis}});
  CHECK_FALSE(c.component_free(0, 0));
  CHECK(c.component_free(0, 1));
}

TEST_CASE("topology preconditions") {
  CHECK_THROWS_AS(build_topology(3, Closure::open, {{0, BC::plane_slip}}), InvalidArgument);
  CHECK_THROWS_AS(build_topology(2, Closure::closed), InvalidArgument);
  CHECK_THROWS_AS(build_topology(4, Closure::closed, {{0, BC::axis}}), InvalidArgument);
}

TEST_CASE("curve construction validates its data") {
  const GridTopology t = build_topology(3, Closure::open, {{0, BC::axis}, {1, BC::axis}});
  CHECK_THROWS_AS(Curve(t, {{0, 1}, {1, 0}, {0, -1}}), InvalidArgument);
  CHECK_THROWS_AS(Curve(t, {{0.1, 1}, {1, 0.5}, {1, -0.5}, {0, -1}}), InvalidArgument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Curve(t, {{0, 1}, {nan, 0.5}, {1, -0.5}, {0, -1}}), InvalidArgument);
  const Curve c(t, {{0, 1}, {1, 0.5}, {1, -0.5}, {0, -1}}, 0.5);
  CHECK(c.time() == 0.5);
  CHECK(c.scaled(2.0)[1].r == 2.0);
  CHECK(c.translated({0, 1})[3].z == 0.0);
}

TEST_CASE("frames of a horizontal segment") {
  const Curve c = test::open_curve({{1, 0}, {2, 0}, {3, 0}, {4, 0}}, BC::dirichlet, BC::dirichlet);
  const FrameData f = compute_frames(c);
  for (int e = 0; e < 3; ++e) {
    CHECK(f.tangent[e].r == doctest::Approx(1.0));
    CHECK(f.tangent[e].z == doctest::Approx(0.0));
    CHECK(f.normal[e].r == doctest::Approx(0.0));
    CHECK(f.normal[e].z == doctest::Approx(1.0));
    CHECK(f.length[e] == doctest::Approx(1.0));
  }
}

TEST_CASE("north-to-south semicircle has outward normals") {
  const Curve c = test::shape(ShapeKind::sphere, 64);
  CHECK(c[32].r == doctest::Approx(1.0));
  const FrameData f = compute_frames(c);
  const Vec2 w = f.omega[32];
  CHECK(w.r / norm(w) == doctest::Approx(1.0));
  CHECK(w.z / norm(w) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.normal[0].z > 0.0);
}

TEST_CASE("lumped normal is the length-weighted mean of adjacent normals") {
  const Curve c = test::open_curve({{1, 0}, {2, 0}, {3, 1}, {4, 1}}, BC::dirichlet, BC::dirichlet);
  const FrameData f = compute_frames(c);
  const double l0 = f.length[0], l1 = f.length[1];
  const Vec2 weighted = (1.0 / (l0 + l1)) * (l0 * f.normal[0] + l1 * f.normal[1]);
  CHECK(f.omega[1].r == doctest::Approx(weighted.r));
  CHECK(f.omega[1].z == doctest::Approx(weighted.z));

  const Curve s = test::open_curve({{1, 0}, {2, 0}, {3, 0.5}, {4, 1}}, BC::dirichlet, BC::dirichlet);
  const FrameData g = compute_frames(s);
  REQUIRE(g.length[1] == doctest::Approx(g.length[2]));
  const Vec2 mean = 0.5 * (g.normal[1] + g.normal[2]);
  CHECK(g.omega[2].r == doctest::Approx(mean.r));
  CHECK(g.omega[2].z == doctest::Approx(mean.z));
}

TEST_CASE("zero-length element is reported by index") {
  const Curve c = test::open_curve({{0, 1}, {1, 0}, {1, 0}, {0, -1}}, BC::axis, BC::axis);
  try {
    compute_frames(c);
    FAIL("expected DegenerateMesh");
  } catch (const DegenerateMesh& e) {
    CHECK(e.element() == 1);
  }
  CHECK_THROWS_AS(element_ratio(c), DegenerateMesh);
}

TEST_CASE("element ratio") {
  CHECK(element_ratio(test::shape(ShapeKind::torus, 40, {3.0, 1.0})) == doctest::Approx(1.0).epsilon(1e-12));
  const Curve c = test::open_curve({{1, 0}, {2, 0}, {4, 0}, {5, 0}}, BC::dirichlet, BC::dirichlet);
  CHECK(element_ratio(c) == doctest::Approx(2.0));
}

TEST_CASE("state validation") {
  const Curve s = test::shape(ShapeKind::semicircle, 64);
  CHECK(validate_state(s).ok());

  const Curve bad = test::open_curve({{0, 1}, {-0.01, 0.5}, {1, 0}, {0, -1}}, BC::axis, BC::axis);
  const ValidationReport r = validate_state(bad);
  CHECK(r.off_axis_negative);
  REQUIRE(r.negative_nodes.size() == 1);
  CHECK(r.negative_nodes[0] == 1);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.summary().empty());

  const Curve line = test::open_curve({{1, 1}, {1, 0}, {1, -1}, {1, -2}}, BC::cylinder_slip, BC::cylinder_slip);
  CHECK(validate_state(line).normals_rank_deficient);

  const Curve degen = test::open_curve({{0, 1}, {1, 0}, {1, 0}, {0, -1}}, BC::axis, BC::axis);
  const ValidationReport d = validate_state(degen);
  CHECK(d.degenerate);
  CHECK(d.degenerate_element == 1);
}

TEST_CASE("contact energies require a contact endpoint") {
  const GridTopology axis = build_topology(4, Closure::open, {{0, BC::axis}, {1, BC::axis}});
  ContactSpec c;
  CHECK_NOTHROW(validate_contact(axis, c));
  c.rho_hat[0] = 0.5;
  CHECK_THROWS_AS(validate_contact(axis, c), InvalidArgument);
  const GridTopology slip = build_topology(4, Closure::open, {{0, BC::axis}, {1, BC::plane_slip}});
  c = {};
  c.rho_hat[1] = -0.5;
  CHECK_NOTHROW(validate_contact(slip, c));
}
