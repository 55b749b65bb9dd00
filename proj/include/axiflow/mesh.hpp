#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace axiflow {

// Point or vector in the meridian half-plane: r = e1 (distance to axis), z = e2.
struct Vec2 {
  double r = 0.0;
  double z = 0.0;

  Vec2& operator+=(Vec2 o) { r += o.r; z += o.z; return *this; }
  Vec2& operator-=(Vec2 o) { r -= o.r; z -= o.z; return *this; }
  Vec2& operator*=(double s) { r *= s; z *= s; return *this; }
  double operator[](int c) const { return c == 0 ? r : z; }
  double& operator[](int c) { return c == 0 ? r : z; }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return a += b; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return a -= b; }
inline Vec2 operator*(double s, Vec2 a) { return a *= s; }
inline Vec2 operator*(Vec2 a, double s) { return a *= s; }
inline double dot(Vec2 a, Vec2 b) { return a.r * b.r + a.z * b.z; }
inline double norm(Vec2 a) { return std::hypot(a.r, a.z); }
// Clockwise quarter turn.
inline Vec2 perp(Vec2 a) { return {a.z, -a.r}; }

enum class Closure { closed, open };

enum class BoundaryClass {
  axis,           // X.e1 = 0
  cylinder_slip,  // X.e1 fixed, slides along e2
  plane_slip,     // X.e2 fixed, slides along e1
  dirichlet,      // both fixed
};

const char* to_string(BoundaryClass c);

class GridTopology {
 public:
  GridTopology() = default;

  int elements() const { return J_; }
  int nodes() const { return closure_ == Closure::closed ? J_ : J_ + 1; }
  Closure closure() const { return closure_; }
  bool closed() const { return closure_ == Closure::closed; }
  double h() const { return 1.0 / J_; }
  double node_param(int i) const { return static_cast<double>(i) / J_; }

  // Element e joins nodes e and e+1 (wrapping on closed grids).
  int left(int e) const { return e; }
  int right(int e) const { return closed() && e == J_ - 1 ? 0 : e + 1; }

  // Class of node i if it is an endpoint of an open grid.
  std::optional<BoundaryClass> boundary(int node) const;
  // Endpoint index 0 or 1 for an open-grid endpoint node, else -1.
  int endpoint_of(int node) const;
  bool is_axis(int node) const { return boundary(node) == BoundaryClass::axis; }
  BoundaryClass endpoint_class(int endpoint) const { return classes_[endpoint]; }

  // Whether component c (0 = e1, 1 = e2) of a test/trial direction is free at a node.
  bool component_free(int node, int c) const;

  friend GridTopology build_topology(int J, Closure closure,
                                     const std::map<int, BoundaryClass>& classes);

 private:
  int J_ = 0;
  Closure closure_ = Closure::closed;
  std::array<BoundaryClass, 2> classes_{};
};

GridTopology build_topology(int J, Closure closure,
                            const std::map<int, BoundaryClass>& classes = {});

class Curve {
 public:
  Curve() = default;
  // Throws InvalidArgument on size mismatch, non-finite data or axis endpoints off the axis.
  Curve(GridTopology topology, std::vector<Vec2> positions, double time = 0.0);

  const GridTopology& topology() const { return topo_; }
  const std::vector<Vec2>& positions() const { return x_; }
  const Vec2& operator[](int i) const { return x_[i]; }
  double time() const { return t_; }
  int nodes() const { return topo_.nodes(); }

  Curve with_time(double t) const { Curve c = *this; c.t_ = t; return c; }
  Curve scaled(double c) const;
  Curve translated(Vec2 d) const;

 private:
  GridTopology topo_;
  std::vector<Vec2> x_;
  double t_ = 0.0;
};

// Contact-energy changes at endpoints 0 and 1; only meaningful at
// cylinder_slip / plane_slip endpoints.
struct ContactSpec {
  std::array<double, 2> rho_hat{0.0, 0.0};
};

// Throws InvalidArgument if a nonzero value sits on an endpoint without contact energy.
void validate_contact(const GridTopology& topo, const ContactSpec& contact);

struct FrameData {
  std::vector<Vec2> tangent;    // per element, unit
  std::vector<Vec2> normal;     // per element, -tangent^perp
  std::vector<double> length;   // per element
  std::vector<Vec2> omega;      // per node, unnormalised lumped normal
};

FrameData compute_frames(const Curve& curve);

double element_ratio(const Curve& curve);

struct ValidationReport {
  bool off_axis_negative = false;     // some X.e1 < 0 away from the axis endpoints
  std::vector<int> negative_nodes;
  bool degenerate = false;            // zero-length element
  int degenerate_element = -1;
  bool normals_rank_deficient = false;  // all lumped normals parallel
  bool ok() const { return !off_axis_negative && !degenerate && !normals_rank_deficient; }
  std::string summary() const;
};

ValidationReport validate_state(const Curve& curve, const FrameData& frames);
// Convenience overload; records degeneracy instead of throwing.
ValidationReport validate_state(const Curve& curve);

}  // namespace axiflow
