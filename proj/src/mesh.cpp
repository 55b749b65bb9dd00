#include "axiflow/mesh.hpp"

#include <algorithm>
#include <sstream>

#include "axiflow/error.hpp"

namespace axiflow {

const char* to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::axis: return "axis";
    case BoundaryClass::cylinder_slip: return "cylinder_slip";
    case BoundaryClass::plane_slip: return "plane_slip";
    case BoundaryClass::dirichlet: return "dirichlet";
  }
  return "?";
}

GridTopology build_topology(int J, Closure closure, const std::map<int, BoundaryClass>& classes) {
  if (J < 3) throw InvalidArgument("topology: J must be >= 3, got " + std::to_string(J));
  for (const auto& [p, c] : classes) {
    (void)c;
    if (p != 0 && p != 1) throw InvalidArgument("topology: endpoint index must be 0 or 1");
  }
  GridTopology t;
  t.J_ = J;
  t.closure_ = closure;
  if (closure == Closure::closed) {
    if (!classes.empty()) throw InvalidArgument("topology: closed curve cannot carry boundary classes");
    return t;
  }
  for (int p = 0; p < 2; ++p) {
    auto it = classes.find(p);
    if (it == classes.end())
      throw InvalidArgument("topology: endpoint " + std::to_string(p) + " unclassified");
    t.classes_[p] = it->second;
  }
  return t;
}

int GridTopology::endpoint_of(int node) const {
  if (closed()) return -1;
  if (node == 0) return 0;
  if (node == J_) return 1;
  return -1;
}

std::optional<BoundaryClass> GridTopology::boundary(int node) const {
  int p = endpoint_of(node);
  if (p < 0) return std::nullopt;
  return classes_[p];
}

bool GridTopology::component_free(int node, int c) const {
  auto b = boundary(node);
  if (!b) return true;
  switch (*b) {
    case BoundaryClass::axis:
    case BoundaryClass::cylinder_slip: return c == 1;
    case BoundaryClass::plane_slip: return c == 0;
    case BoundaryClass::dirichlet: return false;
  }
  return true;
}

void validate_contact(const GridTopology& topo, const ContactSpec& contact) {
  for (int p = 0; p < 2; ++p) {
    if (contact.rho_hat[p] == 0.0) continue;
    if (!std::isfinite(contact.rho_hat[p]))
      throw InvalidArgument("contact energy at endpoint " + std::to_string(p) + " is not finite");
    if (topo.closed())
      throw InvalidArgument("contact energy given for a closed curve");
    auto c = topo.endpoint_class(p);
    if (c != BoundaryClass::cylinder_slip && c != BoundaryClass::plane_slip)
      throw InvalidArgument("contact energy at endpoint " + std::to_string(p) + " (" + to_string(c) +
                            ") requires a cylinder_slip or plane_slip endpoint");
  }
}

Curve::Curve(GridTopology topology, std::vector<Vec2> positions, double time)
    : topo_(std::move(topology)), x_(std::move(positions)), t_(time) {
  if (topo_.elements() < 3) throw InvalidArgument("curve: topology not initialised");
  if (static_cast<int>(x_.size()) != topo_.nodes())
    throw InvalidArgument("curve: expected " + std::to_string(topo_.nodes()) + " nodes, got " +
                          std::to_string(x_.size()));
  for (int i = 0; i < nodes(); ++i) {
    if (!std::isfinite(x_[i].r) || !std::isfinite(x_[i].z))
      throw InvalidArgument("curve: non-finite position at node " + std::to_string(i));
    if (topo_.is_axis(i) && x_[i].r != 0.0)
      throw InvalidArgument("curve: axis endpoint node " + std::to_string(i) + " has r != 0");
  }
}

Curve Curve::scaled(double c) const {
  std::vector<Vec2> y = x_;
  for (auto& p : y) p *= c;
  return Curve(topo_, std::move(y), t_);
}

Curve Curve::translated(Vec2 d) const {
  std::vector<Vec2> y = x_;
  for (int i = 0; i < nodes(); ++i) {
    y[i] += d;
    if (topo_.is_axis(i)) y[i].r = 0.0;
  }
  return Curve(topo_, std::move(y), t_);
}

namespace {

void element_lengths(const Curve& c, std::vector<double>& len) {
  const auto& topo = c.topology();
  len.resize(topo.elements());
  for (int e = 0; e < topo.elements(); ++e) len[e] = norm(c[topo.right(e)] - c[topo.left(e)]);
}

// Index of the first element below the relative degeneracy threshold, or -1.
int degenerate_element(const std::vector<double>& len) {
  double lmax = *std::max_element(len.begin(), len.end());
  for (size_t e = 0; e < len.size(); ++e)
    if (!(len[e] >= 1e-14 * lmax) || len[e] == 0.0) return static_cast<int>(e);
  return -1;
}

}  // namespace

FrameData compute_frames(const Curve& curve) {
  const auto& topo = curve.topology();
  const int J = topo.elements();
  FrameData f;
  element_lengths(curve, f.length);
  if (int e = degenerate_element(f.length); e >= 0)
    throw DegenerateMesh(e, "degenerate mesh: element " + std::to_string(e) + " has zero length");
  f.tangent.resize(J);
  f.normal.resize(J);
  for (int e = 0; e < J; ++e) {
    Vec2 t = (curve[topo.right(e)] - curve[topo.left(e)]) * (1.0 / f.length[e]);
    f.tangent[e] = t;
    f.normal[e] = -1.0 * perp(t);
  }
  const int n = topo.nodes();
  f.omega.assign(n, Vec2{});
  std::vector<double> w(n, 0.0);
  for (int e = 0; e < J; ++e) {
    Vec2 ln = f.length[e] * f.normal[e];
    f.omega[topo.left(e)] += ln;
    f.omega[topo.right(e)] += ln;
    w[topo.left(e)] += f.length[e];
    w[topo.right(e)] += f.length[e];
  }
  for (int i = 0; i < n; ++i) f.omega[i] *= 1.0 / w[i];
  return f;
}

double element_ratio(const Curve& curve) {
  std::vector<double> len;
  element_lengths(curve, len);
  if (int e = degenerate_element(len); e >= 0)
    throw DegenerateMesh(e, "element_ratio: element " + std::to_string(e) + " has zero length");
  auto [lo, hi] = std::minmax_element(len.begin(), len.end());
  return *hi / *lo;
}

namespace {

void check_sign(const Curve& curve, ValidationReport& rep) {
  const auto& topo = curve.topology();
  for (int i = 0; i < curve.nodes(); ++i) {
    if (topo.is_axis(i)) continue;
    if (curve[i].r < 0.0) {
      rep.off_axis_negative = true;
      rep.negative_nodes.push_back(i);
    }
  }
}

void check_rank(const FrameData& f, ValidationReport& rep) {
  size_t imax = 0;
  for (size_t i = 1; i < f.omega.size(); ++i)
    if (norm(f.omega[i]) > norm(f.omega[imax])) imax = i;
  Vec2 a = f.omega[imax];
  double na = norm(a);
  bool independent = false;
  if (na > 0.0) {
    for (const auto& b : f.omega) {
      double cross = a.r * b.z - a.z * b.r;
      if (std::abs(cross) > 1e-10 * na * norm(b) && norm(b) > 0.0) {
        independent = true;
        break;
      }
    }
  }
  rep.normals_rank_deficient = !independent;
}

}  // namespace

ValidationReport validate_state(const Curve& curve, const FrameData& frames) {
  ValidationReport rep;
  check_sign(curve, rep);
  if (int e = degenerate_element(frames.length); e >= 0) {
    rep.degenerate = true;
    rep.degenerate_element = e;
  }
  check_rank(frames, rep);
  return rep;
}

ValidationReport validate_state(const Curve& curve) {
  try {
    return validate_state(curve, compute_frames(curve));
  } catch (const DegenerateMesh& e) {
    ValidationReport rep;
    check_sign(curve, rep);
    rep.degenerate = true;
    rep.degenerate_element = e.element();
    return rep;
  }
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  const char* sep = "";
  if (off_axis_negative) {
    os << "negative radius at node " << negative_nodes.front();
    sep = "; ";
  }
  if (degenerate) {
    os << sep << "zero-length element " << degenerate_element;
    sep = "; ";
  }
  if (normals_rank_deficient) os << sep << "all lumped normals parallel";
  return os.str();
}

}  // namespace axiflow
