#include "axiflow/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "axiflow/error.hpp"

namespace axiflow {

using std::numbers::pi;

namespace {

struct ShapeEntry {
  ShapeKind kind;
  const char* name;
  const char* syntax;
  std::vector<double> defaults;
  const char* description;
};

const std::vector<ShapeEntry>& catalogue() {
  static const std::vector<ShapeEntry> entries = {
      {ShapeKind::semicircle, "semicircle", "semicircle", {},
       "unit semicircle, nodes uniform in the stereographic parameter (element ratio ~1.97 at J=64)"},
      {ShapeKind::sphere, "sphere", "sphere[:radius]", {1.0},
       "semicircle of given radius, nodes uniform in arclength"},
      {ShapeKind::perturbed_semicircle, "perturbed_semicircle", "perturbed_semicircle[:amplitude[,radius]]",
       {0.1, 1.0}, "semicircle with angle (q-1/2)pi + a cos((q-1/2)pi)"},
      {ShapeKind::graded_semicircle, "graded_semicircle", "graded_semicircle[:factor]", {1.074},
       "unit semicircle with geometrically growing angular steps"},
      {ShapeKind::capsule, "capsule", "capsule:WxHxW", {1.0, 7.0, 1.0},
       "rounded cylinder of width W and height H, axis to axis"},
      {ShapeKind::disc, "disc", "disc:DxTxD", {9.0, 1.0, 9.0},
       "rounded disc of diameter D and thickness T, axis to axis"},
      {ShapeKind::torus, "torus", "torus:R,r", {1.0, 0.25}, "closed circle of radius r centred at (R,0)"},
      {ShapeKind::stadium_torus, "stadium_torus", "stadium_torus:DRxDZ[,c]", {4.0, 1.0, 4.0},
       "closed stadium with extents DR (radial) and DZ (axial), barycentre (c,0)"},
      {ShapeKind::quarter_circle_droplet, "quarter_circle_droplet", "quarter_circle_droplet[:radius]", {1.0},
       "quarter circle from the axis down to the substrate z=0"},
      {ShapeKind::half_torus_substrate, "half_torus_substrate", "half_torus_substrate[:R,r]", {1.0, 0.5},
       "half circle of radius r centred at (R,0) resting on the substrate z=0"},
      {ShapeKind::dumbbell_cylinder, "dumbbell_cylinder", "dumbbell_cylinder[:alpha,a]", {0.5, 4.0},
       "r = 1 + alpha cos(2 pi q), z = a q between the planes z=0 and z=a"},
  };
  return entries;
}

const ShapeEntry& entry(ShapeKind kind) {
  for (const auto& e : catalogue())
    if (e.kind == kind) return e;
  throw InvalidArgument("unknown shape kind");
}

// Piecewise path of straight lines and circular arcs, sampled uniformly in arclength.
struct Piece {
  bool arc = false;
  Vec2 a, b;         // line
  Vec2 c;            // arc centre
  double rad = 0.0;  // arc radius
  double t0 = 0.0, t1 = 0.0;
  double length() const { return arc ? rad * std::abs(t1 - t0) : norm(b - a); }
  Vec2 at(double s) const {  // s in [0, length]
    const double L = length();
    const double u = L > 0.0 ? s / L : 0.0;
    if (!arc) return a + u * (b - a);
    const double t = t0 + u * (t1 - t0);
    return c + Vec2{rad * std::cos(t), rad * std::sin(t)};
  }
};

Piece line(Vec2 a, Vec2 b) { return Piece{false, a, b, {}, 0.0, 0.0, 0.0}; }
Piece arc(Vec2 c, double rad, double t0, double t1) { return Piece{true, {}, {}, c, rad, t0, t1}; }

std::vector<Vec2> sample_path(const std::vector<Piece>& path, int J, bool closed) {
  std::vector<Piece> pieces;
  for (const auto& p : path)
    if (p.length() > 0.0) pieces.push_back(p);
  double total = 0.0;
  for (const auto& p : pieces) total += p.length();
  const int n = closed ? J : J + 1;
  std::vector<Vec2> x(n);
  size_t k = 0;
  double start = 0.0;
  for (int j = 0; j < n; ++j) {
    const double s = total * j / J;
    while (k + 1 < pieces.size() && s > start + pieces[k].length()) {
      start += pieces[k].length();
      ++k;
    }
    x[j] = pieces[k].at(std::min(s - start, pieces[k].length()));
  }
  if (!closed) x[J] = pieces.back().at(pieces.back().length());
  return x;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidArgument("shape: " + msg);
}

}  // namespace

ShapeSpec parse_shape(const std::string& text, int J) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const ShapeEntry* found = nullptr;
  for (const auto& e : catalogue())
    if (name == e.name) found = &e;
  if (!found) throw InvalidArgument("unknown shape '" + name + "' (see `shapes`)");
  ShapeSpec spec;
  spec.kind = found->kind;
  spec.J = J;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::replace(rest.begin(), rest.end(), 'x', ',');
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        spec.params.push_back(v);
      } catch (const std::exception&) {
        throw InvalidArgument("shape '" + text + "': cannot parse parameter '" + tok + "'");
      }
    }
    if (spec.params.empty()) throw InvalidArgument("shape '" + text + "': missing parameters");
  }
  return spec;
}

Curve generate_initial(const ShapeSpec& spec) {
  const ShapeEntry& info = entry(spec.kind);
  std::vector<double> p = info.defaults;
  if (spec.params.size() > p.size())
    throw InvalidArgument(std::string("shape ") + info.name + ": too many parameters");
  for (size_t i = 0; i < spec.params.size(); ++i) p[i] = spec.params[i];
  for (double v : p) require(std::isfinite(v), "non-finite parameter");
  const int J = spec.J;
  require(J >= 3, "J must be >= 3");

  const auto axis2 = std::map<int, BoundaryClass>{{0, BoundaryClass::axis}, {1, BoundaryClass::axis}};
  std::map<int, BoundaryClass> classes = axis2;
  Closure closure = Closure::open;
  std::vector<Vec2> x(J + 1);

  switch (spec.kind) {
    case ShapeKind::semicircle:
      for (int j = 0; j <= J; ++j) {
        const double phi = 2.0 * std::atan(-1.0 + 2.0 * j / J);
        x[j] = {std::cos(phi), -std::sin(phi)};
      }
      break;
    case ShapeKind::sphere:
      require(p[0] > 0.0, "radius must be positive");
      for (int j = 0; j <= J; ++j) {
        const double phi = pi / 2 - pi * j / J;
        x[j] = {p[0] * std::cos(phi), p[0] * std::sin(phi)};
      }
      break;
    case ShapeKind::perturbed_semicircle: {
      require(p[1] > 0.0, "radius must be positive");
      for (int j = 0; j <= J; ++j) {
        const double q = static_cast<double>(J - j) / J;
        const double th = (q - 0.5) * pi + p[0] * std::cos((q - 0.5) * pi);
        x[j] = {p[1] * std::cos(th), p[1] * std::sin(th)};
      }
      break;
    }
    case ShapeKind::graded_semicircle: {
      require(p[0] > 0.0, "grading factor must be positive");
      double sum = 0.0, w = 1.0;
      for (int k = 0; k < J; ++k, w *= p[0]) sum += w;
      double th = pi / 2;
      w = 1.0;
      x[0] = {0.0, 1.0};
      for (int j = 1; j <= J; ++j, w *= p[0]) {
        th -= pi * w / sum;
        x[j] = {std::cos(th), std::sin(th)};
      }
      break;
    }
    case ShapeKind::capsule: {
      require(p.size() == 3 && p[0] == p[2], "capsule expects WxHxW");
      require(p[0] > 0.0 && p[1] >= p[0], "capsule needs 0 < width <= height");
      const double a = p[0] / 2, hc = p[1] / 2 - a;
      x = sample_path({arc({0.0, hc}, a, pi / 2, 0.0), line({a, hc}, {a, -hc}),
                       arc({0.0, -hc}, a, 0.0, -pi / 2)},
                      J, false);
      break;
    }
    case ShapeKind::disc: {
      require(p.size() == 3 && p[0] == p[2], "disc expects DxTxD");
      require(p[1] > 0.0 && p[0] >= p[1], "disc needs 0 < thickness <= diameter");
      const double a = p[1] / 2, rc = p[0] / 2 - a;
      x = sample_path({line({0.0, a}, {rc, a}), arc({rc, 0.0}, a, pi / 2, -pi / 2), line({rc, -a}, {0.0, -a})},
                      J, false);
      break;
    }
    case ShapeKind::torus: {
      require(p[1] > 0.0 && p[1] < p[0], "torus needs 0 < r < R");
      closure = Closure::closed;
      classes.clear();
      x = sample_path({arc({p[0], 0.0}, p[1], 0.0, -2.0 * pi)}, J, true);
      break;
    }
    case ShapeKind::stadium_torus: {
      const double dr = p[0], dz = p[1], c = p[2];
      require(dr > 0.0 && dz > 0.0 && c - dr / 2 > 0.0, "stadium must lie in r > 0");
      closure = Closure::closed;
      classes.clear();
      if (dr >= dz) {
        const double a = dz / 2, l = c - dr / 2 + a, r = c + dr / 2 - a;
        x = sample_path({line({l, a}, {r, a}), arc({r, 0.0}, a, pi / 2, -pi / 2), line({r, -a}, {l, -a}),
                         arc({l, 0.0}, a, -pi / 2, -3 * pi / 2)},
                        J, true);
      } else {
        const double a = dr / 2, top = dz / 2 - a;
        x = sample_path({arc({c, top}, a, pi, 0.0), line({c + a, top}, {c + a, -top}),
                         arc({c, -top}, a, 0.0, -pi), line({c - a, -top}, {c - a, top})},
                        J, true);
      }
      break;
    }
    case ShapeKind::quarter_circle_droplet:
      require(p[0] > 0.0, "radius must be positive");
      classes = {{0, BoundaryClass::axis}, {1, BoundaryClass::plane_slip}};
      x = sample_path({arc({0.0, 0.0}, p[0], pi / 2, 0.0)}, J, false);
      x[J].z = 0.0;
      break;
    case ShapeKind::half_torus_substrate:
      require(p[1] > 0.0 && p[1] < p[0], "half torus needs 0 < r < R");
      classes = {{0, BoundaryClass::plane_slip}, {1, BoundaryClass::plane_slip}};
      x = sample_path({arc({p[0], 0.0}, p[1], pi, 0.0)}, J, false);
      x[0].z = x[J].z = 0.0;
      break;
    case ShapeKind::dumbbell_cylinder:
      require(std::abs(p[0]) < 1.0 && p[1] > 0.0, "dumbbell needs |alpha| < 1 and a > 0");
      classes = {{0, BoundaryClass::plane_slip}, {1, BoundaryClass::plane_slip}};
      for (int j = 0; j <= J; ++j) {
        const double q = static_cast<double>(J - j) / J;
        x[j] = {1.0 + p[0] * std::cos(2.0 * pi * q), p[1] * q};
      }
      break;
  }

  if (closure == Closure::open) {
    for (int e = 0; e < 2; ++e)
      if (classes[e] == BoundaryClass::axis) x[e == 0 ? 0 : J].r = 0.0;
    if (!spec.outward) {
      std::reverse(x.begin(), x.end());
      std::swap(classes[0], classes[1]);
    }
  } else if (!spec.outward) {
    std::reverse(x.begin() + 1, x.end());
  }
  return Curve(build_topology(J, closure, classes), std::move(x));
}

std::vector<ShapeInfo> list_shapes() {
  std::vector<ShapeInfo> out;
  for (const auto& e : catalogue()) out.push_back({e.name, e.syntax, e.description});
  return out;
}

}  // namespace axiflow
