#pragma once

#include <cmath>
#include <vector>

#include "axiflow/mesh.hpp"
#include "axiflow/shapes.hpp"

namespace test {

inline axiflow::Curve shape(axiflow::ShapeKind kind, int J, std::vector<double> params = {}) {
  axiflow::ShapeSpec s;
  s.kind = kind;
  s.J = J;
  s.params = std::move(params);
  return axiflow::generate_initial(s);
}

inline axiflow::Curve open_curve(std::vector<axiflow::Vec2> x, axiflow::BoundaryClass c0,
                                 axiflow::BoundaryClass c1) {
  const int J = static_cast<int>(x.size()) - 1;
  return axiflow::Curve(axiflow::build_topology(J, axiflow::Closure::open, {{0, c0}, {1, c1}}), std::move(x));
}

inline axiflow::Curve closed_curve(std::vector<axiflow::Vec2> x) {
  const int J = static_cast<int>(x.size());
  return axiflow::Curve(axiflow::build_topology(J, axiflow::Closure::closed), std::move(x));
}

}  // namespace test
