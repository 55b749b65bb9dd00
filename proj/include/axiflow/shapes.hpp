#pragma once

#include <string>
#include <vector>

#include "axiflow/mesh.hpp"

namespace axiflow {

enum class ShapeKind {
  semicircle,              // unit semicircle, uniform in the stereographic parameter
  sphere,                  // semicircle of radius r, uniform in arclength
  perturbed_semicircle,    // nonuniform semicircle used for the convergence test
  graded_semicircle,       // geometric angular grading
  capsule,                 // rounded cylinder width x height x width
  disc,                    // rounded disc diameter x thickness x diameter
  torus,                   // circular generator (R, r), closed
  stadium_torus,           // closed stadium of extents (dr, dz) centred at (c, 0)
  quarter_circle_droplet,  // axis to substrate
  half_torus_substrate,    // substrate to substrate
  dumbbell_cylinder,       // between two planes
};

struct ShapeSpec {
  ShapeKind kind = ShapeKind::semicircle;
  std::vector<double> params;  // kind-specific; empty selects defaults
  int J = 64;
  bool outward = true;  // false reverses the node order
};

// Parses "name" or "name:p1xp2x..." (separators 'x' or ',').
ShapeSpec parse_shape(const std::string& text, int J);

Curve generate_initial(const ShapeSpec& spec);

struct ShapeInfo {
  std::string name;
  std::string syntax;
  std::string description;
};

std::vector<ShapeInfo> list_shapes();

}  // namespace axiflow
