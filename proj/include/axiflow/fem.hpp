#pragma once

#include <array>
#include <string>
#include <vector>

#include "axiflow/mesh.hpp"

namespace axiflow {

using NodalScalarField = std::vector<double>;
using NodalVectorField = std::vector<Vec2>;

enum class Quadrature { lumped, exact };

// Per-element quadrature on the reference element [0,1]; weights sum to one.
struct QuadratureRule {
  int count = 0;
  std::array<double, 2> point{};
  std::array<double, 2> weight{};
};

// Trapezoid rule for lumped products, 2-point Gauss for exact ones.
QuadratureRule quadrature_rule(Quadrature q);

// Field that is linear on each element but may jump at nodes:
// values[e] = {value at the left end of e, value at the right end of e}.
struct ElementField {
  std::vector<std::array<double, 2>> values;

  static ElementField from_nodal(const GridTopology& topo, const NodalScalarField& f);
  static ElementField piecewise_constant(const std::vector<double>& per_element);
  double at(int e, double s) const { return (1.0 - s) * values[e][0] + s * values[e][1]; }
};

// Sum over elements of h * w_e * integral over the reference element of f*g,
// realised by the trapezoid rule (lumped) or exactly for integrands of degree <= 3.
double inner_lumped(const ElementField& f, const ElementField& g, const std::vector<double>& weight);
double inner_exact(const ElementField& f, const ElementField& g, const std::vector<double>& weight);

// Maps (node, component) to an equation index. Components per node are the
// scalar unknowns (kappa, optionally a second scalar) followed by X.e1, X.e2.
// Position components fixed by a boundary class are eliminated (their
// increments are zero). Nodes are laid out in bandwidth-minimising order;
// closed curves use the alternating ordering 0, 1, J-1, 2, J-2, ...
class DofMap {
 public:
  DofMap() = default;
  DofMap(const GridTopology& topo, int scalar_fields);

  int size() const { return size_; }
  int scalar_fields() const { return scalars_; }
  int components() const { return scalars_ + 2; }
  // -1 for an eliminated dof.
  int index(int node, int comp) const { return map_[node * components() + comp]; }
  int scalar(int node, int field = 0) const { return index(node, field); }
  int position(int node, int c) const { return index(node, scalars_ + c); }
  // Lower/upper bandwidth of matrices coupling nodes that share an element.
  int bandwidth() const { return bandwidth_; }
  // Value held by an eliminated dof (always zero: increments vanish on constrained components).
  double fixed_value(int, int) const { return 0.0; }

 private:
  int scalars_ = 0;
  int size_ = 0;
  int bandwidth_ = 0;
  std::vector<int> map_;
};

DofMap build_dof_map(const GridTopology& topo, int scalar_fields = 1);

// Square banded matrix in LAPACK band storage plus right-hand side.
class BlockBandedSystem {
 public:
  BlockBandedSystem() = default;
  BlockBandedSystem(int n, int kl, int ku);

  int size() const { return n_; }
  int kl() const { return kl_; }
  int ku() const { return ku_; }

  void add(int i, int j, double v);
  double at(int i, int j) const;
  bool in_band(int i, int j) const { return j - i <= ku_ && i - j <= kl_; }
  std::vector<double>& rhs() { return b_; }
  const std::vector<double>& rhs() const { return b_; }

  std::vector<double> multiply(const std::vector<double>& x) const;
  double norm_inf() const;
  // Raw storage with 2*kl+ku+1 rows per column; rows [0,kl) are fill-in space.
  const std::vector<double>& band() const { return ab_; }
  int ldab() const { return 2 * kl_ + ku_ + 1; }

 private:
  int n_ = 0, kl_ = 0, ku_ = 0;
  std::vector<double> ab_;
  std::vector<double> b_;
};

// Banded LU with partial pivoting; reusable for several right-hand sides.
class BandedLU {
 public:
  // Throws SingularSystem when a pivot vanishes or the estimated reciprocal
  // condition number falls below working precision.
  explicit BandedLU(const BlockBandedSystem& a, const std::string& context = "");
  // Solves A x = b, refining once when the residual check fails.
  std::vector<double> solve(const std::vector<double>& b) const;
  double rcond() const { return rcond_; }

 private:
  BlockBandedSystem a_;
  std::string context_;
  std::vector<double> lu_;
  std::vector<int> ipiv_;
  double rcond_ = 0.0;
  std::vector<double> raw_solve(const std::vector<double>& b) const;
};

std::vector<double> solve(const BlockBandedSystem& system, const std::string& context = "");

}  // namespace axiflow
