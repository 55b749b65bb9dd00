#include "axiflow/fem.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "axiflow/error.hpp"

namespace axiflow {

QuadratureRule quadrature_rule(Quadrature q) {
  QuadratureRule r;
  r.count = 2;
  r.weight = {0.5, 0.5};
  if (q == Quadrature::lumped) {
    r.point = {0.0, 1.0};
  } else {
    const double d = 0.5 / std::sqrt(3.0);
    r.point = {0.5 - d, 0.5 + d};
  }
  return r;
}

ElementField ElementField::from_nodal(const GridTopology& topo, const NodalScalarField& f) {
  ElementField out;
  out.values.resize(topo.elements());
  for (int e = 0; e < topo.elements(); ++e) out.values[e] = {f[topo.left(e)], f[topo.right(e)]};
  return out;
}

ElementField ElementField::piecewise_constant(const std::vector<double>& per_element) {
  ElementField out;
  out.values.reserve(per_element.size());
  for (double v : per_element) out.values.push_back({v, v});
  return out;
}

namespace {

double inner(const ElementField& f, const ElementField& g, const std::vector<double>& w,
             Quadrature q) {
  if (f.values.size() != g.values.size() || f.values.size() != w.size())
    throw InvalidArgument("inner product: field sizes differ");
  const auto rule = quadrature_rule(q);
  const double h = 1.0 / static_cast<double>(w.size());
  double sum = 0.0;
  for (size_t e = 0; e < w.size(); ++e) {
    double s = 0.0;
    for (int k = 0; k < rule.count; ++k)
      s += rule.weight[k] * f.at(e, rule.point[k]) * g.at(e, rule.point[k]);
    sum += h * w[e] * s;
  }
  return sum;
}

}  // namespace

double inner_lumped(const ElementField& f, const ElementField& g, const std::vector<double>& w) {
  return inner(f, g, w, Quadrature::lumped);
}

double inner_exact(const ElementField& f, const ElementField& g, const std::vector<double>& w) {
  return inner(f, g, w, Quadrature::exact);
}

DofMap::DofMap(const GridTopology& topo, int scalar_fields) : scalars_(scalar_fields) {
  if (scalar_fields < 1 || scalar_fields > 2)
    throw InvalidArgument("dof map: one or two scalar fields supported");
  const int n = topo.nodes();
  std::vector<int> order;
  order.reserve(n);
  if (topo.closed()) {
    order.push_back(0);
    for (int k = 1; static_cast<int>(order.size()) < n; ++k) {
      order.push_back(k);
      if (static_cast<int>(order.size()) < n) order.push_back(n - k);
    }
  } else {
    for (int i = 0; i < n; ++i) order.push_back(i);
  }
  const int nc = components();
  map_.assign(n * nc, -1);
  int next = 0;
  for (int node : order) {
    for (int c = 0; c < nc; ++c) {
      bool free = c < scalars_ || topo.component_free(node, c - scalars_);
      if (free) map_[node * nc + c] = next++;
    }
  }
  size_ = next;
  for (int e = 0; e < topo.elements(); ++e) {
    int lo = size_, hi = -1;
    for (int node : {topo.left(e), topo.right(e)})
      for (int c = 0; c < nc; ++c)
        if (int i = index(node, c); i >= 0) {
          lo = std::min(lo, i);
          hi = std::max(hi, i);
        }
    if (hi >= 0) bandwidth_ = std::max(bandwidth_, hi - lo);
  }
}

DofMap build_dof_map(const GridTopology& topo, int scalar_fields) {
  return DofMap(topo, scalar_fields);
}

BlockBandedSystem::BlockBandedSystem(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ab_(static_cast<size_t>(2 * kl + ku + 1) * n, 0.0), b_(n, 0.0) {
  if (n < 1 || kl < 0 || ku < 0) throw InvalidArgument("banded system: bad dimensions");
}

void BlockBandedSystem::add(int i, int j, double v) {
  if (!in_band(i, j))
    throw std::logic_error("banded system: entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") outside band");
  ab_[static_cast<size_t>(j) * ldab() + kl_ + ku_ + i - j] += v;
}

double BlockBandedSystem::at(int i, int j) const {
  if (!in_band(i, j)) return 0.0;
  return ab_[static_cast<size_t>(j) * ldab() + kl_ + ku_ + i - j];
}

std::vector<double> BlockBandedSystem::multiply(const std::vector<double>& x) const {
  std::vector<double> y(n_, 0.0);
  for (int j = 0; j < n_; ++j) {
    const double xj = x[j];
    if (xj == 0.0) continue;
    const int i0 = std::max(0, j - ku_), i1 = std::min(n_ - 1, j + kl_);
    const double* col = &ab_[static_cast<size_t>(j) * ldab() + kl_ + ku_ - j];
    for (int i = i0; i <= i1; ++i) y[i] += col[i] * xj;
  }
  return y;
}

double BlockBandedSystem::norm_inf() const {
  std::vector<double> rows(n_, 0.0);
  for (int j = 0; j < n_; ++j)
    for (int i = std::max(0, j - ku_); i <= std::min(n_ - 1, j + kl_); ++i)
      rows[i] += std::abs(at(i, j));
  return n_ ? *std::max_element(rows.begin(), rows.end()) : 0.0;
}

namespace {

double norm_inf(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::string with_context(const std::string& ctx, const std::string& msg) {
  return ctx.empty() ? msg : ctx + ": " + msg;
}

}  // namespace

BandedLU::BandedLU(const BlockBandedSystem& a, const std::string& context)
    : a_(a), context_(context), lu_(a.band()), ipiv_(a.size()) {
  const int n = a.size(), kl = a.kl(), ku = a.ku(), ldab = a.ldab();
  double anorm = 0.0;
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = std::max(0, j - ku); i <= std::min(n - 1, j + kl); ++i) s += std::abs(a.at(i, j));
    anorm = std::max(anorm, s);
  }
  for (double v : a.band())
    if (!std::isfinite(v)) throw SingularSystem(with_context(context, "non-finite matrix entry"));
  lapack_int info =
      LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kl, ku, lu_.data(), ldab, ipiv_.data());
  if (info > 0)
    throw SingularSystem(with_context(context, "system singular (zero pivot at row " +
                                                   std::to_string(info - 1) + ")"));
  if (info < 0) throw std::logic_error("dgbtrf: invalid argument");
  info = LAPACKE_dgbcon(LAPACK_COL_MAJOR, '1', n, kl, ku, lu_.data(), ldab, ipiv_.data(), anorm,
                        &rcond_);
  if (info != 0) throw std::logic_error("dgbcon failed");
  if (!(rcond_ > n * std::numeric_limits<double>::epsilon()))
    throw SingularSystem(with_context(
        context, "system singular to working precision (rcond " + std::to_string(rcond_) + ")"));
}

std::vector<double> BandedLU::raw_solve(const std::vector<double>& b) const {
  std::vector<double> x = b;
  const int n = a_.size();
  lapack_int info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n, a_.kl(), a_.ku(), 1, lu_.data(),
                                   a_.ldab(), ipiv_.data(), x.data(), n);
  if (info != 0) throw std::logic_error("dgbtrs failed");
  return x;
}

std::vector<double> BandedLU::solve(const std::vector<double>& b) const {
  if (static_cast<int>(b.size()) != a_.size()) throw InvalidArgument("solve: rhs size mismatch");
  std::vector<double> x = raw_solve(b);
  const double anorm = a_.norm_inf();
  auto residual = [&](const std::vector<double>& y) {
    std::vector<double> r = a_.multiply(y);
    for (size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    return r;
  };
  auto acceptable = [&](const std::vector<double>& r, const std::vector<double>& y) {
    return norm_inf(r) <= 1e-10 * (anorm * norm_inf(y) + norm_inf(b));
  };
  std::vector<double> r = residual(x);
  if (acceptable(r, x)) return x;
  std::vector<double> dx = raw_solve(r);
  for (size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
  r = residual(x);
  if (!acceptable(r, x) || !std::isfinite(norm_inf(x)))
    throw SingularSystem(with_context(context_, "residual check failed after refinement"));
  return x;
}

std::vector<double> solve(const BlockBandedSystem& system, const std::string& context) {
  return BandedLU(system, context).solve(system.rhs());
}

}  // namespace axiflow
