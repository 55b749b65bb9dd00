#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "axiflow/fem.hpp"

namespace test {

// Dense Gaussian elimination with partial pivoting in extended precision.
inline std::vector<double> dense_solve(const axiflow::BlockBandedSystem& a, const std::vector<double>& b) {
  const int n = a.size();
  std::vector<std::vector<long double>> m(n, std::vector<long double>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a.in_band(i, j) ? a.at(i, j) : 0.0;
    m[i][n] = b[i];
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int i = c + 1; i < n; ++i)
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    std::swap(m[c], m[p]);
    for (int i = c + 1; i < n; ++i) {
      const long double f = m[i][c] / m[c][c];
      for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    long double s = m[i][n];
    for (int j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
    x[i] = static_cast<double>(s / m[i][i]);
  }
  return x;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace test
