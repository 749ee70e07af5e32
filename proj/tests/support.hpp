#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wsplab/series.hpp"

namespace testing {

using wsp::ComplexSeries;
using wsp::cplx;

inline ComplexSeries series(std::vector<cplx> c) { return ComplexSeries(std::move(c)); }

// max |f_n - g_n| over n <= n_max (missing coefficients count as zero)
inline double max_diff(const ComplexSeries& f, const ComplexSeries& g, int n_max = -1) {
  const int top = n_max >= 0 ? n_max : std::max(f.degree(), g.degree());
  double m = 0.0;
  for (int n = 0; n <= top; ++n) m = std::max(m, std::abs(f[n] - g[n]));
  return m;
}

inline double l2(const ComplexSeries& f) {
  double s = 0.0;
  for (const cplx& v : f.coeffs()) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace testing
