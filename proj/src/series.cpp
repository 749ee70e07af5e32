#include "wsplab/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "wsplab/errors.hpp"
#include "wsplab/kernels/kernels.hpp"

namespace wsp {

ComplexSeries::ComplexSeries() : coeffs_(1, cplx{}) {}

ComplexSeries::ComplexSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("ComplexSeries: needs at least one coefficient");
  for (const cplx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("ComplexSeries: non-finite coefficient");
    }
  }
}

ComplexSeries ComplexSeries::zero(int degree) {
  if (degree < 0) throw std::invalid_argument("ComplexSeries: negative degree");
  return ComplexSeries(std::vector<cplx>(static_cast<std::size_t>(degree + 1)));
}

ComplexSeries ComplexSeries::monomial(int power, int degree, cplx value) {
  if (power < 0) throw std::invalid_argument("ComplexSeries: negative power");
  std::vector<cplx> c(static_cast<std::size_t>(degree + 1));
  if (power <= degree) c[static_cast<std::size_t>(power)] = value;
  return ComplexSeries(std::move(c));
}

ComplexSeries ComplexSeries::truncated(int n) const {
  if (n < 0) throw std::invalid_argument("ComplexSeries: negative degree");
  std::vector<cplx> c(static_cast<std::size_t>(n + 1));
  const auto keep = std::min(c.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), keep, c.begin());
  return ComplexSeries(std::move(c));
}

int ComplexSeries::effective_degree(double tol) const {
  for (int n = degree(); n >= 0; --n) {
    if (std::abs(coeffs_[static_cast<std::size_t>(n)]) > tol) return n;
  }
  return -1;
}

double ComplexSeries::max_abs() const {
  double m = 0.0;
  for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

DivisionTolerances& default_division_tolerances() {
  static DivisionTolerances tol;
  return tol;
}

ComplexSeries series_add(const ComplexSeries& f, const ComplexSeries& g) {
  const int n = std::max(f.degree(), g.degree());
  std::vector<cplx> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = f[i] + g[i];
  return ComplexSeries(std::move(c));
}

ComplexSeries series_sub(const ComplexSeries& f, const ComplexSeries& g) {
  return series_add(f, series_scale(g, -1.0));
}

ComplexSeries series_scale(const ComplexSeries& f, cplx s) {
  std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
  for (cplx& v : c) v *= s;
  return ComplexSeries(std::move(c));
}

ComplexSeries series_mul(const ComplexSeries& f, const ComplexSeries& g, int n) {
  if (n < 0) throw std::invalid_argument("series_mul: negative truncation degree");
  // c_k = sum_i f_i g_{k-i}; reversing g turns each term into a contiguous dot.
  const int df = std::min(f.degree(), n);
  const int dg = std::min(g.degree(), n);
  std::vector<cplx> grev(static_cast<std::size_t>(dg + 1));
  for (int i = 0; i <= dg; ++i) grev[static_cast<std::size_t>(dg - i)] = g[i];
  const cplx* fp = f.coeffs().data();
  std::vector<cplx> c(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    const int lo = std::max(0, k - dg);
    const int hi = std::min(k, df);
    if (lo > hi) continue;
    // g index k-i for i in [lo, hi] sits at grev[dg - k + i]
    c[static_cast<std::size_t>(k)] =
        kernels::dotu(fp + lo, grev.data() + (dg - k + lo), static_cast<std::size_t>(hi - lo + 1));
  }
  return ComplexSeries(std::move(c));
}

ComplexSeries polynomial_from_zeros(std::span<const cplx> zeros) {
  std::vector<cplx> c{1.0};
  for (const cplx& zeta : zeros) {
    c.push_back(0.0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - zeta * c[i];
    c[0] *= -zeta;
  }
  return ComplexSeries(std::move(c));
}

ComplexSeries series_div(const ComplexSeries& f, const ComplexSeries& g, int n, const DivisionTolerances& tol) {
  if (n < 0) throw std::invalid_argument("series_div: negative truncation degree");
  int m = 0;
  while (m <= g.degree() && std::abs(g[m]) <= tol.order_tol) ++m;
  if (m > g.degree()) throw DegenerateDivisor("series_div: divisor vanishes to working precision");
  for (int i = 0; i < m; ++i) {
    if (std::abs(f[i]) > tol.residual_tol) {
      throw DivisionOrderMismatch("series_div: dividend does not vanish to order " + std::to_string(m) +
                                  " (|a_" + std::to_string(i) + "| = " + format_real(std::abs(f[i])) + ")");
    }
  }
  // q_k = (f_{k+m} - sum_{i=1..k} g_{i+m} q_{k-i}) / g_m
  const int dg = std::min(g.degree() - m, n);
  std::vector<cplx> grev(static_cast<std::size_t>(dg + 1));
  for (int i = 0; i <= dg; ++i) grev[static_cast<std::size_t>(dg - i)] = g[i + m];
  const cplx lead = g[m];
  std::vector<cplx> q(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    cplx acc = f[k + m];
    const int lo = std::max(0, k - dg);
    const int hi = k - 1;
    if (lo <= hi) {
      // sum_{j=lo..hi} q_j g_{k-j+m}
      acc -= kernels::dotu(q.data() + lo, grev.data() + (dg - k + lo), static_cast<std::size_t>(hi - lo + 1));
    }
    q[static_cast<std::size_t>(k)] = acc / lead;
  }
  return ComplexSeries(std::move(q));
}

cplx weighted_inner_product(const ComplexSeries& f, const ComplexSeries& g, const WeightSequence& w) {
  const int n = std::min(f.degree(), g.degree());
  const std::vector<double> wt = w.table(n);
  return kernels::weighted_dot(f.coeffs().data(), g.coeffs().data(), wt.data(), static_cast<std::size_t>(n + 1));
}

double weighted_norm(const ComplexSeries& f, const WeightSequence& w) {
  const std::vector<double> wt = w.table(f.degree());
  return std::sqrt(kernels::weighted_norm2(f.coeffs().data(), wt.data(), wt.size()));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s) {
  std::string buf(trim(s));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(buf, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("series literal: bad number '" + buf + "'");
  }
  if (used != buf.size()) throw std::invalid_argument("series literal: bad number '" + buf + "'");
  return v;
}

}  // namespace

ComplexSeries parse_series(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("series literal: empty");
  std::vector<cplx> c;
  while (true) {
    const auto semi = text.find(';');
    const auto item = trim(text.substr(0, semi));
    const auto comma = item.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("series literal: expected 're,im' but got '" + std::string(item) + "'");
    }
    c.emplace_back(parse_number(item.substr(0, comma)), parse_number(item.substr(comma + 1)));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return ComplexSeries(std::move(c));
}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_series(const ComplexSeries& f, int max_degree) {
  const int n = max_degree < 0 ? f.degree() : max_degree;
  std::string out;
  for (int i = 0; i <= n; ++i) {
    if (i) out += ';';
    out += format_real(f[i].real());
    out += ',';
    out += format_real(f[i].imag());
  }
  return out;
}

}  // namespace wsp
