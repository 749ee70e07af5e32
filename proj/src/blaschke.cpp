#include "wsplab/blaschke.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wsplab/errors.hpp"

namespace wsp {

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, double phase) : zeros_(std::move(zeros)), phase_(phase) {
  if (!std::isfinite(phase_)) throw std::invalid_argument("BlaschkeProduct: phase must be finite");
  for (const cplx& a : zeros_) {
    if (!(std::abs(a) <= max_zero_modulus)) {
      throw std::invalid_argument("BlaschkeProduct: zero " + format_real(a.real()) + "," + format_real(a.imag()) +
                                  " is not strictly inside the unit disc");
    }
  }
}

BlaschkeProduct BlaschkeProduct::monomial(int k) {
  if (k < 0) throw std::invalid_argument("BlaschkeProduct::monomial: negative degree");
  return BlaschkeProduct(std::vector<cplx>(static_cast<std::size_t>(k), cplx{}));
}

int BlaschkeProduct::order_at_origin() const {
  int m = 0;
  for (const cplx& a : zeros_) m += (a == cplx{}) ? 1 : 0;
  return m;
}

std::string BlaschkeProduct::describe() const {
  std::string out = "zeros=";
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    if (i) out += ';';
    out += format_real(zeros_[i].real()) + "," + format_real(zeros_[i].imag());
  }
  out += " phase=" + format_real(phase_);
  return out;
}

cplx blaschke_eval(const BlaschkeProduct& b, cplx z) {
  if (std::abs(z) > 1.0 + 1e-15) throw std::invalid_argument("blaschke_eval: |z| > 1");
  cplx value = b.unimodular();
  for (const cplx& a : b.zeros()) {
    const cplx den = 1.0 - std::conj(a) * z;
    if (std::abs(den) < 1e-14) throw PoleProximity("blaschke_eval: evaluation point too close to a pole");
    value *= (z - a) / den;
  }
  return value;
}

namespace {

// x <- x * (z - a) / (1 - conj(a) z), truncated at x.size() - 1.
void apply_factor(std::vector<cplx>& x, cplx a) {
  const cplx abar = std::conj(a);
  for (std::size_t n = x.size(); n-- > 0;) {
    x[n] = (n > 0 ? x[n - 1] : cplx{}) - a * x[n];
  }
  for (std::size_t n = 1; n < x.size(); ++n) x[n] += abar * x[n - 1];
}

// x <- adjoint of multiplication by the factor, for polynomial x.
void apply_factor_adjoint(std::vector<cplx>& x, cplx a) {
  // adjoint of (z - a): y_n = x_{n+1} - conj(a) x_n
  const cplx abar = std::conj(a);
  for (std::size_t n = 0; n < x.size(); ++n) {
    x[n] = (n + 1 < x.size() ? x[n + 1] : cplx{}) - abar * x[n];
  }
  // adjoint of 1/(1 - conj(a) z): y_n = x_n + a y_{n+1}
  for (std::size_t n = x.size() - 1; n-- > 0;) x[n] += a * x[n + 1];
}

}  // namespace

ComplexSeries blaschke_taylor(const BlaschkeProduct& b, int n) {
  return blaschke_multiply(b, ComplexSeries::monomial(0, n), n);
}

ComplexSeries blaschke_multiply(const BlaschkeProduct& b, const ComplexSeries& f, int n) {
  if (n < 0) throw std::invalid_argument("blaschke_multiply: negative truncation degree");
  const ComplexSeries ft = f.truncated(n);
  std::vector<cplx> x(ft.coeffs().begin(), ft.coeffs().end());
  for (const cplx& a : b.zeros()) apply_factor(x, a);
  const cplx u = b.unimodular();
  for (cplx& v : x) v *= u;
  return ComplexSeries(std::move(x));
}

ComplexSeries blaschke_adjoint_multiply(const BlaschkeProduct& b, const ComplexSeries& f) {
  std::vector<cplx> x(f.coeffs().begin(), f.coeffs().end());
  for (const cplx& a : b.zeros()) apply_factor_adjoint(x, a);
  const cplx u = std::conj(b.unimodular());
  for (cplx& v : x) v *= u;
  return ComplexSeries(std::move(x));
}

Eigen::MatrixXcd multiplication_matrix(const BlaschkeProduct& b, int n_in, int n_out) {
  if (n_in < 0 || n_out < 0) throw std::invalid_argument("multiplication_matrix: negative degree");
  const ComplexSeries taylor = blaschke_taylor(b, n_out);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_out + 1, n_in + 1);
  for (int j = 0; j <= n_in; ++j) {
    for (int i = j; i <= n_out; ++i) m(i, j) = taylor[i - j];
  }
  return m;
}

double boundary_unimodularity_error(const BlaschkeProduct& b, int samples) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = 2.0 * std::numbers::pi * s / samples;
    worst = std::max(worst, std::abs(std::abs(blaschke_eval(b, std::polar(1.0, t))) - 1.0));
  }
  return worst;
}

BlaschkeProduct parse_blaschke(std::string_view text) {
  std::vector<cplx> zeros;
  double phase = 0.0;
  bool saw_zeros = false;
  while (!text.empty()) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    if (text.empty()) break;
    const auto space = text.find(' ');
    const auto token = text.substr(0, space);
    text.remove_prefix(space == std::string_view::npos ? text.size() : space);
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("blaschke literal: expected key=value, got '" + std::string(token) + "'");
    const auto key = token.substr(0, eq);
    const auto value = token.substr(eq + 1);
    if (key == "zeros") {
      saw_zeros = true;
      if (!value.empty()) {
        const ComplexSeries z = parse_series(value);
        zeros.assign(z.coeffs().begin(), z.coeffs().end());
      }
    } else if (key == "phase") {
      std::string buf(value);
      std::size_t used = 0;
      try {
        phase = std::stod(buf, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != buf.size()) throw std::invalid_argument("blaschke literal: bad phase '" + buf + "'");
    } else {
      throw std::invalid_argument("blaschke literal: unknown key '" + std::string(key) + "'");
    }
  }
  if (!saw_zeros) throw std::invalid_argument("blaschke literal: missing zeros=");
  return BlaschkeProduct(std::move(zeros), phase);
}

}  // namespace wsp
