#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsplab/weights.hpp"

namespace wsp {

using cplx = std::complex<double>;

// Truncated Taylor series sum_{n<=N} a_n z^n. Dense, immutable, all
// coefficients finite; coeffs().size() == degree() + 1 always.
class ComplexSeries {
 public:
  ComplexSeries();
  explicit ComplexSeries(std::vector<cplx> coeffs);

  static ComplexSeries zero(int degree);
  static ComplexSeries monomial(int power, int degree, cplx value = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }

  // Coefficient of z^n; zero past the truncation degree.
  cplx operator[](int n) const {
    return (n >= 0 && n <= degree()) ? coeffs_[static_cast<std::size_t>(n)] : cplx{};
  }

  // Zero-padded or cut to truncation degree n.
  ComplexSeries truncated(int n) const;

  // Largest index with |a_n| > tol, or -1 for the zero series.
  int effective_degree(double tol = 0.0) const;

  double max_abs() const;

 private:
  std::vector<cplx> coeffs_;
};

struct DivisionTolerances {
  double order_tol = 1e-12;
  double residual_tol = 1e-9;
};

// Process-wide defaults for series_div. Not synchronized: set them before
// starting concurrent work.
DivisionTolerances& default_division_tolerances();

// Coefficientwise sum, truncated at the larger of the two degrees.
ComplexSeries series_add(const ComplexSeries& f, const ComplexSeries& g);
ComplexSeries series_sub(const ComplexSeries& f, const ComplexSeries& g);
ComplexSeries series_scale(const ComplexSeries& f, cplx c);

// Cauchy product truncated at degree n; terms above n are dropped.
ComplexSeries series_mul(const ComplexSeries& f, const ComplexSeries& g, int n);

// prod (z - zeta_i), monic, degree = zeros.size()
ComplexSeries polynomial_from_zeros(std::span<const cplx> zeros);

// q with f = q*g, truncated at degree n. Shifts out the order of vanishing m
// of g at 0, then deconvolves against a series with nonzero constant term.
// Throws DegenerateDivisor when g ~ 0 and DivisionOrderMismatch when f does
// not vanish to order m.
ComplexSeries series_div(const ComplexSeries& f, const ComplexSeries& g, int n,
                         const DivisionTolerances& tol = default_division_tolerances());

// sum_n a_n conj(b_n) w(n) over the shared index range.
cplx weighted_inner_product(const ComplexSeries& f, const ComplexSeries& g, const WeightSequence& w);
double weighted_norm(const ComplexSeries& f, const WeightSequence& w);

// Literal "re,im;re,im;..." in degree order, e.g. "1,0;0,0;0.5,0" = 1 + 0.5 z^2.
ComplexSeries parse_series(std::string_view text);
std::string format_series(const ComplexSeries& f, int max_degree = -1);

// printf("%.12g")
std::string format_real(double x);

}  // namespace wsp
