#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wsplab/series.hpp"

namespace wsp {

// B(z) = e^{i theta} prod_i (z - a_i) / (1 - conj(a_i) z), zeros repeated per
// multiplicity, every |a_i| <= 1 - 1e-12.
class BlaschkeProduct {
 public:
  static constexpr double max_zero_modulus = 1.0 - 1e-12;

  explicit BlaschkeProduct(std::vector<cplx> zeros, double phase = 0.0);

  // z^k
  static BlaschkeProduct monomial(int k);

  std::span<const cplx> zeros() const { return zeros_; }
  double phase() const { return phase_; }
  cplx unimodular() const { return std::polar(1.0, phase_); }
  int degree() const { return static_cast<int>(zeros_.size()); }

  // Multiplicity of the zero at the origin.
  int order_at_origin() const;

  // True when B = e^{i theta} z^degree.
  bool is_monomial() const { return order_at_origin() == degree(); }

  // Literal accepted by parse_blaschke.
  std::string describe() const;

 private:
  std::vector<cplx> zeros_;
  double phase_;
};

// Throws PoleProximity if some denominator 1 - conj(a_i) z is below 1e-14,
// std::invalid_argument for |z| > 1.
cplx blaschke_eval(const BlaschkeProduct& b, cplx z);

// Taylor coefficients of B at 0 up to degree n.
ComplexSeries blaschke_taylor(const BlaschkeProduct& b, int n);

// B*f truncated at degree n, applied factor by factor in O(n * degree).
ComplexSeries blaschke_multiply(const BlaschkeProduct& b, const ComplexSeries& f, int n);

// H^2 adjoint of multiplication by B (the Toeplitz operator with symbol
// conj(B)). For a polynomial f the result is a polynomial of degree
// <= deg f, computed exactly; equals (f - P_{K_B} f) / B.
ComplexSeries blaschke_adjoint_multiply(const BlaschkeProduct& b, const ComplexSeries& f);

// (n_out+1) x (n_in+1) lower-triangular Toeplitz matrix of f -> B f.
Eigen::MatrixXcd multiplication_matrix(const BlaschkeProduct& b, int n_in, int n_out);

// max_t | |B(e^{it})| - 1 | over equispaced samples.
double boundary_unimodularity_error(const BlaschkeProduct& b, int samples = 256);

// "zeros=0.5,0;0,0.3 phase=0" -> zeros {0.5, 0.3i}. "phase" is optional.
BlaschkeProduct parse_blaschke(std::string_view text);

}  // namespace wsp
