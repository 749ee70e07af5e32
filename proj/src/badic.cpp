#include "wsplab/badic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wsplab/random.hpp"

namespace wsp {

double BAdicCoefficients::layer_norm(int k) const {
  double s = 0.0;
  for (const cplx& c : coordinates.at(static_cast<std::size_t>(k))) s += std::norm(c);
  return std::sqrt(s);
}

DepthExhausted::DepthExhausted(BAdicCoefficients partial)
    : Error("b_adic_decompose: remainder " + format_real(partial.residual_norm) + " after " +
            std::to_string(partial.depth()) + " layers"),
      partial_(std::move(partial)) {}

namespace {

double l2_norm(const ComplexSeries& f) {
  double s = 0.0;
  for (const cplx& c : f.coeffs()) s += std::norm(c);
  return std::sqrt(s);
}

// Lower bound for min_t d/dt arg B(e^{it}) = sum_i (1 - |a_i|^2) / |e^{it} - a_i|^2.
double min_boundary_speed(const BlaschkeProduct& b) {
  double v = 0.0;
  for (const cplx& a : b.zeros()) v += (1.0 - std::abs(a)) / (1.0 + std::abs(a));
  return v;
}

}  // namespace

int default_depth(const BlaschkeProduct& b, int n) {
  if (b.degree() < 1) throw std::invalid_argument("b-adic: B must have degree >= 1");
  if (b.is_monomial()) return (n + 1 + b.degree() - 1) / b.degree() + 2;
  const double v = min_boundary_speed(b);
  return static_cast<int>(std::ceil(1.5 * (n + 1) / v + 16.0 / v)) + 32;
}

BAdicCoefficients b_adic_decompose(const ComplexSeries& f, const BlaschkeProduct& b, int depth,
                                   double residual_tol) {
  if (b.degree() < 1) throw std::invalid_argument("b_adic_decompose: B must have degree >= 1");
  const int n = f.degree();
  if (depth <= 0) depth = default_depth(b, n);

  BAdicCoefficients out{b, std::make_shared<const ModelSpaceBasis>(tm_basis(b, n + model_space_guard(b))),
                        {}, {}, n, 0.0};
  // r_j stays a polynomial of degree <= n, so the coordinates below are
  // exact: r_{j+1} = T_{conj B} r_j coincides with (r_j - h_j) / B.
  ComplexSeries r = f;
  out.residual_norm = l2_norm(r);
  for (int j = 0; j < depth; ++j) {
    out.coordinates.push_back(model_space_coordinates(r, *out.basis));
    out.layers.push_back(model_space_combine(out.coordinates.back(), *out.basis));
    r = blaschke_adjoint_multiply(b, r);
    out.residual_norm = l2_norm(r);
    if (out.residual_norm <= residual_tol) break;
  }
  if (out.residual_norm > residual_tol) throw DepthExhausted(std::move(out));
  return out;
}

ComplexSeries b_adic_reconstruct(const BAdicCoefficients& c, int n) {
  if (n < 0) throw std::invalid_argument("b_adic_reconstruct: negative degree");
  // Horner in B: h_0 + B (h_1 + B (h_2 + ...))
  ComplexSeries acc = ComplexSeries::zero(n);
  for (int k = c.depth() - 1; k >= 0; --k) {
    acc = series_add(blaschke_multiply(c.blaschke, acc, n), c.layers[static_cast<std::size_t>(k)].truncated(n));
  }
  return acc;
}

double b_norm_from(const BAdicCoefficients& c, const WeightSequence& layer_weights) {
  double s = 0.0;
  for (int k = 0; k < c.depth(); ++k) {
    const double h = c.layer_norm(k);
    s += layer_weights(k) * h * h;
  }
  return std::sqrt(s);
}

BNorm b_norm(const ComplexSeries& f, const BlaschkeProduct& b, double alpha, int depth) {
  const BAdicCoefficients c = b_adic_decompose(f, b, depth);
  return {b_norm_from(c, WeightSequence::power_law(alpha)), alpha_supported(alpha)};
}

cplx b_adic_inner_product(const BAdicCoefficients& f, const BAdicCoefficients& g, const WeightSequence& layer_weights) {
  cplx s{};
  const int layers = std::min(f.depth(), g.depth());
  for (int k = 0; k < layers; ++k) {
    const auto& cf = f.coordinates[static_cast<std::size_t>(k)];
    const auto& cg = g.coordinates[static_cast<std::size_t>(k)];
    cplx layer{};
    for (std::size_t j = 0; j < cf.size(); ++j) layer += cf[j] * std::conj(cg[j]);
    s += layer_weights(k) * layer;
  }
  return s;
}

cplx b_adic_inner_product(const ComplexSeries& f, const ComplexSeries& g, const BlaschkeProduct& b,
                          const WeightSequence& layer_weights, int depth) {
  return b_adic_inner_product(b_adic_decompose(f, b, depth), b_adic_decompose(g, b, depth), layer_weights);
}

NormEquivalence norm_equivalence_estimate(const BlaschkeProduct& b, double alpha, int n, int trials,
                                          std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("norm_equivalence_estimate: trials must be >= 1");
  const WeightSequence w = WeightSequence::power_law(alpha);
  NormEquivalence out{std::numeric_limits<double>::infinity(), 0.0, trials, alpha_supported(alpha)};
  for (int t = 0; t < trials; ++t) {
    auto rng = substream(seed, static_cast<std::uint64_t>(t));
    ComplexSeries f = random_polynomial(rng, n);
    f = series_scale(f, 1.0 / weighted_norm(f, w));
    const double ratio = b_norm(f, b, alpha).value;
    out.c_min = std::min(out.c_min, ratio);
    out.c_max = std::max(out.c_max, ratio);
  }
  return out;
}

}  // namespace wsp
