#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wsplab/blaschke.hpp"
#include "wsplab/errors.hpp"
#include "wsplab/model_space.hpp"
#include "wsplab/series.hpp"
#include "wsplab/weights.hpp"

namespace wsp {

// f = sum_k h_k B^k with every h_k in K_B.
struct BAdicCoefficients {
  BlaschkeProduct blaschke;
  std::shared_ptr<const ModelSpaceBasis> basis;
  // h_k at the basis truncation degree
  std::vector<ComplexSeries> layers;
  // h_k in the orthonormal basis: h_k = sum_j coordinates[k][j] e_j
  std::vector<std::vector<cplx>> coordinates;
  int source_degree = 0;
  // H^2 norm of the part of f not captured by the layers
  double residual_norm = 0.0;

  int depth() const { return static_cast<int>(layers.size()); }
  // ||h_k||_{H^2}
  double layer_norm(int k) const;
};

// The remainder after the requested depth is still above tolerance. Carries
// the partial decomposition.
class DepthExhausted : public Error {
 public:
  explicit DepthExhausted(BAdicCoefficients partial);
  const BAdicCoefficients& partial() const { return partial_; }

 private:
  BAdicCoefficients partial_;
};

// Depth sufficient for a degree-n polynomial: ceil((n+1)/deg B) + 2 for
// monomial B. For other B the layers of a polynomial decay only once k times
// the minimum boundary speed of arg B exceeds n, so the bound is scaled
// accordingly; decomposition stops early once the remainder vanishes.
int default_depth(const BlaschkeProduct& b, int n);

// Peels h_j = P_{K_B} r_j, r_{j+1} = (r_j - h_j) / B starting from r_0 = f,
// until `depth` layers or ||r_j|| <= residual_tol. depth <= 0 selects
// default_depth. Throws DepthExhausted if the remainder is still too large.
BAdicCoefficients b_adic_decompose(const ComplexSeries& f, const BlaschkeProduct& b, int depth = 0,
                                   double residual_tol = default_division_tolerances().residual_tol);

// sum_k h_k B^k truncated at degree n.
ComplexSeries b_adic_reconstruct(const BAdicCoefficients& c, int n);

// sqrt(sum_k (k+1)^alpha ||h_k||^2), equivalent to ||.||_alpha for alpha in
// [-1, 1]; computed outside that range too
// but flagged.
struct BNorm {
  double value = 0.0;
  bool supported_regime = true;
};

inline bool alpha_supported(double alpha) { return alpha >= -1.0 && alpha <= 1.0; }

BNorm b_norm(const ComplexSeries& f, const BlaschkeProduct& b, double alpha, int depth = 0);
double b_norm_from(const BAdicCoefficients& c, const WeightSequence& layer_weights);

// sum_k w(k) <h_k(f), h_k(g)>_{H^2}
cplx b_adic_inner_product(const ComplexSeries& f, const ComplexSeries& g, const BlaschkeProduct& b,
                          const WeightSequence& layer_weights, int depth = 0);
cplx b_adic_inner_product(const BAdicCoefficients& f, const BAdicCoefficients& g, const WeightSequence& layer_weights);

struct NormEquivalence {
  double c_min = 0.0;
  double c_max = 0.0;
  int trials = 0;
  bool supported_regime = true;
};

// Range of b_norm(f) / ||f||_alpha over random complex-Gaussian polynomials
// of degree n. Trial t draws from substream(seed, t).
NormEquivalence norm_equivalence_estimate(const BlaschkeProduct& b, double alpha, int n, int trials,
                                          std::uint64_t seed);

}  // namespace wsp
