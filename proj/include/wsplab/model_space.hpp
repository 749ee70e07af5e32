#pragma once

#include <vector>

#include "wsplab/blaschke.hpp"
#include "wsplab/series.hpp"

namespace wsp {

// Orthonormal (in H^2) basis of K_B = H^2 (-) B H^2 built from the zero list
// in order:
//
//   e_j(z) = sqrt(1 - |a_j|^2) / (1 - conj(a_j) z) * prod_{i<j} (z - a_i) / (1 - conj(a_i) z)
//
// Each e_j is rational with a geometric tail ~ max|a_i|^n, so truncation
// matters: at degree >= 4 * deg(B) + 32 the Gram error stays below 1e-8
// while every |a_i| <= 0.8. Zeros closer to the circle need more degree.
struct ModelSpaceBasis {
  BlaschkeProduct blaschke;
  std::vector<ComplexSeries> basis;
  int truncation_degree = 0;

  int dimension() const { return static_cast<int>(basis.size()); }
};

// Extra degrees carried on top of a requested degree for K_B work.
inline int model_space_guard(const BlaschkeProduct& b) { return 4 * b.degree() + 32; }

ModelSpaceBasis tm_basis(const BlaschkeProduct& b, int n);

// <f, e_j>_{H^2} for every basis element; f is zero-padded or cut to the
// basis truncation degree.
std::vector<cplx> model_space_coordinates(const ComplexSeries& f, const ModelSpaceBasis& basis);

// sum_j coords[j] e_j at the basis truncation degree.
ComplexSeries model_space_combine(std::span<const cplx> coords, const ModelSpaceBasis& basis);

// Orthogonal H^2 projection onto K_B.
ComplexSeries project_KB(const ComplexSeries& f, const ModelSpaceBasis& basis);

}  // namespace wsp
