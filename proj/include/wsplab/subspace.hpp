#pragma once

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wsplab/blaschke.hpp"
#include "wsplab/inner_product.hpp"
#include "wsplab/series.hpp"

namespace wsp {

inline constexpr double default_rank_tol = 1e-10;
inline constexpr int default_defect_guard = 8;

// Orthonormal basis (under `ip`) of a subspace of polynomials of degree <=
// ambient_degree. Columns are coefficient vectors.
struct SubspaceBasis {
  Eigen::MatrixXcd columns;
  int ambient_degree = 0;
  std::shared_ptr<const InnerProduct> ip;

  int dimension() const { return static_cast<int>(columns.cols()); }
  std::vector<ComplexSeries> as_series() const;
  // columns in whitened coordinates (orthonormal in the Euclidean sense)
  Eigen::MatrixXcd whitened() const { return ip->whiten(columns); }
};

// span{B^j g_i : deg(B^j g_i) <= n} by modified Gram-Schmidt with one
// reorthogonalization pass, dropping a candidate when its residual is <=
// rank_tol times the largest candidate norm. Throws EmptySpan if nothing
// survives.
SubspaceBasis span_invariant(std::span<const ComplexSeries> generators, const BlaschkeProduct& b,
                             const InnerProductSpec& ip, int n, double rank_tol = default_rank_tol);

// Orthonormalize arbitrary columns under the form of `ip` (same dropping rule).
SubspaceBasis orthonormalize(const Eigen::MatrixXcd& columns, std::shared_ptr<const InnerProduct> ip,
                             double rank_tol = default_rank_tol);

// S intersected with polynomials of degree <= n (kept in the ambient space of S).
SubspaceBasis restrict_degree(const SubspaceBasis& s, int n);

// M (-) B (M restricted to degree <= N - deg B), under M's form.
SubspaceBasis wandering_part(const SubspaceBasis& m, const BlaschkeProduct& b);

// max over unit a in A of dist(a, B) = sine of the largest principal angle,
// in [0, 1]. Both must share the ambient space and form.
double subspace_gap(const SubspaceBasis& a, const SubspaceBasis& b);

struct DefectReport {
  double defect = 0.0;
  // G measured against M in the wide ambient space; ~0 since [W]_B sits inside M
  double reverse_defect = 0.0;
  int dim_m = 0;
  int dim_w = 0;
  int dim_g = 0;
  int n = 0;
  int n_compare = 0;
  int n_wide = 0;
};

// Builds M = span_invariant(generators) at degree N and W = wandering_part(M, B).
// G = [W]_B is regenerated exactly (no orbit element is cut) in the wider
// ambient degree N + deg(B) * ceil(N / deg(B)); the defect is the worst
// distance from a unit vector of M of degree <= n_compare to G.
// Requires n_compare <= n - 2 deg(B) - guard.
DefectReport wsp_defect(std::span<const ComplexSeries> generators, const BlaschkeProduct& b,
                        const InnerProductSpec& ip, int n, int n_compare, int guard = default_defect_guard);

// f(z) = sum_{j<k} z^j f_j(z^k); coefficient n of f_j is coefficient kn+j of f.
std::vector<ComplexSeries> even_odd_split(const ComplexSeries& f, int k);
ComplexSeries even_odd_merge(std::span<const ComplexSeries> parts);

// Same defect as wsp_defect for a z^k-invariant M, with W = M (-) z^{2k} M
// regenerated under z^k, on the usual D_alpha norm.
DefectReport corollary_check(std::span<const ComplexSeries> generators, int k, double alpha, int n, int n_compare,
                             int guard = default_defect_guard);

}  // namespace wsp
