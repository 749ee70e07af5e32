#include "wsplab/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsplab/errors.hpp"
#include "wsplab/kernels/kernels.hpp"

namespace wsp {

std::vector<ComplexSeries> SubspaceBasis::as_series() const {
  std::vector<ComplexSeries> out;
  out.reserve(static_cast<std::size_t>(columns.cols()));
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    out.emplace_back(std::vector<cplx>(columns.col(j).data(), columns.col(j).data() + columns.rows()));
  }
  return out;
}

namespace {

// Gram-Schmidt on whitened candidates; returns orthonormal whitened columns.
Eigen::MatrixXcd gram_schmidt(const Eigen::MatrixXcd& candidates, double rank_tol) {
  const auto rows = static_cast<std::size_t>(candidates.rows());
  double largest = 0.0;
  for (Eigen::Index j = 0; j < candidates.cols(); ++j) largest = std::max(largest, candidates.col(j).norm());

  std::vector<Eigen::VectorXcd> kept;
  for (Eigen::Index j = 0; j < candidates.cols(); ++j) {
    Eigen::VectorXcd y = candidates.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const Eigen::VectorXcd& q : kept) {
        const cplx c = kernels::dotc(q.data(), y.data(), rows);
        kernels::axpy(-c, q.data(), y.data(), rows);
      }
    }
    const double r = y.norm();
    if (r <= rank_tol * largest || r == 0.0) continue;
    kept.push_back(y / r);
  }
  Eigen::MatrixXcd q(candidates.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) q.col(static_cast<Eigen::Index>(j)) = kept[j];
  return q;
}

Eigen::VectorXcd to_vector(const ComplexSeries& f, int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n + 1);
  const int top = std::min(n, f.degree());
  for (int i = 0; i <= top; ++i) v(i) = f[i];
  return v;
}

SubspaceBasis from_whitened(const Eigen::MatrixXcd& q, std::shared_ptr<const InnerProduct> ip) {
  SubspaceBasis s;
  s.ambient_degree = ip->degree();
  s.columns = ip->unwhiten(q);
  s.ip = std::move(ip);
  return s;
}

// Orbit span in the ambient space of `ip`, admitting elements up to degree `limit`.
SubspaceBasis orbit_span(std::span<const ComplexSeries> generators, const BlaschkeProduct& b,
                         std::shared_ptr<const InnerProduct> ip, int limit, double rank_tol) {
  const int n = ip->degree();
  const int d = b.degree();
  if (d < 1) throw std::invalid_argument("span_invariant: B must have degree >= 1");

  struct Orbit {
    ComplexSeries current;
    int degree;
  };
  std::vector<Orbit> orbits;
  for (const ComplexSeries& g : generators) {
    const int deg = g.effective_degree();
    if (deg < 0) continue;
    if (deg > limit) continue;
    orbits.push_back({g.truncated(n), deg});
  }
  if (orbits.empty()) throw EmptySpan("span_invariant: all generators vanish");

  // low-degree orbit elements first
  std::vector<Eigen::VectorXcd> candidates;
  for (int j = 0; j * d <= limit; ++j) {
    for (Orbit& o : orbits) {
      if (j * d + o.degree <= limit) candidates.push_back(to_vector(o.current, n));
      o.current = blaschke_multiply(b, o.current, n);
    }
  }
  Eigen::MatrixXcd raw(n + 1, static_cast<Eigen::Index>(candidates.size()));
  for (std::size_t j = 0; j < candidates.size(); ++j) raw.col(static_cast<Eigen::Index>(j)) = candidates[j];
  const Eigen::MatrixXcd q = gram_schmidt(ip->whiten(raw), rank_tol);
  if (q.cols() == 0) throw EmptySpan("span_invariant: generators are numerically zero");
  return from_whitened(q, std::move(ip));
}

}  // namespace

SubspaceBasis span_invariant(std::span<const ComplexSeries> generators, const BlaschkeProduct& b,
                             const InnerProductSpec& ip, int n, double rank_tol) {
  if (n < 0) throw std::invalid_argument("span_invariant: negative degree");
  return orbit_span(generators, b, InnerProduct::materialize(ip, n), n, rank_tol);
}

SubspaceBasis orthonormalize(const Eigen::MatrixXcd& columns, std::shared_ptr<const InnerProduct> ip,
                             double rank_tol) {
  Eigen::MatrixXcd q = gram_schmidt(ip->whiten(columns), rank_tol);
  return from_whitened(q, std::move(ip));
}

SubspaceBasis restrict_degree(const SubspaceBasis& s, int n) {
  const int top = s.ambient_degree;
  if (n >= top || s.dimension() == 0) return s;
  if (n < 0) {
    return SubspaceBasis{Eigen::MatrixXcd(top + 1, 0), top, s.ip};
  }
  const Eigen::MatrixXcd high = s.columns.bottomRows(top - n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(high, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  double scale = 0.0;
  for (Eigen::Index j = 0; j < s.columns.cols(); ++j) scale = std::max(scale, s.columns.col(j).norm());
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > 1e-9 * scale) ++rank;
  const Eigen::Index nullity = s.columns.cols() - rank;
  if (nullity == 0) return SubspaceBasis{Eigen::MatrixXcd(top + 1, 0), top, s.ip};
  Eigen::MatrixXcd low = s.columns * svd.matrixV().rightCols(nullity);
  low.bottomRows(top - n).setZero();
  return orthonormalize(low, s.ip);
}

SubspaceBasis wandering_part(const SubspaceBasis& m, const BlaschkeProduct& b) {
  const int n = m.ambient_degree;
  const int d = b.degree();
  if (n < d) throw std::invalid_argument("wandering_part: ambient degree below deg(B)");

  const SubspaceBasis low = restrict_degree(m, n - d);
  if (low.dimension() == 0) return m;
  Eigen::MatrixXcd shifted(n + 1, low.dimension());
  for (int j = 0; j < low.dimension(); ++j) {
    const ComplexSeries col(std::vector<cplx>(low.columns.col(j).data(), low.columns.col(j).data() + n + 1));
    shifted.col(j) = to_vector(blaschke_multiply(b, col, n), n);
  }
  const SubspaceBasis bm = orthonormalize(shifted, m.ip);

  // v = Q_M c with Q_BM^H v = 0; the dim(BM) largest principal cosines belong to B M.
  const Eigen::MatrixXcd qm = m.whitened();
  const Eigen::MatrixXcd cross = bm.whitened().adjoint() * qm;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(cross, Eigen::ComputeFullV);
  const Eigen::Index keep = qm.cols() - std::min<Eigen::Index>(bm.dimension(), qm.cols());
  if (keep == 0) return SubspaceBasis{Eigen::MatrixXcd(n + 1, 0), n, m.ip};
  const Eigen::MatrixXcd w = qm * svd.matrixV().rightCols(keep);
  return from_whitened(gram_schmidt(w, default_rank_tol), m.ip);
}

double subspace_gap(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_degree != b.ambient_degree) throw DimensionMismatch("subspace_gap: ambient degrees differ");
  if (a.dimension() == 0) return 0.0;
  if (b.dimension() == 0) return 1.0;
  const Eigen::MatrixXcd qa = a.whitened();
  const Eigen::MatrixXcd qb = b.whitened();
  const Eigen::MatrixXcd residual = qa - qb * (qb.adjoint() * qa);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residual);
  return std::clamp(svd.singularValues()(0), 0.0, 1.0);
}

namespace {

DefectReport defect_from(std::span<const ComplexSeries> generators, const BlaschkeProduct& generate_with,
                         const BlaschkeProduct& peel_with, const InnerProductSpec& spec, int n, int n_compare) {
  const int d = generate_with.degree();
  const int wide = n + d * ((n + d - 1) / d);
  const auto ip_wide = InnerProduct::materialize(spec, wide);
  const auto ip = ip_wide->leading(n);

  const SubspaceBasis m = orbit_span(generators, generate_with, ip, n, default_rank_tol);
  const SubspaceBasis w = wandering_part(m, peel_with);
  const std::vector<ComplexSeries> w_series = w.as_series();
  const SubspaceBasis g = orbit_span(w_series, generate_with, ip_wide, wide, default_rank_tol);
  const SubspaceBasis m_low = orbit_span(generators, generate_with, ip_wide, n_compare, default_rank_tol);
  const SubspaceBasis m_wide = orbit_span(generators, generate_with, ip_wide, wide, default_rank_tol);

  DefectReport r;
  r.defect = subspace_gap(m_low, g);
  r.reverse_defect = subspace_gap(g, m_wide);
  r.dim_m = m.dimension();
  r.dim_w = w.dimension();
  r.dim_g = g.dimension();
  r.n = n;
  r.n_compare = n_compare;
  r.n_wide = wide;
  return r;
}

void check_compare_degree(int n, int n_compare, int d, int guard) {
  if (n_compare < 0 || n_compare > n - 2 * d - guard) {
    throw std::invalid_argument("N_compare must satisfy 0 <= N_compare <= N - 2 deg(B) - " + std::to_string(guard));
  }
}

}  // namespace

DefectReport wsp_defect(std::span<const ComplexSeries> generators, const BlaschkeProduct& b,
                        const InnerProductSpec& ip, int n, int n_compare, int guard) {
  check_compare_degree(n, n_compare, b.degree(), guard);
  return defect_from(generators, b, b, ip, n, n_compare);
}

std::vector<ComplexSeries> even_odd_split(const ComplexSeries& f, int k) {
  if (k < 1) throw std::invalid_argument("even_odd_split: k must be >= 1");
  std::vector<ComplexSeries> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    const int deg = f.degree() >= j ? (f.degree() - j) / k : 0;
    std::vector<cplx> c(static_cast<std::size_t>(deg + 1));
    for (int i = 0; i <= deg; ++i) c[static_cast<std::size_t>(i)] = f[k * i + j];
    parts.emplace_back(std::move(c));
  }
  return parts;
}

ComplexSeries even_odd_merge(std::span<const ComplexSeries> parts) {
  const int k = static_cast<int>(parts.size());
  if (k < 1) throw std::invalid_argument("even_odd_merge: no parts");
  int deg = 0;
  for (int j = 0; j < k; ++j) deg = std::max(deg, k * parts[static_cast<std::size_t>(j)].degree() + j);
  std::vector<cplx> c(static_cast<std::size_t>(deg + 1));
  for (int j = 0; j < k; ++j) {
    const ComplexSeries& p = parts[static_cast<std::size_t>(j)];
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(k * i + j)] = p[i];
  }
  return ComplexSeries(std::move(c));
}

DefectReport corollary_check(std::span<const ComplexSeries> generators, int k, double alpha, int n, int n_compare,
                             int guard) {
  if (k < 1) throw std::invalid_argument("corollary_check: k must be >= 1");
  if (alpha < -1.0 || alpha > 0.0) throw std::invalid_argument("corollary_check: alpha must lie in [-1, 0]");
  check_compare_degree(n, n_compare, 2 * k, guard);
  return defect_from(generators, BlaschkeProduct::monomial(k), BlaschkeProduct::monomial(2 * k),
                     InnerProductSpec::taylor_alpha(alpha), n, n_compare);
}

}  // namespace wsp
