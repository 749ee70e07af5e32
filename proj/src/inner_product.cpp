#include "wsplab/inner_product.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>

#include "wsplab/badic.hpp"
#include "wsplab/errors.hpp"

namespace wsp {

WeightSequence InnerProductSpec::diagonal_weights() const {
  if (const auto* t = std::get_if<TaylorDiagonal>(&kind_)) return t->weights;
  if (const auto* s = std::get_if<Shifted>(&kind_)) {
    return WeightSequence::shifted(WeightSequence::power_law(s->alpha), s->k);
  }
  throw std::logic_error("InnerProductSpec: b-adic form is not diagonal");
}

std::string InnerProductSpec::describe() const {
  if (const auto* t = std::get_if<TaylorDiagonal>(&kind_)) return "taylor(" + t->weights.describe() + ")";
  if (const auto* s = std::get_if<Shifted>(&kind_)) {
    return "shifted(k=" + std::to_string(s->k) + ",alpha=" + format_real(s->alpha) + ")";
  }
  const auto& b = std::get<BAdic>(kind_);
  return "badic(" + b.blaschke.describe() + ",weights=" + b.layer_weights.describe() +
         ",depth=" + std::to_string(b.depth) + ")";
}

namespace {

std::string exact(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

std::string cache_key(const BlaschkeProduct& b, const WeightSequence& w, int depth, int n) {
  std::string key = exact(b.phase());
  for (const cplx& a : b.zeros()) key += "|" + exact(a.real()) + "," + exact(a.imag());
  // weights are identified by their values on the layers that can occur
  key += "#" + std::to_string(depth) + "#" + std::to_string(n) + "#";
  const int layers = depth > 0 ? depth : default_depth(b, n);
  for (int k = 0; k < layers; ++k) key += exact(w(k)) + ";";
  return key;
}

}  // namespace

std::shared_ptr<const Eigen::MatrixXcd> badic_gram(const BlaschkeProduct& b, const WeightSequence& layer_weights,
                                                   int depth, int n) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const Eigen::MatrixXcd>> cache;

  const std::string key = cache_key(b, layer_weights, depth, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  // G = sum_k w(k) C_k^H C_k with column j of C_k the layer-k coordinates of z^j.
  auto gram = std::make_shared<Eigen::MatrixXcd>(Eigen::MatrixXcd::Zero(n + 1, n + 1));
  std::vector<BAdicCoefficients> parts;
  parts.reserve(static_cast<std::size_t>(n + 1));
  int layers = 0;
  for (int j = 0; j <= n; ++j) {
    parts.push_back(b_adic_decompose(ComplexSeries::monomial(j, n), b, depth));
    layers = std::max(layers, parts.back().depth());
  }
  const auto d = static_cast<Eigen::Index>(b.degree());
  for (int k = 0; k < layers; ++k) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d, n + 1);
    for (int j = 0; j <= n; ++j) {
      const auto& part = parts[static_cast<std::size_t>(j)];
      if (k >= part.depth()) continue;
      const auto& coords = part.coordinates[static_cast<std::size_t>(k)];
      for (Eigen::Index l = 0; l < d; ++l) c(l, j) = coords[static_cast<std::size_t>(l)];
    }
    *gram += layer_weights(k) * (c.adjoint() * c);
  }
  // exact Hermitian symmetry for the Cholesky factorization
  *gram = 0.5 * (*gram + gram->adjoint()).eval();

  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(gram)).first->second;
}

InnerProduct::InnerProduct(InnerProductSpec spec, int n) : spec_(std::move(spec)), degree_(n), diagonal_(spec_.is_diagonal()) {
  if (n < 0) throw std::invalid_argument("InnerProduct: negative degree");
  if (diagonal_) {
    const std::vector<double> w = spec_.diagonal_weights().table(n);
    sqrt_diag_.resize(n + 1);
    gram_ = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
      sqrt_diag_(i) = std::sqrt(w[static_cast<std::size_t>(i)]);
      gram_(i, i) = w[static_cast<std::size_t>(i)];
    }
    return;
  }
  const auto& b = std::get<InnerProductSpec::BAdic>(spec_.variant());
  gram_ = *badic_gram(b.blaschke, b.layer_weights, b.depth, n);
  Eigen::LLT<Eigen::MatrixXcd> llt(gram_);
  if (llt.info() != Eigen::Success) throw Error("InnerProduct: b-adic Gram matrix is not positive definite");
  upper_ = llt.matrixU();
}

// Leading blocks of G and of its Cholesky factor are again G and its factor.
InnerProduct::InnerProduct(const InnerProduct& wide, int n)
    : spec_(wide.spec_), degree_(n), diagonal_(wide.diagonal_), gram_(wide.gram_.topLeftCorner(n + 1, n + 1)) {
  if (diagonal_) {
    sqrt_diag_ = wide.sqrt_diag_.head(n + 1);
  } else {
    upper_ = wide.upper_.topLeftCorner(n + 1, n + 1);
  }
}

std::shared_ptr<const InnerProduct> InnerProduct::leading(int n) const {
  if (n < 0 || n > degree_) throw std::invalid_argument("InnerProduct::leading: degree out of range");
  return std::shared_ptr<const InnerProduct>(new InnerProduct(*this, n));
}

std::shared_ptr<const InnerProduct> InnerProduct::materialize(const InnerProductSpec& spec, int n) {
  return std::shared_ptr<const InnerProduct>(new InnerProduct(spec, n));
}

Eigen::MatrixXcd InnerProduct::whiten(const Eigen::MatrixXcd& x) const {
  if (x.rows() > degree_ + 1) throw DimensionMismatch("InnerProduct::whiten: vector degree exceeds the form's degree");
  Eigen::MatrixXcd padded = Eigen::MatrixXcd::Zero(degree_ + 1, x.cols());
  padded.topRows(x.rows()) = x;
  if (diagonal_) return sqrt_diag_.asDiagonal() * padded;
  return upper_.triangularView<Eigen::Upper>() * padded;
}

Eigen::MatrixXcd InnerProduct::unwhiten(const Eigen::MatrixXcd& y) const {
  if (y.rows() != degree_ + 1) throw DimensionMismatch("InnerProduct::unwhiten: row count");
  if (diagonal_) return sqrt_diag_.cwiseInverse().asDiagonal() * y;
  return upper_.triangularView<Eigen::Upper>().solve(y);
}

cplx InnerProduct::dot(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) const {
  const Eigen::MatrixXcd wf = whiten(f);
  const Eigen::MatrixXcd wg = whiten(g);
  return (wg.adjoint() * wf)(0, 0);
}

double InnerProduct::min_eigenvalue() const {
  if (diagonal_) return sqrt_diag_.cwiseAbs2().minCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram_, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

}  // namespace wsp
