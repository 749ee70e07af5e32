#pragma once

#include <memory>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "wsplab/blaschke.hpp"
#include "wsplab/weights.hpp"

namespace wsp {

// Which Hermitian form to put on polynomial coefficient space.
class InnerProductSpec {
 public:
  struct TaylorDiagonal {
    WeightSequence weights;
  };
  // sum_k w(k) <h_k(f), h_k(g)>_{H^2} over the B-adic layers; depth <= 0
  // picks the default for each decomposition.
  struct BAdic {
    BlaschkeProduct blaschke;
    WeightSequence layer_weights;
    int depth = 0;
  };
  // ||f|| = ||S^k f||_alpha, i.e. diagonal weights (n + k + 1)^alpha.
  struct Shifted {
    int k = 0;
    double alpha = 0.0;
  };

  static InnerProductSpec taylor(WeightSequence w) { return InnerProductSpec(TaylorDiagonal{std::move(w)}); }
  static InnerProductSpec taylor_alpha(double alpha) { return taylor(WeightSequence::power_law(alpha)); }
  static InnerProductSpec badic(BlaschkeProduct b, WeightSequence w, int depth = 0) {
    return InnerProductSpec(BAdic{std::move(b), std::move(w), depth});
  }
  static InnerProductSpec shifted(int k, double alpha) { return InnerProductSpec(Shifted{k, alpha}); }

  const auto& variant() const { return kind_; }
  bool is_diagonal() const { return !std::holds_alternative<BAdic>(kind_); }
  // Diagonal weights; only for taylor/shifted kinds.
  WeightSequence diagonal_weights() const;

  std::string describe() const;

 private:
  using Kind = std::variant<TaylorDiagonal, BAdic, Shifted>;
  explicit InnerProductSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

// An InnerProductSpec materialized on polynomials of degree <= n as a Gram
// matrix g(i, j) = <z^j, z^i>, so <f, g> = g^H G f. Subspace computations
// work in whitened coordinates y = L^H x (G = L L^H) where the form is the
// Euclidean one.
class InnerProduct {
 public:
  static std::shared_ptr<const InnerProduct> materialize(const InnerProductSpec& spec, int n);

  int degree() const { return degree_; }
  const InnerProductSpec& spec() const { return spec_; }
  bool diagonal() const { return diagonal_; }
  const Eigen::MatrixXcd& gram() const { return gram_; }

  // x zero-padded to degree() + 1 rows if shorter.
  Eigen::MatrixXcd whiten(const Eigen::MatrixXcd& x) const;
  Eigen::MatrixXcd unwhiten(const Eigen::MatrixXcd& y) const;

  // The same form on degrees <= n (n <= degree()); shares the factorization.
  std::shared_ptr<const InnerProduct> leading(int n) const;

  cplx dot(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) const;
  double min_eigenvalue() const;

 private:
  InnerProduct(InnerProductSpec spec, int n);
  InnerProduct(const InnerProduct& wide, int n);

  InnerProductSpec spec_;
  int degree_;
  bool diagonal_;
  Eigen::MatrixXcd gram_;
  Eigen::VectorXd sqrt_diag_;   // diagonal case
  Eigen::MatrixXcd upper_;      // L^H, dense case
};

// Dense B-adic Gram on degrees 0..n. Cached per (B, weights, depth, n);
// the cache is shared read-only between threads.
std::shared_ptr<const Eigen::MatrixXcd> badic_gram(const BlaschkeProduct& b, const WeightSequence& layer_weights,
                                                   int depth, int n);

}  // namespace wsp
