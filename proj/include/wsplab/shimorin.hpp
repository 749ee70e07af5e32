#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wsplab/blaschke.hpp"
#include "wsplab/weights.hpp"

namespace wsp {

struct Violation {
  std::string condition;  // "a", "b" or "concavity"
  long index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

// Finite scans cannot cover every index. For power-law tails the certificate
// records whether the slack function behaves monotonically on the scanned
// range (a numerical observation, not a proof); `analytic` is set when the
// tail exponent lies in the range where the monotonicity is a known fact.
struct TailCertificate {
  bool applies = false;
  bool analytic = false;
  std::string note;
};

struct CriterionReport {
  bool holds = false;
  std::vector<Violation> violations;
  long scan_begin = 0;
  long scan_end = 0;
  std::optional<TailCertificate> tail;

  // -1 when there are none
  long first_violation_index() const;
};

inline constexpr long default_scan_limit = 100000;
inline constexpr double weight_relative_tolerance = 1e-12;

// Shimorin's inequality ||x + Ty||^2 <= 2(||Tx||^2 + ||y||^2) for T = z^k on
// the diagonal norm with weights w, restricted to indices >= s0:
//   (a) w(s) <= 2 w(s+k)                          s = s0 .. s0+k-1
//   (b) 1/w(s) + 1/w(s+2k) <= 2/w(s+k)            s = s0 .. n_max
CriterionReport shimorin_weight_criterion(const WeightSequence& w, int k, long s0, long n_max = default_scan_limit);

// w(n+2k) - 2 w(n+k) + w(n) <= 0 for n = 0 .. n_max (concavity of z^k).
CriterionReport concavity_criterion(const WeightSequence& w, int k, long n_max = default_scan_limit);

// log 2 / log(k+1): |alpha| up to this keeps the usual norm for z^k.
double alpha_threshold_monomial(int k);

// log(2/3) / log(5/3) ~ -0.7937: lower end of the z^2 range reachable by
// reweighting the constant term only.
double z2_improved_alpha_bound();

struct Omega0Window {
  double lo = 0.0;
  double hi = 0.0;
  bool nonempty() const { return lo <= hi; }
};

// Admissible w(0) for z^2 with w(n) = (n+1)^alpha, n >= 1:
// 1 / (2 * 3^-alpha - 5^-alpha) <= w(0) <= 2 * 3^alpha.
// Throws DegenerateDenominator if the denominator is <= 1e-14.
Omega0Window omega0_window(double alpha);

// w(0) at the middle of omega0_window, (n+1)^alpha elsewhere.
// Throws EmptyWindow below z2_improved_alpha_bound().
WeightSequence improved_z2_weights(double alpha);

// (t+1)^-16 for t = 0..21 followed by the Bergman tail (t+1)^-1.
WeightSequence secozk_weights();

struct OperatorCheck {
  double min_eig = 0.0;
  bool holds = false;
};

inline constexpr double operator_check_tolerance = 1e-9;

// Minimum eigenvalue of the Hermitian form Q(x, y) = 2||Tx||^2 + 2||y||^2 -
// ||x + Ty||^2 over x, y of degree <= n_in. T is (n_out+1) x (n_in+1) with
// n_out > n_in and `gram` holds the diagonal norm weights of degrees 0..n_out.
OperatorCheck shimorin_operator_check(const Eigen::MatrixXcd& t, std::span<const double> gram, int n_in);

// Output degree for T = M_B on inputs of degree <= n_in. Monomial B needs
// n_in + deg B; otherwise B f is not a polynomial and the truncated tail,
// of order max|a|^m after m extra degrees, is pushed below 1e-16.
int operator_check_output_degree(const BlaschkeProduct& b, int n_in);

// Same with a dense Hermitian Gram matrix (g(i, j) = <z^j, z^i>) on the output space.
OperatorCheck shimorin_operator_check(const Eigen::MatrixXcd& t, const Eigen::MatrixXcd& gram, int n_in);

}  // namespace wsp
