#include "wsplab/shimorin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsplab/errors.hpp"
#include "wsplab/series.hpp"

namespace wsp {

long CriterionReport::first_violation_index() const {
  long first = -1;
  for (const Violation& v : violations) {
    if (first < 0 || v.index < first) first = v.index;
  }
  return first;
}

namespace {

bool exceeds(double lhs, double rhs) {
  return lhs - rhs > weight_relative_tolerance * std::max(std::abs(lhs), std::abs(rhs));
}

// g(s) = 1/w(s) - 1/w(s+k) must be non-decreasing on the tail.
TailCertificate shimorin_tail_certificate(const std::vector<double>& inv, const WeightSequence& w, int k, long from,
                                          long to) {
  TailCertificate cert;
  const double a = w.tail_exponent();
  cert.analytic = a >= -1.0 && a <= 0.0;
  bool monotone = true;
  long where = -1;
  for (long s = from; s < to; ++s) {
    const auto i = static_cast<std::size_t>(s);
    const double g0 = inv[i] - inv[i + static_cast<std::size_t>(k)];
    const double g1 = inv[i + 1] - inv[i + 1 + static_cast<std::size_t>(k)];
    const double scale = std::abs(inv[i]) + std::abs(inv[i + 1 + static_cast<std::size_t>(k)]);
    if (g1 < g0 - weight_relative_tolerance * scale) {
      monotone = false;
      where = s;
      break;
    }
  }
  cert.applies = monotone;
  cert.note = "tail exponent " + format_real(a) + "; g(s) = 1/w(s) - 1/w(s+k) " +
              (monotone ? "non-decreasing" : "decreases at s=" + std::to_string(where)) + " on [" +
              std::to_string(from) + ", " + std::to_string(to) + "]" +
              (cert.analytic ? " (monotone for all s when the exponent is in [-1, 0])" : " (heuristic)");
  return cert;
}

}  // namespace

CriterionReport shimorin_weight_criterion(const WeightSequence& w, int k, long s0, long n_max) {
  if (k < 1) throw std::invalid_argument("shimorin_weight_criterion: k must be >= 1");
  if (s0 < 0) throw std::invalid_argument("shimorin_weight_criterion: s0 must be >= 0");
  if (n_max < s0 + 2L * k) throw std::invalid_argument("shimorin_weight_criterion: n_max must be >= s0 + 2k");

  const long top = n_max + 2L * k + 1;
  std::vector<double> weight(static_cast<std::size_t>(top + 1));
  std::vector<double> inv(weight.size());
  for (long n = 0; n <= top; ++n) {
    weight[static_cast<std::size_t>(n)] = w(n);
    inv[static_cast<std::size_t>(n)] = 1.0 / weight[static_cast<std::size_t>(n)];
  }
  auto at = [](const std::vector<double>& v, long i) { return v[static_cast<std::size_t>(i)]; };

  CriterionReport report;
  report.scan_begin = s0;
  report.scan_end = n_max;
  for (long s = s0; s < s0 + k; ++s) {
    const double lhs = at(weight, s);
    const double rhs = 2.0 * at(weight, s + k);
    if (exceeds(lhs, rhs)) report.violations.push_back({"a", s, lhs, rhs});
  }
  for (long s = s0; s <= n_max; ++s) {
    const double lhs = at(inv, s) + at(inv, s + 2L * k);
    const double rhs = 2.0 * at(inv, s + k);
    if (exceeds(lhs, rhs)) report.violations.push_back({"b", s, lhs, rhs});
  }
  report.tail = shimorin_tail_certificate(inv, w, k, std::max(s0, w.tail_start()), n_max);
  report.holds = report.violations.empty() && report.tail->applies;
  return report;
}

CriterionReport concavity_criterion(const WeightSequence& w, int k, long n_max) {
  if (k < 1) throw std::invalid_argument("concavity_criterion: k must be >= 1");
  if (n_max < 0) throw std::invalid_argument("concavity_criterion: n_max must be >= 0");
  CriterionReport report;
  report.scan_begin = 0;
  report.scan_end = n_max;
  for (long n = 0; n <= n_max; ++n) {
    const double w0 = w(n), w1 = w(n + k), w2 = w(n + 2L * k);
    if (exceeds(w2 + w0, 2.0 * w1)) report.violations.push_back({"concavity", n, w2 + w0, 2.0 * w1});
  }
  TailCertificate cert;
  const double a = w.tail_exponent();
  cert.analytic = true;
  cert.applies = a >= 0.0 && a <= 1.0;
  cert.note = "tail exponent " + format_real(a) + (cert.applies ? " in [0, 1]: power tail is concave"
                                                                : " outside [0, 1]: power tail is not concave");
  report.tail = cert;
  report.holds = report.violations.empty() && cert.applies;
  return report;
}

double alpha_threshold_monomial(int k) {
  if (k < 1) throw std::invalid_argument("alpha_threshold_monomial: k must be >= 1");
  return std::log(2.0) / std::log(static_cast<double>(k) + 1.0);
}

double z2_improved_alpha_bound() { return std::log(2.0 / 3.0) / std::log(5.0 / 3.0); }

Omega0Window omega0_window(double alpha) {
  const double denom = 2.0 * std::pow(3.0, -alpha) - std::pow(5.0, -alpha);
  if (denom <= 1e-14) throw DegenerateDenominator("omega0_window: 2*3^-a - 5^-a <= 0 at a = " + format_real(alpha));
  return {1.0 / denom, 2.0 * std::pow(3.0, alpha)};
}

WeightSequence improved_z2_weights(double alpha) {
  if (alpha > 0.0) throw std::invalid_argument("improved_z2_weights: alpha must be <= 0");
  if (alpha < z2_improved_alpha_bound()) {
    throw EmptyWindow("improved_z2_weights: no admissible w(0) for alpha = " + format_real(alpha));
  }
  const Omega0Window win = omega0_window(alpha);
  // at the bound itself lo and hi agree up to rounding
  const double w0 = win.nonempty() ? 0.5 * (win.lo + win.hi) : win.hi;
  return WeightSequence::explicit_head({w0}, WeightSequence::power_law(alpha));
}

WeightSequence secozk_weights() {
  std::vector<double> head(22);
  for (int t = 0; t < 22; ++t) head[static_cast<std::size_t>(t)] = std::pow(t + 1.0, -16.0);
  return WeightSequence::explicit_head(std::move(head), WeightSequence::power_law(-1.0));
}

OperatorCheck shimorin_operator_check(const Eigen::MatrixXcd& t, const Eigen::MatrixXcd& gram, int n_in) {
  const Eigen::Index in = n_in + 1;
  if (t.cols() != in) throw DimensionMismatch("shimorin_operator_check: T must have n_in + 1 columns");
  if (t.rows() <= in) throw DimensionMismatch("shimorin_operator_check: T must map into a larger space");
  if (gram.rows() != t.rows() || gram.cols() != t.rows()) {
    throw DimensionMismatch("shimorin_operator_check: Gram size must match the output space of T");
  }
  const Eigen::MatrixXcd gt = gram * t;                         // G T
  const Eigen::MatrixXcd tgt = t.adjoint() * gt;                // T* G T
  const Eigen::MatrixXcd ege = gram.topLeftCorner(in, in);      // E* G E
  const Eigen::MatrixXcd egt = gt.topRows(in);                  // E* G T

  Eigen::MatrixXcd q(2 * in, 2 * in);
  q.topLeftCorner(in, in) = 2.0 * tgt - ege;
  q.topRightCorner(in, in) = -egt;
  q.bottomLeftCorner(in, in) = -egt.adjoint();
  q.bottomRightCorner(in, in) = 2.0 * ege - tgt;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(q, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw Error("shimorin_operator_check: eigensolver did not converge");
  const double min_eig = eig.eigenvalues().minCoeff();
  return {min_eig, min_eig >= -operator_check_tolerance};
}

OperatorCheck shimorin_operator_check(const Eigen::MatrixXcd& t, std::span<const double> gram, int n_in) {
  if (static_cast<Eigen::Index>(gram.size()) != t.rows()) {
    throw DimensionMismatch("shimorin_operator_check: weight count must match the output space of T");
  }
  Eigen::VectorXcd d(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i) d(i) = gram[static_cast<std::size_t>(i)];
  return shimorin_operator_check(t, Eigen::MatrixXcd(d.asDiagonal()), n_in);
}

int operator_check_output_degree(const BlaschkeProduct& b, int n_in) {
  double r = 0.0;
  for (const cplx& a : b.zeros()) r = std::max(r, std::abs(a));
  int extra = 0;
  if (r > 0.0) extra = static_cast<int>(std::ceil(std::log(1e-16) / std::log(r))) + 2 * b.degree();
  return n_in + b.degree() + extra;
}

}  // namespace wsp
