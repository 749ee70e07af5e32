#include <doctest.h>

#include <cmath>

#include "wsplab/blaschke.hpp"
#include "wsplab/errors.hpp"
#include "wsplab/inner_product.hpp"
#include "wsplab/shimorin.hpp"

using namespace wsp;

namespace {

OperatorCheck monomial_check(const WeightSequence& w, int k, int n_in) {
  const Eigen::MatrixXcd t = multiplication_matrix(BlaschkeProduct::monomial(k), n_in, n_in + k);
  const std::vector<double> g = w.table(n_in + k);
  return shimorin_operator_check(t, g, n_in);
}

}  // namespace

TEST_SUITE("shimorin") {
  TEST_CASE("weight criterion examples") {
    for (int k = 1; k <= 6; ++k) CHECK(shimorin_weight_criterion(WeightSequence::power_law(0.0), k, 0, 1000).holds);

    const CriterionReport r = shimorin_weight_criterion(WeightSequence::power_law(-1.0), 2, 0, 1000);
    CHECK_FALSE(r.holds);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].condition == "a");
    CHECK(r.violations[0].index == 0);
    CHECK(r.violations[0].lhs == 1.0);
    CHECK(r.violations[0].rhs == doctest::Approx(2.0 / 3.0));
    CHECK(r.first_violation_index() == 0);

    const CriterionReport ok = shimorin_weight_criterion(WeightSequence::power_law(-1.0), 2, 2, 100000);
    CHECK(ok.holds);
    CHECK(ok.violations.empty());
    REQUIRE(ok.tail.has_value());
    CHECK(ok.tail->applies);
    CHECK(ok.tail->analytic);

    CHECK_THROWS_AS(shimorin_weight_criterion(WeightSequence::power_law(0.0), 0, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(shimorin_weight_criterion(WeightSequence::power_law(0.0), 3, 0, 5), std::invalid_argument);
  }

  TEST_CASE("condition (b) fails for growing weights") {
    const CriterionReport r = shimorin_weight_criterion(WeightSequence::power_law(0.5), 1, 0, 100);
    CHECK_FALSE(r.holds);
    bool saw_b = false;
    for (const Violation& v : r.violations) saw_b = saw_b || v.condition == "b";
    CHECK(saw_b);
  }

  TEST_CASE("boundary sharpness of condition (a)") {
    for (int k = 1; k <= 6; ++k) {
      const double t = alpha_threshold_monomial(k);
      CHECK(shimorin_weight_criterion(WeightSequence::power_law(-t + 1e-6), k, 0, 2000).holds);
      CHECK_FALSE(shimorin_weight_criterion(WeightSequence::power_law(-t - 1e-6), k, 0, 2000).holds);
    }
  }

  TEST_CASE("concavity") {
    CHECK(concavity_criterion(WeightSequence::power_law(1.0), 1, 100000).holds);
    CHECK(concavity_criterion(WeightSequence::power_law(0.5), 1, 100000).holds);
    const CriterionReport bad = concavity_criterion(WeightSequence::power_law(-1.0), 1, 100);
    CHECK_FALSE(bad.holds);
    REQUIRE_FALSE(bad.violations.empty());
    CHECK(bad.violations[0].index == 0);
    for (int k = 1; k <= 6; ++k) {
      const double top = alpha_threshold_monomial(k);
      for (int i = 0; i * 0.01 <= top; ++i) {
        CAPTURE(k);
        CAPTURE(i);
        CHECK(concavity_criterion(WeightSequence::power_law(i * 0.01), k, 10000).holds);
      }
    }
  }

  TEST_CASE("thresholds") {
    CHECK(alpha_threshold_monomial(1) == 1.0);
    CHECK(alpha_threshold_monomial(2) == doctest::Approx(0.6309).epsilon(1e-4));
    CHECK(alpha_threshold_monomial(3) == doctest::Approx(0.5));
    CHECK(z2_improved_alpha_bound() == doctest::Approx(-0.7937).epsilon(1e-4));
    CHECK_THROWS_AS(alpha_threshold_monomial(0), std::invalid_argument);
  }

  TEST_CASE("omega0 window") {
    const Omega0Window w0 = omega0_window(0.0);
    CHECK(w0.lo == doctest::Approx(1.0));
    CHECK(w0.hi == doctest::Approx(2.0));
    const double bound = z2_improved_alpha_bound();
    const Omega0Window edge = omega0_window(bound);
    CHECK(std::abs(edge.hi - edge.lo) <= 1e-10);
    CHECK(omega0_window(bound + 1e-9).nonempty());
    CHECK_FALSE(omega0_window(bound - 1e-9).nonempty());
    CHECK_FALSE(omega0_window(-0.9).nonempty());
    // 2 * 3^-a = 5^-a at a = -log 2 / log(5/3)
    CHECK_THROWS_AS(omega0_window(-std::log(2.0) / std::log(5.0 / 3.0)), DegenerateDenominator);
  }

  TEST_CASE("improved z^2 weights") {
    const WeightSequence w = improved_z2_weights(0.0);
    CHECK(w(0) == doctest::Approx(1.5));
    CHECK(w(1) == 1.0);
    for (double a : {-0.79, -0.7, -0.5, 0.0}) {
      CAPTURE(a);
      CHECK(shimorin_weight_criterion(improved_z2_weights(a), 2, 0, 100000).holds);
    }
    CHECK_THROWS_AS(improved_z2_weights(-0.85), EmptyWindow);
    CHECK_THROWS_AS(improved_z2_weights(0.1), std::invalid_argument);
  }

  TEST_CASE("secozk weights") {
    const WeightSequence w = secozk_weights();
    CHECK(w(0) == 1.0);
    CHECK(w(1) == std::pow(2.0, -16.0));
    CHECK(w(22) == doctest::Approx(1.0 / 23.0));
    const CriterionReport r = shimorin_weight_criterion(w, 6, 0, 100000);
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.violations.empty());
  }

  TEST_CASE("operator check examples") {
    const OperatorCheck h2 = monomial_check(WeightSequence::power_law(0.0), 1, 64);
    CHECK(h2.holds);
    CHECK(h2.min_eig >= -1e-12);
    CHECK(monomial_check(WeightSequence::power_law(-1.0), 1, 64).holds);
    CHECK_FALSE(monomial_check(WeightSequence::power_law(-1.0), 2, 64).holds);

    const Eigen::MatrixXcd t = multiplication_matrix(BlaschkeProduct::monomial(1), 4, 5);
    CHECK_THROWS_AS(shimorin_operator_check(t, std::vector<double>(5, 1.0), 4), DimensionMismatch);
    CHECK_THROWS_AS(shimorin_operator_check(t, std::vector<double>(6, 1.0), 3), DimensionMismatch);
    const Eigen::MatrixXcd square = multiplication_matrix(BlaschkeProduct::monomial(1), 4, 4);
    CHECK_THROWS_AS(shimorin_operator_check(square, std::vector<double>(5, 1.0), 4), DimensionMismatch);
  }

  TEST_CASE("operator and weight checks agree") {
    for (double a : {-1.0, -0.8, -0.63, -0.5, 0.0, 0.5, 1.0}) {
      for (int k = 1; k <= 6; ++k) {
        CAPTURE(a);
        CAPTURE(k);
        const WeightSequence w = WeightSequence::power_law(a);
        CHECK(monomial_check(w, k, 64).holds == shimorin_weight_criterion(w, k, 0, 100000).holds);
      }
    }
  }

  TEST_CASE("non-monomial B under the b-adic norm acts as a weighted shift") {
    CHECK(operator_check_output_degree(BlaschkeProduct::monomial(3), 10) == 13);
    for (const BlaschkeProduct& b : {BlaschkeProduct({cplx(0.5, 0)}), BlaschkeProduct({cplx(0.5, 0), cplx(0, 0.3)}, 0.4)}) {
      const int n_in = 20;
      const int n_out = operator_check_output_degree(b, n_in);
      const Eigen::MatrixXcd t = multiplication_matrix(b, n_in, n_out);
      for (double a : {-1.0, -0.5, 0.5, 1.0}) {
        CAPTURE(a);
        const WeightSequence w = WeightSequence::power_law(a);
        const auto form = InnerProduct::materialize(InnerProductSpec::badic(b, w), n_out);
        CHECK(shimorin_operator_check(t, form->gram(), n_in).holds == shimorin_weight_criterion(w, 1, 0, 100000).holds);
      }
    }
  }
}
