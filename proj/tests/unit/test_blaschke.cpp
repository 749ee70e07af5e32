#include <doctest.h>

#include <numbers>

#include "../support.hpp"
#include "wsplab/blaschke.hpp"
#include "wsplab/errors.hpp"
#include "wsplab/random.hpp"

using namespace wsp;
using testing::max_diff;

TEST_SUITE("blaschke") {
  TEST_CASE("construction and literal") {
    CHECK_THROWS_AS(BlaschkeProduct({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(BlaschkeProduct({cplx(0.8, 0.8)}), std::invalid_argument);
    const BlaschkeProduct b = parse_blaschke("zeros=0.5,0;0,0.3 phase=0.25");
    REQUIRE(b.degree() == 2);
    CHECK(b.zeros()[1] == cplx(0, 0.3));
    CHECK(b.phase() == 0.25);
    const BlaschkeProduct again = parse_blaschke(b.describe());
    CHECK(again.zeros()[0] == b.zeros()[0]);
    CHECK(again.phase() == b.phase());
    CHECK(BlaschkeProduct::monomial(3).is_monomial());
    CHECK(BlaschkeProduct::monomial(3).order_at_origin() == 3);
    CHECK_FALSE(parse_blaschke("zeros=0,0;0.1,0").is_monomial());
    CHECK_THROWS_AS(parse_blaschke("zeros=0.5 phase=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_blaschke("poles=0,0"), std::invalid_argument);
  }

  TEST_CASE("evaluation") {
    CHECK(std::abs(blaschke_eval(BlaschkeProduct({0.0}), cplx(0, 0.3)) - cplx(0, 0.3)) < 1e-16);
    const BlaschkeProduct b({cplx(0.5, 0), cplx(0, 0.3), cplx(-0.2, 0.6)});
    for (const cplx& a : b.zeros()) CHECK(std::abs(blaschke_eval(b, a)) < 1e-16);
    CHECK(std::abs(blaschke_eval(BlaschkeProduct({0.5}), 0.0) - cplx(-0.5)) < 1e-16);
    CHECK_THROWS_AS(blaschke_eval(b, cplx(1.5, 0)), std::invalid_argument);
    CHECK(std::abs(blaschke_eval(b, cplx(0.3, -0.2))) < 1.0);
  }

  TEST_CASE("taylor expansion") {
    const ComplexSeries m = blaschke_taylor(BlaschkeProduct::monomial(3), 6);
    CHECK(max_diff(m, ComplexSeries::monomial(3, 6)) == 0.0);
    const ComplexSeries h = blaschke_taylor(BlaschkeProduct({0.5}), 4);
    CHECK(max_diff(h, testing::series({-0.5, 0.75, 0.375, 0.1875, 0.09375})) < 1e-15);

    const BlaschkeProduct b({cplx(0.5, 0), cplx(0, 0.3), 0.0}, 0.7);
    const ComplexSeries t = blaschke_taylor(b, 200);
    CHECK(std::abs(t[0]) == 0.0);
    for (int q = 0; q < 16; ++q) {
      const cplx z = std::polar(0.6, 2.0 * std::numbers::pi * q / 16.0);
      cplx v = 0.0;
      for (int n = t.degree(); n >= 0; --n) v = v * z + t[n];
      CHECK(std::abs(v - blaschke_eval(b, z)) < 1e-10);
    }
    const BlaschkeProduct nb({cplx(0.2, 0.1)});
    CHECK(std::abs(blaschke_taylor(nb, 3)[0] - blaschke_eval(nb, 0.0)) < 1e-16);
  }

  TEST_CASE("boundary unimodularity") {
    CHECK(boundary_unimodularity_error(BlaschkeProduct({cplx(0.5, 0), cplx(0, 0.3), cplx(0.9, -0.1)}, 1.0)) < 1e-10);
    CHECK(boundary_unimodularity_error(BlaschkeProduct::monomial(5)) < 1e-14);
  }

  TEST_CASE("multiplication matrix") {
    const Eigen::MatrixXcd s = multiplication_matrix(BlaschkeProduct::monomial(1), 3, 4);
    for (int i = 0; i <= 4; ++i) {
      for (int j = 0; j <= 3; ++j) CHECK(s(i, j) == cplx(i == j + 1 ? 1.0 : 0.0));
    }
    const Eigen::MatrixXcd z2 = multiplication_matrix(BlaschkeProduct::monomial(2), 1, 3);
    CHECK(z2(2, 0) == cplx(1.0));
    CHECK(z2(3, 1) == cplx(1.0));
    CHECK(z2.cwiseAbs().sum() == 2.0);

    const BlaschkeProduct b({cplx(0.5, 0), cplx(0, 0.3)}, 0.4);
    const int n_in = 12, n_out = 40;
    const Eigen::MatrixXcd m = multiplication_matrix(b, n_in, n_out);
    for (int t = 0; t < 10; ++t) {
      auto rng = substream(17, static_cast<std::uint64_t>(t));
      const ComplexSeries f = random_polynomial(rng, n_in);
      const Eigen::VectorXcd x = Eigen::Map<const Eigen::VectorXcd>(f.coeffs().data(), n_in + 1);
      const Eigen::VectorXcd y = m * x;
      const ComplexSeries bf = series_mul(blaschke_taylor(b, n_out), f, n_out);
      const ComplexSeries direct = blaschke_multiply(b, f, n_out);
      for (int n = 0; n <= n_out; ++n) {
        CHECK(std::abs(y(n) - bf[n]) < 1e-12);
        CHECK(std::abs(direct[n] - bf[n]) < 1e-12);
      }
    }

    // M_B M_B = M_{B^2}
    std::vector<cplx> twice(b.zeros().begin(), b.zeros().end());
    twice.insert(twice.end(), b.zeros().begin(), b.zeros().end());
    const BlaschkeProduct b2(twice, 2 * b.phase());
    const Eigen::MatrixXcd sq = multiplication_matrix(b, 40, 60) * multiplication_matrix(b, 10, 40);
    CHECK((sq.topRows(41) - multiplication_matrix(b2, 10, 40)).cwiseAbs().maxCoeff() < 1e-10);
  }

  TEST_CASE("adjoint multiplication") {
    const BlaschkeProduct b({cplx(0.5, 0), cplx(0, 0.3), 0.0}, 1.1);
    for (int t = 0; t < 10; ++t) {
      auto rng = substream(23, static_cast<std::uint64_t>(t));
      const ComplexSeries f = random_polynomial(rng, 20), g = random_polynomial(rng, 15);
      // <T_conj(B) f, g> = <f, B g> in H^2
      const ComplexSeries tf = blaschke_adjoint_multiply(b, f);
      CHECK(tf.degree() <= f.degree());
      const ComplexSeries bg = blaschke_multiply(b, g, 200);
      const WeightSequence h2 = WeightSequence::power_law(0.0);
      CHECK(std::abs(weighted_inner_product(tf, g, h2) - weighted_inner_product(f, bg, h2)) < 1e-12);
      // T_conj(B) (B g) = g, up to the truncated tail of B g
      CHECK(max_diff(blaschke_adjoint_multiply(b, blaschke_multiply(b, g, 200)), g) < 1e-10);
    }
  }
}
