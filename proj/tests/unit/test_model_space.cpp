#include <doctest.h>

#include "../support.hpp"
#include "wsplab/model_space.hpp"
#include "wsplab/random.hpp"

using namespace wsp;
using testing::max_diff;

namespace {

double gram_error(const ModelSpaceBasis& mb) {
  const WeightSequence h2 = WeightSequence::power_law(0.0);
  double e = 0.0;
  for (int i = 0; i < mb.dimension(); ++i) {
    for (int j = 0; j < mb.dimension(); ++j) {
      const cplx g = weighted_inner_product(mb.basis[static_cast<std::size_t>(i)], mb.basis[static_cast<std::size_t>(j)], h2);
      e = std::max(e, std::abs(g - cplx(i == j ? 1.0 : 0.0)));
    }
  }
  return e;
}

}  // namespace

TEST_SUITE("model_space") {
  TEST_CASE("monomial model space") {
    const ModelSpaceBasis mb = tm_basis(BlaschkeProduct::monomial(3), 10);
    REQUIRE(mb.dimension() == 3);
    for (int j = 0; j < 3; ++j) CHECK(max_diff(mb.basis[static_cast<std::size_t>(j)], ComplexSeries::monomial(j, j)) == 0.0);
  }

  TEST_CASE("single zero") {
    const cplx a(0.4, -0.3);
    const ModelSpaceBasis mb = tm_basis(BlaschkeProduct({a}), 60);
    REQUIRE(mb.dimension() == 1);
    const double c = std::sqrt(1.0 - std::norm(a));
    for (int n = 0; n <= 60; ++n) CHECK(std::abs(mb.basis[0][n] - c * std::pow(std::conj(a), n)) < 1e-14);
    CHECK(gram_error(mb) < 1e-12);
  }

  TEST_CASE("Gram matrix is the identity") {
    for (const std::vector<cplx>& zeros : std::vector<std::vector<cplx>>{
             {0.5, cplx(0, 0.3)}, {0.8, cplx(-0.8, 0), cplx(0, 0.8)}, {0.3, 0.3, 0.3}, {0.0, 0.7, 0.0}}) {
      const BlaschkeProduct b(zeros);
      const ModelSpaceBasis mb = tm_basis(b, b.degree() + model_space_guard(b));
      CHECK(gram_error(mb) < 1e-8);
    }
  }

  TEST_CASE("projection examples") {
    const ModelSpaceBasis z2 = tm_basis(BlaschkeProduct::monomial(2), 3);
    CHECK(max_diff(project_KB(testing::series({1.0, 1.0, 1.0, 1.0}), z2), testing::series({1.0, 1.0})) < 1e-15);

    const ModelSpaceBasis half = tm_basis(BlaschkeProduct({0.5}), 40);
    const ComplexSeries p = project_KB(testing::series({1.0}), half);
    CHECK(std::abs(model_space_coordinates(testing::series({1.0}), half)[0] - std::sqrt(3.0) / 2.0) < 1e-15);
    for (int n = 0; n <= 40; ++n) CHECK(std::abs(p[n] - 0.75 * std::pow(0.5, n)) < 1e-15);
  }

  TEST_CASE("idempotence, reproduction, annihilation") {
    const BlaschkeProduct b({cplx(0.5, 0), cplx(0, 0.3), cplx(-0.6, 0.2)}, 0.3);
    const int n = 40, guard = 16;
    const ModelSpaceBasis mb = tm_basis(b, n + model_space_guard(b));
    for (const ComplexSeries& e : mb.basis) CHECK(max_diff(project_KB(e, mb), e) < 1e-10);
    for (int t = 0; t < 10; ++t) {
      auto rng = substream(31, static_cast<std::uint64_t>(t));
      const ComplexSeries f = random_polynomial(rng, n);
      const ComplexSeries pf = project_KB(f, mb);
      CHECK(max_diff(project_KB(pf, mb), pf) < 1e-10);
      const ComplexSeries g = random_polynomial(rng, n - b.degree() - guard);
      CHECK(testing::l2(project_KB(blaschke_multiply(b, g, mb.truncation_degree), mb)) < 1e-7);
    }
  }

  TEST_CASE("dimension equals degree") {
    const BlaschkeProduct b({0.1, 0.1, cplx(0, 0.5), 0.0});
    const ModelSpaceBasis mb = tm_basis(b, 8);
    Eigen::MatrixXcd m(mb.truncation_degree + 1, mb.dimension());
    for (int j = 0; j < mb.dimension(); ++j) {
      for (int n = 0; n <= mb.truncation_degree; ++n) m(n, j) = mb.basis[static_cast<std::size_t>(j)][n];
    }
    CHECK(Eigen::FullPivLU<Eigen::MatrixXcd>(m).rank() == b.degree());
  }
}
