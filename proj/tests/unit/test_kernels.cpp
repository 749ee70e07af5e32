#include <doctest.h>

#include <random>
#include <vector>

#include "wsplab/kernels/kernels.hpp"

using wsp::kernels::cplx;
using wsp::kernels::KernelTable;

namespace {

struct Data {
  std::vector<cplx> a, b, y;
  std::vector<double> w;
};

Data make(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.1, 3.0);
  Data d;
  for (std::size_t i = 0; i < n; ++i) {
    d.a.emplace_back(g(rng), g(rng));
    d.b.emplace_back(g(rng), g(rng));
    d.y.emplace_back(g(rng), g(rng));
    d.w.push_back(u(rng));
  }
  return d;
}

double close(cplx x, cplx y, double scale) { return std::abs(x - y) / std::max(1.0, scale); }

void compare(const KernelTable& ref, const KernelTable& alt) {
  // odd lengths exercise the tail loops
  for (std::size_t n : {0u, 1u, 2u, 3u, 5u, 8u, 17u, 64u, 129u, 1000u}) {
    CAPTURE(n);
    const Data d = make(n, static_cast<unsigned>(n) + 7);
    const double scale = static_cast<double>(n);
    CHECK(close(ref.dotc(d.a.data(), d.b.data(), n), alt.dotc(d.a.data(), d.b.data(), n), scale) < 1e-13);
    CHECK(close(ref.dotu(d.a.data(), d.b.data(), n), alt.dotu(d.a.data(), d.b.data(), n), scale) < 1e-13);
    CHECK(close(ref.weighted_dot(d.a.data(), d.b.data(), d.w.data(), n),
                alt.weighted_dot(d.a.data(), d.b.data(), d.w.data(), n), scale) < 1e-13);
    CHECK(std::abs(ref.weighted_norm2(d.a.data(), d.w.data(), n) - alt.weighted_norm2(d.a.data(), d.w.data(), n)) /
              std::max(1.0, scale) <
          1e-13);
    std::vector<cplx> y1 = d.y, y2 = d.y;
    const cplx alpha(0.3, -1.7);
    ref.axpy(alpha, d.a.data(), y1.data(), n);
    alt.axpy(alpha, d.a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) < 1e-14);
  }
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar reference values") {
    const KernelTable& s = wsp::kernels::scalar_table();
    const cplx a[] = {{1, 2}, {3, -1}};
    const cplx b[] = {{0, 1}, {2, 2}};
    const double w[] = {2.0, 0.5};
    // conj(1+2i) i + conj(3-i)(2+2i) = (2+i) + (4+8i)
    CHECK(s.dotc(a, b, 2) == cplx(6, 9));
    CHECK(s.dotu(a, b, 2) == cplx(6, 5));
    CHECK(s.weighted_dot(a, b, w, 2) == cplx(6, -6));
    CHECK(s.weighted_norm2(a, w, 2) == doctest::Approx(15.0));
  }

  TEST_CASE("avx2 variant matches the scalar reference") {
    const KernelTable* v = wsp::kernels::avx2_table();
    if (v == nullptr) {
      MESSAGE("AVX2 variant unavailable on this machine; nothing to compare");
      return;
    }
    compare(wsp::kernels::scalar_table(), *v);
  }

  TEST_CASE("active table is one of the variants") {
    const auto name = wsp::kernels::active().name;
    CHECK((name == "scalar" || name == "avx2"));
  }
}
