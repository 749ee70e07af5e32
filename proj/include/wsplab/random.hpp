#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "wsplab/series.hpp"

namespace wsp {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent deterministic stream for job `index` under a run seed, so that
// results do not depend on how jobs are scheduled.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 0x51ed2701ULL)));
}

// Independent standard complex Gaussian coefficients, degree n.
inline ComplexSeries random_polynomial(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(n + 1));
  for (cplx& v : c) {
    const double re = normal(rng);
    const double im = normal(rng);
    v = {re, im};
  }
  return ComplexSeries(std::move(c));
}

// n zeros, each either in |z| <= inner or in outer <= |z| <= 2 outer (fair
// coin), uniform angle. Keeps generated invariant subspaces away from the
// slowly converging regime of zeros near the unit circle.
inline std::vector<cplx> random_separated_zeros(std::mt19937_64& rng, int n, double inner = 0.5,
                                                double outer = 2.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> zeros;
  zeros.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const bool inside = unit(rng) < 0.5;
    const double u = unit(rng);
    const double r = inside ? inner * u : outer * (1.0 + u);
    const double t = unit(rng);
    zeros.push_back(std::polar(r, 2.0 * std::numbers::pi * t));
  }
  return zeros;
}

}  // namespace wsp
