#pragma once

// Reference B-adic layers by least squares on boundary samples.
//
// Columns are k_{a,s}(z) B(z)^k for k < layers, where k_{a,s} = z^s / (1 - conj(a) z)^{s+1}
// (s below the multiplicity of a) spans K_B. The subspaces B^k K_B are mutually
// orthogonal in H^2, so the orthogonal projection of f onto their sum has the
// true layers h_0, ..., h_{layers-1} as components, whatever the cut-off.
// The H^2 inner product is replaced by the mean over q equispaced points on
// the circle, exact up to aliasing of order max|a|^q.
//
// Nothing here uses the library's series, model-space or decomposition code.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;

struct Kernel {
  cplx a;
  int s;
};

inline std::vector<Kernel> kernels_for(const std::vector<cplx>& zeros) {
  std::vector<Kernel> out;
  std::vector<cplx> seen;
  for (const cplx& a : zeros) {
    int s = 0;
    for (const cplx& b : seen) {
      if (std::abs(a - b) == 0.0) ++s;
    }
    seen.push_back(a);
    out.push_back({a, s});
  }
  return out;
}

inline cplx eval_kernel(const Kernel& k, cplx z) {
  return std::pow(z, k.s) / std::pow(1.0 - std::conj(k.a) * z, k.s + 1);
}

inline cplx eval_blaschke(const std::vector<cplx>& zeros, double phase, cplx z) {
  cplx v = std::polar(1.0, phase);
  for (const cplx& a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

// Taylor coefficient n of z^s / (1 - conj(a) z)^{s+1}: C(n, s) conj(a)^{n-s}.
inline cplx kernel_coefficient(const Kernel& k, int n) {
  if (n < k.s) return 0.0;
  double binom = 1.0;
  for (int i = 1; i <= k.s; ++i) binom = binom * (n - k.s + i) / i;
  const cplx ab = std::conj(k.a);
  return binom * (n == k.s ? cplx(1.0) : std::pow(ab, n - k.s));
}

// layers[k][n] = Taylor coefficient n of h_k, for n <= degree.
inline std::vector<std::vector<cplx>> lsq_layers(const std::vector<cplx>& f, const std::vector<cplx>& zeros,
                                                 double phase, int layers, int degree, int samples = 1024) {
  const std::vector<Kernel> ks = kernels_for(zeros);
  const int d = static_cast<int>(ks.size());
  Eigen::MatrixXcd a(samples, d * layers);
  Eigen::VectorXcd rhs(samples);
  for (int q = 0; q < samples; ++q) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * q / samples);
    cplx fz = 0.0;
    for (std::size_t n = f.size(); n-- > 0;) fz = fz * z + f[n];
    rhs(q) = fz;
    const cplx bz = eval_blaschke(zeros, phase, z);
    cplx power = 1.0;
    for (int k = 0; k < layers; ++k) {
      for (int j = 0; j < d; ++j) a(q, k * d + j) = eval_kernel(ks[static_cast<std::size_t>(j)], z) * power;
      power *= bz;
    }
  }
  const Eigen::VectorXcd c = a.colPivHouseholderQr().solve(rhs);

  std::vector<std::vector<cplx>> out(static_cast<std::size_t>(layers),
                                     std::vector<cplx>(static_cast<std::size_t>(degree + 1)));
  for (int k = 0; k < layers; ++k) {
    for (int j = 0; j < d; ++j) {
      for (int n = 0; n <= degree; ++n) {
        out[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] +=
            c(k * d + j) * kernel_coefficient(ks[static_cast<std::size_t>(j)], n);
      }
    }
  }
  return out;
}

}  // namespace oracle
