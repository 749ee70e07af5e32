#pragma once

// Complex vector kernels used by the series, projection and Gram-Schmidt
// inner loops. Every kernel has a scalar reference implementation; an AVX2
// variant is selected at runtime when the CPU supports AVX2+FMA.
//
// Setting WSPLAB_SIMD=scalar in the environment forces the reference path.

#include <complex>
#include <cstddef>
#include <string_view>

namespace wsp::kernels {

using cplx = std::complex<double>;

// sum_i conj(a_i) * b_i
using DotcFn = cplx (*)(const cplx* a, const cplx* b, std::size_t n);
// sum_i a_i * b_i
using DotuFn = cplx (*)(const cplx* a, const cplx* b, std::size_t n);
// sum_i a_i * conj(b_i) * w_i
using WeightedDotFn = cplx (*)(const cplx* a, const cplx* b, const double* w, std::size_t n);
// y_i += alpha * x_i
using AxpyFn = void (*)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
// sum_i |a_i|^2 * w_i
using WeightedNorm2Fn = double (*)(const cplx* a, const double* w, std::size_t n);

struct KernelTable {
  std::string_view name;
  DotcFn dotc;
  DotuFn dotu;
  WeightedDotFn weighted_dot;
  AxpyFn axpy;
  WeightedNorm2Fn weighted_norm2;
};

const KernelTable& scalar_table();

// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_table();

// The table chosen at first use; stable for the lifetime of the process.
const KernelTable& active();

inline cplx dotc(const cplx* a, const cplx* b, std::size_t n) { return active().dotc(a, b, n); }
inline cplx dotu(const cplx* a, const cplx* b, std::size_t n) { return active().dotu(a, b, n); }
inline cplx weighted_dot(const cplx* a, const cplx* b, const double* w, std::size_t n) {
  return active().weighted_dot(a, b, w, n);
}
inline void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) { active().axpy(alpha, x, y, n); }
inline double weighted_norm2(const cplx* a, const double* w, std::size_t n) {
  return active().weighted_norm2(a, w, n);
}

}  // namespace wsp::kernels
