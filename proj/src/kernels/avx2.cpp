// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the runtime CPU check in dispatch.cpp.
//
// A 256-bit register holds two interleaved complex doubles [re0 im0 re1 im1].

#include "wsplab/kernels/kernels.hpp"

#if defined(WSPLAB_HAVE_AVX2)

#include <immintrin.h>

namespace wsp::kernels {
namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// swap re/im inside each complex: [r0 i0 r1 i1] -> [i0 r0 i1 r1]
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// even lanes minus odd lanes
inline double hsub_pairs(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_sub_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline __m256d load_dup_weights(const double* w) {
  const __m256d w2 = _mm256_castpd128_pd256(_mm_loadu_pd(w));
  return _mm256_permute4x64_pd(w2, 0x50);  // [w0 w0 w1 w1]
}

cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  __m256d direct0 = _mm256_setzero_pd(), direct1 = _mm256_setzero_pd();
  __m256d cross0 = _mm256_setzero_pd(), cross1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d a1 = _mm256_loadu_pd(pa + 2 * i + 4);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * i);
    const __m256d b1 = _mm256_loadu_pd(pb + 2 * i + 4);
    direct0 = _mm256_fmadd_pd(a0, b0, direct0);
    direct1 = _mm256_fmadd_pd(a1, b1, direct1);
    cross0 = _mm256_fmadd_pd(a0, swap_pairs(b0), cross0);
    cross1 = _mm256_fmadd_pd(a1, swap_pairs(b1), cross1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * i);
    direct0 = _mm256_fmadd_pd(a0, b0, direct0);
    cross0 = _mm256_fmadd_pd(a0, swap_pairs(b0), cross0);
  }
  double re = hsum(_mm256_add_pd(direct0, direct1));
  double im = hsub_pairs(_mm256_add_pd(cross0, cross1));
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

cplx dotu_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  __m256d direct0 = _mm256_setzero_pd(), direct1 = _mm256_setzero_pd();
  __m256d cross0 = _mm256_setzero_pd(), cross1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d a1 = _mm256_loadu_pd(pa + 2 * i + 4);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * i);
    const __m256d b1 = _mm256_loadu_pd(pb + 2 * i + 4);
    direct0 = _mm256_fmadd_pd(a0, b0, direct0);
    direct1 = _mm256_fmadd_pd(a1, b1, direct1);
    cross0 = _mm256_fmadd_pd(a0, swap_pairs(b0), cross0);
    cross1 = _mm256_fmadd_pd(a1, swap_pairs(b1), cross1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d b0 = _mm256_loadu_pd(pb + 2 * i);
    direct0 = _mm256_fmadd_pd(a0, b0, direct0);
    cross0 = _mm256_fmadd_pd(a0, swap_pairs(b0), cross0);
  }
  double re = hsub_pairs(_mm256_add_pd(direct0, direct1));
  double im = hsum(_mm256_add_pd(cross0, cross1));
  for (; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

cplx weighted_dot_avx2(const cplx* a, const cplx* b, const double* w, std::size_t n) {
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  __m256d direct = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d bw = _mm256_mul_pd(_mm256_loadu_pd(pb + 2 * i), load_dup_weights(w + i));
    direct = _mm256_fmadd_pd(a0, bw, direct);
    cross = _mm256_fmadd_pd(a0, swap_pairs(bw), cross);
  }
  double re = hsum(direct);
  // cross holds [ar*bi, ai*br]; a*conj(b) has imaginary part ai*br - ar*bi
  double im = -hsub_pairs(cross);
  for (; i < n; ++i) {
    const double br = b[i].real() * w[i];
    const double bi = b[i].imag() * w[i];
    re += a[i].real() * br + a[i].imag() * bi;
    im += a[i].imag() * br - a[i].real() * bi;
  }
  return {re, im};
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* px = as_doubles(x);
  double* py = as_doubles(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = _mm256_loadu_pd(px + 2 * i);
    const __m256d prod = _mm256_fmaddsub_pd(x0, ar, _mm256_mul_pd(swap_pairs(x0), ai));
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = {y[i].real() + alpha.real() * xr - alpha.imag() * xi,
            y[i].imag() + alpha.real() * xi + alpha.imag() * xr};
  }
}

double weighted_norm2_avx2(const cplx* a, const double* w, std::size_t n) {
  const double* pa = as_doubles(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d a0 = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(a0, a0), load_dup_weights(w + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += (a[i].real() * a[i].real() + a[i].imag() * a[i].imag()) * w[i];
  }
  return s;
}

}  // namespace

const KernelTable& avx2_table_unchecked() {
  static const KernelTable table{"avx2",    dotc_avx2, dotu_avx2, weighted_dot_avx2,
                                 axpy_avx2, weighted_norm2_avx2};
  return table;
}

}  // namespace wsp::kernels

#endif  // WSPLAB_HAVE_AVX2
