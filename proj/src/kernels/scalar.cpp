#include "wsplab/kernels/kernels.hpp"

namespace wsp::kernels {
namespace {

cplx dotc_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

cplx dotu_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

cplx weighted_dot_scalar(const cplx* a, const cplx* b, const double* w, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double br = b[i].real() * w[i];
    const double bi = b[i].imag() * w[i];
    re += a[i].real() * br + a[i].imag() * bi;
    im += a[i].imag() * br - a[i].real() * bi;
  }
  return {re, im};
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = {y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr};
  }
}

double weighted_norm2_scalar(const cplx* a, const double* w, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += (a[i].real() * a[i].real() + a[i].imag() * a[i].imag()) * w[i];
  }
  return s;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar",     dotc_scalar, dotu_scalar, weighted_dot_scalar,
                                 axpy_scalar, weighted_norm2_scalar};
  return table;
}

}  // namespace wsp::kernels
