// Scalar reference kernels. Keep these dead simple: they are the oracle the
// SIMD variants are tested against.

#include "qbell/kernels.hpp"

namespace qbell::kernels::scalar {

cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double yr = y[k].real(), yi = y[k].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

cplx dot(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double yr = y[k].real(), yi = y[k].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    y[k] += cplx{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

void mul_inplace(cplx* x, const cplx* w, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) x[k] *= w[k];
}

cplx dot_real(const double* v, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += v[k] * y[k].real();
    im += v[k] * y[k].imag();
  }
  return {re, im};
}

void axpy_real(cplx a, const double* v, cplx* y, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t k = 0; k < n; ++k) {
    y[k] += cplx{ar * v[k], ai * v[k]};
  }
}

}  // namespace qbell::kernels::scalar
