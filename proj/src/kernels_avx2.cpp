// AVX2+FMA kernel variants. Complex data is interleaved (re, im); a 256-bit
// register holds two complex doubles. All loads/stores are unaligned; tails
// shorter than a full vector fall back to the scalar loop.
//
// This translation unit is compiled with -mavx2 -mfma; callers must only
// reach it through the dispatcher after the CPUID check.

#include "qbell/kernels.hpp"

#if QBELL_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace qbell::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Lane sign masks: flip odd (imag) or even (real) lanes.
inline __m256d negate_odd(__m256d v) {
  const __m256d m = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  return _mm256_xor_pd(v, m);
}
inline __m256d negate_even(__m256d v) {
  const __m256d m = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  return _mm256_xor_pd(v, m);
}
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0x5); }

}  // namespace

cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * k);
    // re: xr*yr + xi*yi, lanes summed at the end
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    // im: xr*yi - xi*yr -> (x with odd lanes negated) * (y swapped)
    acc_im = _mm256_fmadd_pd(negate_odd(xv), swap_pairs(yv), acc_im);
  }
  cplx r{hsum(acc_re), hsum(acc_im)};
  if (k < n) r += scalar::dot_conj(x + k, y + k, n - k);
  return r;
}

cplx dot(const cplx* x, const cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * k);
    // re: xr*yr - xi*yi
    acc_re = _mm256_fmadd_pd(negate_odd(xv), yv, acc_re);
    // im: xr*yi + xi*yr
    acc_im = _mm256_fmadd_pd(xv, swap_pairs(yv), acc_im);
  }
  cplx r{hsum(acc_re), hsum(acc_im)};
  if (k < n) r += scalar::dot(x + k, y + k, n - k);
  return r;
}

void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  // (-ai, ai, -ai, ai): pairs with the swapped x to give (-ai*xi, ai*xr)
  const __m256d ai = _mm256_set_pd(a.imag(), -a.imag(), a.imag(), -a.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    __m256d yv = _mm256_loadu_pd(yp + 2 * k);
    yv = _mm256_fmadd_pd(ar, xv, yv);
    yv = _mm256_fmadd_pd(ai, swap_pairs(xv), yv);
    _mm256_storeu_pd(yp + 2 * k, yv);
  }
  if (k < n) scalar::axpy(a, x + k, y + k, n - k);
}

void mul_inplace(cplx* x, const cplx* w, std::size_t n) {
  double* xp = reinterpret_cast<double*>(x);
  const double* wp = reinterpret_cast<const double*>(w);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
    const __m256d wv = _mm256_loadu_pd(wp + 2 * k);
    const __m256d wr = _mm256_movedup_pd(wv);          // (wr, wr)
    const __m256d wi = _mm256_permute_pd(wv, 0xF);     // (wi, wi)
    // (xr*wr - xi*wi, xi*wr + xr*wi)
    const __m256d t = _mm256_mul_pd(negate_even(swap_pairs(xv)), wi);
    _mm256_storeu_pd(xp + 2 * k, _mm256_fmadd_pd(xv, wr, t));
  }
  if (k < n) scalar::mul_inplace(x + k, w + k, n - k);
}

cplx dot_real(const double* v, const cplx* y, std::size_t n) {
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vv = _mm256_loadu_pd(v + k);
    const __m256d vlo = _mm256_permute4x64_pd(vv, 0x50);  // v0 v0 v1 v1
    const __m256d vhi = _mm256_permute4x64_pd(vv, 0xFA);  // v2 v2 v3 v3
    acc0 = _mm256_fmadd_pd(vlo, _mm256_loadu_pd(yp + 2 * k), acc0);
    acc1 = _mm256_fmadd_pd(vhi, _mm256_loadu_pd(yp + 2 * k + 4), acc1);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  // lanes: (re, im, re, im)
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  lo = _mm_add_pd(lo, hi);
  cplx r{_mm_cvtsd_f64(lo), _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo))};
  if (k < n) r += scalar::dot_real(v + k, y + k, n - k);
  return r;
}

void axpy_real(cplx a, const double* v, cplx* y, std::size_t n) {
  double* yp = reinterpret_cast<double*>(y);
  const __m256d av = _mm256_set_pd(a.imag(), a.real(), a.imag(), a.real());
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vv = _mm256_loadu_pd(v + k);
    const __m256d vlo = _mm256_permute4x64_pd(vv, 0x50);
    const __m256d vhi = _mm256_permute4x64_pd(vv, 0xFA);
    __m256d y0 = _mm256_loadu_pd(yp + 2 * k);
    __m256d y1 = _mm256_loadu_pd(yp + 2 * k + 4);
    y0 = _mm256_fmadd_pd(vlo, av, y0);
    y1 = _mm256_fmadd_pd(vhi, av, y1);
    _mm256_storeu_pd(yp + 2 * k, y0);
    _mm256_storeu_pd(yp + 2 * k + 4, y1);
  }
  if (k < n) scalar::axpy_real(a, v + k, y + k, n - k);
}

}  // namespace qbell::kernels::avx2

#endif  // QBELL_HAVE_AVX2_KERNELS
