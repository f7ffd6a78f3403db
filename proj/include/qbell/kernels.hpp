#pragma once

// Arithmetic kernels for the dense complex inner loops (spectral propagation,
// sweep evaluation, estimators). Each kernel has a scalar reference
// implementation and an AVX2+FMA variant; the active implementation is chosen
// once at startup from CPUID and can be forced with QBELL_KERNELS=scalar|avx2.
// The two implementations are equivalence-tested against each other.
//
// Contracts common to all kernels:
//  - complex arrays are interleaved (re, im) doubles, unaligned loads allowed;
//  - n is the element count (complex elements, not doubles);
//  - x/y may not alias unless stated otherwise.

#include <complex>
#include <cstddef>
#include <string_view>

namespace qbell::kernels {

using cplx = std::complex<double>;

namespace scalar {
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);    // sum conj(x)*y
cplx dot(const cplx* x, const cplx* y, std::size_t n);         // sum x*y
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);      // y += a*x
void mul_inplace(cplx* x, const cplx* w, std::size_t n);       // x *= w (elementwise)
cplx dot_real(const double* v, const cplx* y, std::size_t n);  // sum v*y
void axpy_real(cplx a, const double* v, cplx* y, std::size_t n);  // y += a*v
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define QBELL_HAVE_AVX2_KERNELS 1
namespace avx2 {
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);
cplx dot(const cplx* x, const cplx* y, std::size_t n);
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);
void mul_inplace(cplx* x, const cplx* w, std::size_t n);
cplx dot_real(const double* v, const cplx* y, std::size_t n);
void axpy_real(cplx a, const double* v, cplx* y, std::size_t n);
}  // namespace avx2
#else
#define QBELL_HAVE_AVX2_KERNELS 0
#endif

// Name of the implementation the dispatcher selected ("scalar" or "avx2").
std::string_view active_implementation();

// Dispatched entry points.
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n);
cplx dot(const cplx* x, const cplx* y, std::size_t n);
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n);
void mul_inplace(cplx* x, const cplx* w, std::size_t n);
cplx dot_real(const double* v, const cplx* y, std::size_t n);
void axpy_real(cplx a, const double* v, cplx* y, std::size_t n);

}  // namespace qbell::kernels
