// Runtime kernel dispatch: AVX2+FMA when the CPU has it, scalar otherwise.
// QBELL_KERNELS=scalar (or avx2) overrides the automatic choice.

#include "qbell/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qbell::kernels {

namespace {

struct Table {
  cplx (*dot_conj)(const cplx*, const cplx*, std::size_t);
  cplx (*dot)(const cplx*, const cplx*, std::size_t);
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  void (*mul_inplace)(cplx*, const cplx*, std::size_t);
  cplx (*dot_real)(const double*, const cplx*, std::size_t);
  void (*axpy_real)(cplx, const double*, cplx*, std::size_t);
  const char* name;
};

constexpr Table kScalar{scalar::dot_conj, scalar::dot,      scalar::axpy,
                        scalar::mul_inplace, scalar::dot_real, scalar::axpy_real,
                        "scalar"};

#if QBELL_HAVE_AVX2_KERNELS
constexpr Table kAvx2{avx2::dot_conj, avx2::dot,      avx2::axpy,
                      avx2::mul_inplace, avx2::dot_real, avx2::axpy_real,
                      "avx2"};
#endif

const Table& select() {
  static const Table& t = []() -> const Table& {
    const char* force = std::getenv("QBELL_KERNELS");
    if (force && std::strcmp(force, "scalar") == 0) return kScalar;
#if QBELL_HAVE_AVX2_KERNELS
    if (force && std::strcmp(force, "avx2") == 0) return kAvx2;
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
      return kAvx2;
#endif
    return kScalar;
  }();
  return t;
}

}  // namespace

std::string_view active_implementation() { return select().name; }

cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) {
  return select().dot_conj(x, y, n);
}
cplx dot(const cplx* x, const cplx* y, std::size_t n) {
  return select().dot(x, y, n);
}
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  select().axpy(a, x, y, n);
}
void mul_inplace(cplx* x, const cplx* w, std::size_t n) {
  select().mul_inplace(x, w, n);
}
cplx dot_real(const double* v, const cplx* y, std::size_t n) {
  return select().dot_real(v, y, n);
}
void axpy_real(cplx a, const double* v, cplx* y, std::size_t n) {
  select().axpy_real(a, v, y, n);
}

}  // namespace qbell::kernels
