#include "matcore/kernels.hpp"

namespace matcore::kernels {

namespace {

using GemmFn = void (*)(std::size_t, std::size_t, std::size_t, const cdouble*,
                        const cdouble*, cdouble*);
using BinFn = void (*)(std::size_t, const cdouble*, const cdouble*, cdouble*);
using ScaleFn = void (*)(std::size_t, cdouble, const cdouble*, cdouble*);

struct Table {
  GemmFn gemm;
  BinFn add;
  BinFn sub;
  ScaleFn scale;
  const char* name;
};

constexpr Table kScalar{scalar::gemm, scalar::add, scalar::sub, scalar::scale,
                        "scalar"};

Table detect() {
#if defined(__x86_64__) || defined(__i386__)
  if (avx2::available())
    return {avx2::gemm, avx2::add, avx2::sub, avx2::scale, "avx2"};
#endif
#if defined(__ARM_NEON)
  if (neon::available())
    return {neon::gemm, neon::add, neon::sub, neon::scale, "neon"};
#endif
  return kScalar;
}

Table& active() {
  static Table t = detect();
  return t;
}

}  // namespace

Backend set_backend(Backend b) {
  switch (b) {
    case Backend::Auto:
      active() = detect();
      break;
    case Backend::Scalar:
      active() = kScalar;
      break;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      if (avx2::available()) {
        active() = {avx2::gemm, avx2::add, avx2::sub, avx2::scale, "avx2"};
        break;
      }
#endif
      active() = kScalar;
      break;
    case Backend::Neon:
#if defined(__ARM_NEON)
      if (neon::available()) {
        active() = {neon::gemm, neon::add, neon::sub, neon::scale, "neon"};
        break;
      }
#endif
      active() = kScalar;
      break;
  }
  const char* n = active().name;
  if (n[0] == 'a') return Backend::Avx2;
  if (n[0] == 'n') return Backend::Neon;
  return Backend::Scalar;
}

const char* backend_name() { return active().name; }

void gemm(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
          const cdouble* b, cdouble* c) {
  active().gemm(m, k, n, a, b, c);
}

void add(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out) {
  active().add(n, a, b, out);
}

void sub(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out) {
  active().sub(n, a, b, out);
}

void scale(std::size_t n, cdouble s, const cdouble* a, cdouble* out) {
  active().scale(n, s, a, out);
}

}  // namespace matcore::kernels
