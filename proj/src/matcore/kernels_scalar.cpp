#include "matcore/kernels.hpp"

namespace matcore::kernels::scalar {

void gemm(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
          const cdouble* b, cdouble* c) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = cdouble(0.0, 0.0);
  // i-l-j ordering: row of c accumulated against rows of b, cache friendly
  // for row-major storage.
  for (std::size_t i = 0; i < m; ++i) {
    const cdouble* arow = a + i * k;
    cdouble* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const cdouble ail = arow[l];
      if (ail.real() == 0.0 && ail.imag() == 0.0) continue;
      const cdouble* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real(), bi = brow[j].imag();
        crow[j] += cdouble(ail.real() * br - ail.imag() * bi,
                           ail.real() * bi + ail.imag() * br);
      }
    }
  }
}

void add(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void scale(std::size_t n, cdouble s, const cdouble* a, cdouble* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    out[i] = cdouble(s.real() * ar - s.imag() * ai,
                     s.real() * ai + s.imag() * ar);
  }
}

}  // namespace matcore::kernels::scalar
