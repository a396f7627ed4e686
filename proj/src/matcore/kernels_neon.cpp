// NEON variants for aarch64. Compiled only when the target advertises
// __ARM_NEON; mirrors the scalar semantics exactly.

#include "matcore/kernels.hpp"

#if defined(__ARM_NEON)

#include <arm_neon.h>

namespace matcore::kernels::neon {

bool available() { return true; }

namespace {

// One float64x2_t holds one complex double as [re, im].
inline void cplx_axpy_row(const double sr, const double si, const double* b,
                          double* c, std::size_t n_cplx) {
  for (std::size_t j = 0; j < 2 * n_cplx; j += 2) {
    float64x2_t bv = vld1q_f64(b + j);             // [br, bi]
    float64x2_t bswap = vextq_f64(bv, bv, 1);      // [bi, br]
    float64x2_t acc = vld1q_f64(c + j);
    // re: + sr*br - si*bi ; im: + sr*bi + si*br
    acc = vfmaq_n_f64(acc, bv, sr);
    const float64x2_t sign = {-si, si};
    acc = vfmaq_f64(acc, bswap, sign);
    vst1q_f64(c + j, acc);
  }
}

}  // namespace

void gemm(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
          const cdouble* b, cdouble* c) {
  for (std::size_t i = 0; i < m * n; ++i) c[i] = cdouble(0.0, 0.0);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < m; ++i) {
    const cdouble* arow = a + i * k;
    double* crow = cd + 2 * i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const double ar = arow[l].real(), ai = arow[l].imag();
      if (ar == 0.0 && ai == 0.0) continue;
      cplx_axpy_row(ar, ai, bd + 2 * l * n, crow, n);
    }
  }
}

void add(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* od = reinterpret_cast<double*>(out);
  for (std::size_t i = 0; i < 2 * n; i += 2)
    vst1q_f64(od + i, vaddq_f64(vld1q_f64(ad + i), vld1q_f64(bd + i)));
}

void sub(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* od = reinterpret_cast<double*>(out);
  for (std::size_t i = 0; i < 2 * n; i += 2)
    vst1q_f64(od + i, vsubq_f64(vld1q_f64(ad + i), vld1q_f64(bd + i)));
}

void scale(std::size_t n, cdouble s, const cdouble* a, cdouble* out) {
  const double* ad = reinterpret_cast<const double*>(a);
  double* od = reinterpret_cast<double*>(out);
  const double sr = s.real(), si = s.imag();
  for (std::size_t i = 0; i < 2 * n; i += 2) {
    float64x2_t av = vld1q_f64(ad + i);
    float64x2_t aswap = vextq_f64(av, av, 1);
    float64x2_t res = vmulq_n_f64(av, sr);
    const float64x2_t sign = {-si, si};
    res = vfmaq_f64(res, aswap, sign);
    vst1q_f64(od + i, res);
  }
}

}  // namespace matcore::kernels::neon

#endif  // __ARM_NEON
