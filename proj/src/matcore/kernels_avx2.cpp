// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma on
// x86 targets; the dispatcher only routes here after a runtime CPUID check.

#include "matcore/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace matcore::kernels::avx2 {

bool available() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

// c_vec += s * b_vec over `pairs` complex numbers (2 per __m256d lane pair).
// Complex FMA with interleaved re/im storage: for each packed pair
// [br0 bi0 br1 bi1], fmaddsub(sr, b, si*swap(b)) yields
// [sr*br - si*bi, sr*bi + si*br] in one shot.
inline void cplx_axpy_row(const double sr, const double si, const double* b,
                          double* c, std::size_t n_cplx) {
  const __m256d vr = _mm256_set1_pd(sr);
  const __m256d vi = _mm256_set1_pd(si);
  std::size_t j = 0;
  const std::size_t nd = 2 * n_cplx;
  for (; j + 4 <= nd; j += 4) {
    __m256d bv = _mm256_loadu_pd(b + j);
    __m256d bswap = _mm256_permute_pd(bv, 0x5);  // [bi0 br0 bi1 br1]
    __m256d prod = _mm256_fmaddsub_pd(vr, bv, _mm256_mul_pd(vi, bswap));
    __m256d cv = _mm256_loadu_pd(c + j);
    _mm256_storeu_pd(c + j, _mm256_add_pd(cv, prod));
  }
  for (; j < nd; j += 2) {
    const double br = b[j], bi = b[j + 1];
    c[j] += sr * br - si * bi;
    c[j + 1] += sr * bi + si * br;
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
  std::size_t i = 0;
  const std::size_t nd = 2 * n;
  for (; i + 4 <= nd; i += 4)
    _mm256_storeu_pd(od + i, _mm256_add_pd(_mm256_loadu_pd(ad + i),
                                           _mm256_loadu_pd(bd + i)));
  for (; i < nd; ++i) od[i] = ad[i] + bd[i];
}

void sub(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* od = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  const std::size_t nd = 2 * n;
  for (; i + 4 <= nd; i += 4)
    _mm256_storeu_pd(od + i, _mm256_sub_pd(_mm256_loadu_pd(ad + i),
                                           _mm256_loadu_pd(bd + i)));
  for (; i < nd; ++i) od[i] = ad[i] - bd[i];
}

void scale(std::size_t n, cdouble s, const cdouble* a, cdouble* out) {
  const double* ad = reinterpret_cast<const double*>(a);
  double* od = reinterpret_cast<double*>(out);
  const __m256d vr = _mm256_set1_pd(s.real());
  const __m256d vi = _mm256_set1_pd(s.imag());
  std::size_t i = 0;
  const std::size_t nd = 2 * n;
  for (; i + 4 <= nd; i += 4) {
    __m256d av = _mm256_loadu_pd(ad + i);
    __m256d aswap = _mm256_permute_pd(av, 0x5);
    _mm256_storeu_pd(od + i,
                     _mm256_fmaddsub_pd(vr, av, _mm256_mul_pd(vi, aswap)));
  }
  for (; i < nd; i += 2) {
    const double ar = ad[i], ai = ad[i + 1];
    od[i] = s.real() * ar - s.imag() * ai;
    od[i + 1] = s.real() * ai + s.imag() * ar;
  }
}

}  // namespace matcore::kernels::avx2

#endif  // x86
