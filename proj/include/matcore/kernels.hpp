#pragma once
// Low-level complex-double array kernels behind ComplexMatrix arithmetic.
// A scalar reference implementation always exists; on x86 an AVX2+FMA variant
// and on ARM a NEON variant are selected at startup when the CPU supports
// them. Tests can pin the backend to compare variants bit-for-bit in spirit
// (results agree to rounding, not bit-exactly, since fused ops differ).

#include <complex>
#include <cstddef>

namespace matcore::kernels {

using cdouble = std::complex<double>;

enum class Backend { Auto, Scalar, Avx2, Neon };

// c (m x n) = a (m x k) * b (k x n); c must not alias a or b.
void gemm(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
          const cdouble* b, cdouble* c);

// out[i] = a[i] + b[i] / a[i] - b[i] / s * a[i]; aliasing with inputs is fine.
void add(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out);
void sub(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out);
void scale(std::size_t n, cdouble s, const cdouble* a, cdouble* out);

// Select a backend; Auto re-runs CPU detection. Returns the backend actually
// in effect (requesting an unsupported one falls back to Scalar).
Backend set_backend(Backend b);
const char* backend_name();

// Individual implementations, exposed for equivalence tests.
namespace scalar {
void gemm(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
          const cdouble* b, cdouble* c);
void add(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out);
void sub(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out);
void scale(std::size_t n, cdouble s, const cdouble* a, cdouble* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
bool available();
void gemm(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
          const cdouble* b, cdouble* c);
void add(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out);
void sub(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out);
void scale(std::size_t n, cdouble s, const cdouble* a, cdouble* out);
}  // namespace avx2
#endif

#if defined(__ARM_NEON)
namespace neon {
bool available();
void gemm(std::size_t m, std::size_t k, std::size_t n, const cdouble* a,
          const cdouble* b, cdouble* c);
void add(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out);
void sub(std::size_t n, const cdouble* a, const cdouble* b, cdouble* out);
void scale(std::size_t n, cdouble s, const cdouble* a, cdouble* out);
}  // namespace neon
#endif

}  // namespace matcore::kernels
