#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "matcore/kernels.hpp"

namespace kn = matcore::kernels;
using kn::cdouble;

namespace {

std::vector<cdouble> random_buf(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cdouble> v(n);
  for (auto& x : v) x = cdouble(dist(rng), dist(rng));
  return v;
}

double max_abs_diff(const std::vector<cdouble>& a,
                    const std::vector<cdouble>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("runtime dispatch lands on a usable backend") {
  kn::Backend eff = kn::set_backend(kn::Backend::Auto);
  CHECK((eff == kn::Backend::Scalar || eff == kn::Backend::Avx2 ||
         eff == kn::Backend::Neon));
  CHECK(kn::backend_name() != nullptr);
  // Forcing scalar always succeeds.
  CHECK(kn::set_backend(kn::Backend::Scalar) == kn::Backend::Scalar);
  kn::set_backend(kn::Backend::Auto);
}

TEST_CASE("accelerated gemm matches the scalar reference") {
  std::mt19937_64 rng(2024);
  // Odd and even shapes to exercise vector tails.
  const std::size_t shapes[][3] = {{1, 1, 1}, {2, 3, 4},  {3, 3, 3},
                                   {5, 7, 3}, {8, 8, 8},  {9, 4, 11},
                                   {16, 16, 16}, {17, 13, 19}};
  for (const auto& s : shapes) {
    const std::size_t m = s[0], k = s[1], n = s[2];
    auto a = random_buf(rng, m * k);
    auto b = random_buf(rng, k * n);
    std::vector<cdouble> c_ref(m * n), c_fast(m * n);
    kn::scalar::gemm(m, k, n, a.data(), b.data(), c_ref.data());
    kn::set_backend(kn::Backend::Auto);
    kn::gemm(m, k, n, a.data(), b.data(), c_fast.data());
    CHECK(max_abs_diff(c_ref, c_fast) < 1e-13);
  }
}

TEST_CASE("accelerated add/sub/scale match the scalar reference") {
  std::mt19937_64 rng(77);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 15u, 16u, 17u, 64u, 129u}) {
    auto a = random_buf(rng, n);
    auto b = random_buf(rng, n);
    const cdouble s(0.37, -1.22);
    std::vector<cdouble> r1(n), r2(n);

    kn::scalar::add(n, a.data(), b.data(), r1.data());
    kn::add(n, a.data(), b.data(), r2.data());
    CHECK(max_abs_diff(r1, r2) < 1e-15);

    kn::scalar::sub(n, a.data(), b.data(), r1.data());
    kn::sub(n, a.data(), b.data(), r2.data());
    CHECK(max_abs_diff(r1, r2) < 1e-15);

    kn::scalar::scale(n, s, a.data(), r1.data());
    kn::scale(n, s, a.data(), r2.data());
    CHECK(max_abs_diff(r1, r2) < 1e-14);
  }
}

TEST_CASE("gemm handles aliasing-free accumulation with zero entries") {
  // Sparse-ish inputs: the scalar kernel skips zero multipliers, and the
  // accelerated kernels must produce the same result anyway.
  std::mt19937_64 rng(5);
  const std::size_t m = 6, k = 6, n = 6;
  auto a = random_buf(rng, m * k);
  auto b = random_buf(rng, k * n);
  for (std::size_t i = 0; i < a.size(); i += 3) a[i] = 0.0;
  std::vector<cdouble> c_ref(m * n), c_fast(m * n);
  kn::scalar::gemm(m, k, n, a.data(), b.data(), c_ref.data());
  kn::gemm(m, k, n, a.data(), b.data(), c_fast.data());
  CHECK(max_abs_diff(c_ref, c_fast) < 1e-13);
}
