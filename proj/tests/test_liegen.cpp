#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "liegen/liegen.hpp"
#include "test_helpers.hpp"

using liegen::GeneratorSet;
using matcore::cdouble;
using matcore::ComplexMatrix;
using testutil::is_near;
using testutil::max_diff;

namespace {
const cdouble I(0.0, 1.0);

ComplexMatrix unit3(std::size_t r, std::size_t c) {
  ComplexMatrix m(3, 3);
  m.at(r, c) = 1.0;
  return m;
}
}  // namespace

TEST_CASE("spin matrices: spin-1/2 is half the Pauli set") {
  GeneratorSet su2 = liegen::spin_matrices(1);
  REQUIRE(su2.generators.size() == 3);
  CHECK(max_diff(su2.op("S1"), ComplexMatrix{{0.0, 0.5}, {0.5, 0.0}}) == 0.0);
  CHECK(max_diff(su2.op("S2"),
                 ComplexMatrix{{0.0, -0.5 * I}, {0.5 * I, 0.0}}) == 0.0);
  CHECK(max_diff(su2.op("S3"), ComplexMatrix{{0.5, 0.0}, {0.0, -0.5}}) == 0.0);
  // Structure tensor equals the totally antisymmetric epsilon (the one
  // hard-coded cross-check value allowed).
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double eps = 0.0;
        if ((a + 1) % 3 == b && (b + 1) % 3 == c) eps = 1.0;
        if ((c + 1) % 3 == b && (b + 1) % 3 == a) eps = -1.0;
        CHECK(is_near(su2.structure[a][b][c], eps, 1e-12));
      }
}

TEST_CASE("spin matrices: commutation, Casimir, descending diagonal") {
  for (int two_s : {1, 2, 3, 4}) {
    GeneratorSet gs = liegen::spin_matrices(two_s);
    const double s = 0.5 * two_s;
    const auto &s1 = gs.op("S1"), &s2 = gs.op("S2"), &s3 = gs.op("S3");
    CHECK(max_diff(matcore::commutator(s1, s2), I * s3) < 1e-13);
    CHECK(max_diff(matcore::commutator(s2, s3), I * s1) < 1e-13);
    CHECK(max_diff(matcore::commutator(s3, s1), I * s2) < 1e-13);
    // Casimir s(s+1) I.
    ComplexMatrix casimir = s1 * s1 + s2 * s2 + s3 * s3;
    CHECK(max_diff(casimir, ComplexMatrix::identity(gs.dim()) *
                                (s * (s + 1.0))) < 1e-13);
    // S3 diagonal descending.
    for (std::size_t k = 0; k + 1 < gs.dim(); ++k)
      CHECK(s3(k, k).real() > s3(k + 1, k + 1).real());
    CHECK(is_near(s3(0, 0), cdouble(s, 0.0)));
    CHECK(liegen::closure_residual(gs) < 1e-10);
  }
  CHECK_THROWS_AS(liegen::spin_matrices(0), liegen::LiegenError);
}

TEST_CASE("Gell-Mann set: trace normalization and structure constants") {
  GeneratorSet su3 = liegen::gell_mann();
  REQUIRE(su3.generators.size() == 8);

  // tr(lambda_a lambda_b) = 2 delta_ab over all 64 pairs.
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) {
      const cdouble t = (su3.op("lambda" + std::to_string(a)) *
                         su3.op("lambda" + std::to_string(b)))
                            .trace();
      CHECK(is_near(t, a == b ? cdouble(2.0, 0.0) : cdouble(0.0, 0.0), 1e-12));
    }

  CHECK(is_near(su3.structure[0][1][2], 1.0, 1e-12));                 // f123
  CHECK(is_near(su3.structure[3][4][7], std::sqrt(3.0) / 2, 1e-12));  // f458
  CHECK(liegen::closure_residual(su3) < 1e-10);

  // Antisymmetry in the first index pair is exact (same products, reversed
  // subtraction).
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        CHECK(su3.structure[a][b][c] == -su3.structure[b][a][c]);

  // Independent formula: f_abc = -(i/4) tr([lambda_a, lambda_b] lambda_c).
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        const cdouble t =
            (matcore::commutator(su3.op("lambda" + std::to_string(a + 1)),
                                 su3.op("lambda" + std::to_string(b + 1))) *
             su3.op("lambda" + std::to_string(c + 1)))
                .trace();
        CHECK(is_near((-I / 4.0 * t).real(), su3.structure[a][b][c], 1e-12));
        CHECK(std::abs((-I / 4.0 * t).imag()) < 1e-12);
      }

  // Jacobi identity contraction.
  double worst = 0.0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        for (int e = 0; e < 8; ++e) {
          double sum = 0.0;
          for (int d = 0; d < 8; ++d)
            sum += su3.structure[a][b][d] * su3.structure[d][c][e] +
                   su3.structure[b][c][d] * su3.structure[d][a][e] +
                   su3.structure[c][a][d] * su3.structure[d][b][e];
          worst = std::max(worst, std::abs(sum));
        }
  CHECK(worst < 1e-10);
}

TEST_CASE("Gell-Mann ladders are shifted matrix units") {
  GeneratorSet su3 = liegen::gell_mann();
  CHECK(max_diff(su3.op("I+"), unit3(0, 1)) < 1e-15);
  CHECK(max_diff(su3.op("I-"), unit3(1, 0)) < 1e-15);
  CHECK(max_diff(su3.op("U+"), unit3(1, 2)) < 1e-15);
  CHECK(max_diff(su3.op("U-"), unit3(2, 1)) < 1e-15);
  // V+ carries the opposite sign combination and lands in the lower corner.
  CHECK(max_diff(su3.op("V+"), unit3(2, 0)) < 1e-15);
  CHECK(max_diff(su3.op("V-"), unit3(0, 2)) < 1e-15);
  CHECK(max_diff(su3.op("V-"), su3.op("V+").adjoint()) < 1e-15);

  CHECK(max_diff(su3.op("I3"),
                 ComplexMatrix::diag({0.5, -0.5, 0.0})) < 1e-15);
  // Hypercharge and its rescaling back to F8.
  const double third = 1.0 / 3.0;
  CHECK(max_diff(su3.op("Y"),
                 ComplexMatrix::diag({third, third, -2.0 * third})) < 1e-15);
  CHECK(max_diff(su3.op("Y") * (std::sqrt(3.0) / 2.0), su3.op("I8")) < 1e-15);
  // The doubled-Cartan form diag(1,-1,0) is lambda3 itself.
  CHECK(max_diff(su3.op("lambda3"),
                 ComplexMatrix::diag({1.0, -1.0, 0.0})) < 1e-15);
}

TEST_CASE("so(n) generators: count, hermiticity, explicit commutator") {
  GeneratorSet so5 = liegen::so_n_generators(5);
  GeneratorSet so6 = liegen::so_n_generators(6);
  CHECK(so5.generators.size() == 10);
  CHECK(so6.generators.size() == 15);
  for (const auto& g : so5.generators) {
    CHECK(g.is_hermitian(1e-14));
    CHECK(is_near(g.trace(), cdouble(0.0, 0.0)));
  }
  CHECK(liegen::closure_residual(so5) < 1e-10);
  CHECK(liegen::closure_residual(so6) < 1e-10);
  CHECK_THROWS_AS(liegen::so_n_generators(4), liegen::LiegenError);

  // [L12, L23] against the delta-contraction form of the structure tensor:
  // C^{st}_{ij,kl} = d_ik d_js d_lt - d_il d_js d_kt - d_jk d_is d_lt
  //                + d_jl d_is d_kt, summed over all (s,t).
  auto lfull = [&](int a, int b) {  // 1-based, antisymmetric continuation
    ComplexMatrix m(5, 5);
    if (a != b) {
      m.at(a - 1, b - 1) = -I;
      m.at(b - 1, a - 1) = I;
    }
    return m;
  };
  const int i = 1, j = 2, k = 2, l = 3;
  ComplexMatrix rhs(5, 5);
  for (int s = 1; s <= 5; ++s)
    for (int t = 1; t <= 5; ++t) {
      const double c = (i == k && j == s && l == t ? 1.0 : 0.0) -
                       (i == l && j == s && k == t ? 1.0 : 0.0) -
                       (j == k && i == s && l == t ? 1.0 : 0.0) +
                       (j == l && i == s && k == t ? 1.0 : 0.0);
      if (c != 0.0) rhs = rhs + lfull(s, t) * (I * c);
    }
  CHECK(max_diff(matcore::commutator(so5.op("L12"), so5.op("L23")), rhs) <
        1e-14);
  // That contraction collapses to -i L13 here.
  CHECK(max_diff(rhs, -I * so5.op("L13")) < 1e-14);
}

TEST_CASE("so(5) Cartan-Weyl operators") {
  GeneratorSet cw = liegen::so5_cartan_weyl();
  REQUIRE(cw.generators.size() == 10);
  // Basis order (-2,-1,0,1,2): E3 = E_22 - E_-2,-2 -> diag(-1,0,0,0,1).
  CHECK(max_diff(cw.op("E3"),
                 ComplexMatrix::diag({-1.0, 0.0, 0.0, 0.0, 1.0})) == 0.0);
  CHECK(max_diff(cw.op("F3"),
                 ComplexMatrix::diag({0.0, -1.0, 0.0, 1.0, 0.0})) == 0.0);
  // Raising/lowering against the Cartans.
  CHECK(max_diff(matcore::commutator(cw.op("E3"), cw.op("E+")), cw.op("E+")) <
        1e-14);
  CHECK(max_diff(matcore::commutator(cw.op("F3"), cw.op("F+")), cw.op("F+")) <
        1e-14);
  // Ladder conjugacy.
  for (const char* base : {"E", "F", "U", "V"}) {
    const std::string p = std::string(base) + "+";
    const std::string m = std::string(base) + "-";
    CHECK(max_diff(cw.op(m), cw.op(p).adjoint()) == 0.0);
  }
  CHECK(cw.op("E3").is_hermitian(1e-14));
  CHECK(cw.op("F3").is_hermitian(1e-14));
  // No real structure tensor for a ladder basis.
  CHECK_THROWS_AS(liegen::closure_residual(cw), liegen::LiegenError);
}

TEST_CASE("so(5) auxiliary-matrix assembly from Cartan-Weyl entries") {
  // The single-site auxiliary matrix has the entry identity
  //   X_ab = E_{-a,-b} - E_{b,a} - (3/2) delta_ab
  // and arranging the Cartan-Weyl operators in the documented pattern must
  // reproduce every entry, rows and columns ordered by ascending label.
  GeneratorSet cw = liegen::so5_cartan_weyl();
  auto pos = [](int q) { return static_cast<std::size_t>(q + 2); };
  auto es = [&](int a, int b) {
    ComplexMatrix m(5, 5);
    m.at(pos(a), pos(b)) = 1.0;
    return m;
  };
  const ComplexMatrix zero(5, 5);
  const ComplexMatrix id = ComplexMatrix::identity(5);
  // Rows a = -2,-1,0,1,2; layout[(a+2)][(b+2)].
  const ComplexMatrix layout[5][5] = {
      {cw.op("E3"), cw.op("U+"), cw.op("E+"), cw.op("V+"), zero},
      {cw.op("U-"), cw.op("F3"), cw.op("F+"), zero, -cw.op("V+")},
      {cw.op("E-"), cw.op("F-"), zero, -cw.op("F+"), -cw.op("E+")},
      {cw.op("V-"), zero, -cw.op("F-"), -cw.op("F3"), -cw.op("U+")},
      {zero, -cw.op("V-"), -cw.op("E-"), -cw.op("U-"), -cw.op("E3")}};
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      ComplexMatrix x = es(-a, -b) - es(b, a);
      if (a == b) x = x - id * 1.5;
      ComplexMatrix expect = layout[a + 2][b + 2];
      if (a == b) expect = expect - id * 1.5;
      CHECK(max_diff(x, expect) == 0.0);
    }
}

TEST_CASE("signed basis change is unitary and pairs coordinates") {
  for (int n : {5, 6}) {
    ComplexMatrix b = liegen::signed_basis(n);
    CHECK(max_diff(b * b.adjoint(),
                   ComplexMatrix::identity(static_cast<std::size_t>(n))) <
          1e-14);
  }
  // Odd case: the 0 label sits on the last real coordinate.
  ComplexMatrix b5 = liegen::signed_basis(5);
  CHECK(is_near(b5(2, 4), cdouble(1.0, 0.0)));
}

TEST_CASE("permutation operator") {
  for (std::size_t d : {2u, 3u, 5u}) {
    ComplexMatrix p = liegen::permutation_op(d);
    CHECK(max_diff(p * p, ComplexMatrix::identity(d * d)) == 0.0);
    // Exact swap on every basis product vector.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) {
            const double expect = (i == l && j == k) ? 1.0 : 0.0;
            CHECK(p(i * d + j, k * d + l) == cdouble(expect, 0.0));
          }
  }

  // d=2: P = (I + sum sigma x sigma)/2.
  GeneratorSet su2 = liegen::spin_matrices(1);
  ComplexMatrix acc = ComplexMatrix::identity(4);
  for (const char* nm : {"S1", "S2", "S3"}) {
    ComplexMatrix sigma = su2.op(nm) * 2.0;
    acc = acc + matcore::kron(sigma, sigma);
  }
  CHECK(max_diff(liegen::permutation_op(2), acc * 0.5) < 1e-14);

  // d=3: P = (1/3) I + (1/2) sum lambda x lambda.
  GeneratorSet su3 = liegen::gell_mann();
  ComplexMatrix acc3 = ComplexMatrix::identity(9) * (1.0 / 3.0);
  for (int m = 1; m <= 8; ++m) {
    const ComplexMatrix& lam = su3.op("lambda" + std::to_string(m));
    acc3 = acc3 + matcore::kron(lam, lam) * 0.5;
  }
  CHECK(max_diff(liegen::permutation_op(3), acc3) < 1e-14);
}

TEST_CASE("pairing operator A") {
  for (int n : {5, 6}) {
    ComplexMatrix a = liegen::a_n_op(n);
    CHECK(max_diff(a * a, a * static_cast<double>(n)) < 1e-14);
    // Rank-one-style structure: row support only on reversed-pair indices.
    const std::size_t d = static_cast<std::size_t>(n);
    CHECK(is_near(a(0 * d + (d - 1), 2 * d + (d - 3)), cdouble(1.0, 0.0)));
    CHECK(is_near(a(0 * d + 0, 0 * d + 0), cdouble(0.0, 0.0)));
  }
  CHECK_THROWS_AS(liegen::a_n_op(4), liegen::LiegenError);
}

TEST_CASE("structure constants reject degenerate or skewed bases") {
  // Ladder pair E12, E21: tr(E12^2) = 0 -> degenerate trace form.
  ComplexMatrix e12(2, 2), e21(2, 2);
  e12.at(0, 1) = 1.0;
  e21.at(1, 0) = 1.0;
  CHECK_THROWS_AS(liegen::structure_constants({e12, e21}),
                  liegen::LiegenError);
  // Non-orthogonal pair: S3 and S3 + 0.1 S1.
  GeneratorSet su2 = liegen::spin_matrices(1);
  ComplexMatrix g1 = su2.op("S3");
  ComplexMatrix g2 = su2.op("S3") + su2.op("S1") * 0.1;
  CHECK_THROWS_AS(liegen::structure_constants({g1, g2}), liegen::LiegenError);
}
