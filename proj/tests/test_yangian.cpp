// Tests for the multi-site Yangian realizations: construction conventions,
// residual certification of the defining relations, the per-algebra reduced
// identities, co-product extension and the Haldane-Shastry chain.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "test_helpers.hpp"
#include "yangian/yangian.hpp"

using matcore::cdouble;
using matcore::ComplexMatrix;
using matcore::TensorSpace;
using testutil::is_near;
using testutil::max_diff;
using namespace yangian;

namespace {

const cdouble kI{0.0, 1.0};

// Antisymmetric staggered weights W_ij = (i/2) sgn(j - i).
std::vector<std::vector<cdouble>> staggered_w(std::size_t n) {
  std::vector<std::vector<cdouble>> w(n, std::vector<cdouble>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) w[i][j] = cdouble{0.0, j > i ? 0.5 : -0.5};
  return w;
}

}  // namespace

TEST_CASE("su2 realization: single site, weight schemes, named totals") {
  // One spin-1 site: level 1 is just mu * S.
  auto r1 = realize_su2({2}, {0.7}, WScheme::step(), 1.0);
  CHECK(r1.space.dim() == 3);
  for (int c = 0; c < 3; ++c)
    CHECK(max_diff(r1.level1[c], 0.7 * r1.level0.generators[c]) < 1e-15);

  // Step default for su2 is +1 above the diagonal.
  auto r2 = realize_su2({1, 1}, {0.0, 0.0}, WScheme::step(), 1.0);
  CHECK(r2.params.w[0][1] == cdouble{1.0, 0.0});
  CHECK(r2.params.w[1][0] == cdouble{-1.0, 0.0});
  CHECK(r2.level0.named.count("S+") == 1);
  CHECK(r2.level0.named.count("S-") == 1);
  auto r2m = realize_su2({1, 1}, {0.0, 0.0}, WScheme::step(-1.0), 1.0);
  CHECK(r2m.params.w[0][1] == cdouble{-1.0, 0.0});

  // Haldane-Shastry weights at N = 4: W_01 = i cot(-pi/4) = -i.
  auto r4 = realize_su2(std::vector<int>(4, 1), std::vector<double>(4, 0.0),
                        WScheme::haldane_shastry(), 1.0);
  CHECK(is_near(r4.params.w[0][1], cdouble{0.0, -1.0}, 1e-12));
  CHECK(is_near(r4.params.w[1][0], cdouble{0.0, 1.0}, 1e-12));
  CHECK(is_near(r4.params.w[0][2], cdouble{0.0, 0.0}, 1e-12));  // cot(pi/2)

  // Haldane-Shastry weights require spin-1/2 everywhere.
  CHECK_THROWS_AS(
      realize_su2({1, 2}, {0.0, 0.0}, WScheme::haldane_shastry(), 1.0),
      YangianError);
  // Explicit weights must be antisymmetric.
  std::vector<std::vector<cdouble>> bad_w = {
      {cdouble{0.0, 0.0}, cdouble{1.0, 0.0}},
      {cdouble{1.0, 0.0}, cdouble{0.0, 0.0}}};
  CHECK_THROWS_AS(
      realize_su2({1, 1}, {0.0, 0.0}, WScheme::explicit_matrix(bad_w), 1.0),
      YangianError);
}

TEST_CASE("su2 defining relations: valid realizations pass, corrupted fail") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  // Two spin-1/2 sites work for any real coupling and potentials.
  auto r = realize_su2({1, 1}, {dist(rng), dist(rng)}, WScheme::step(),
                       0.5 + dist(rng));
  auto rep = verify_defining(r, 1e-9);
  CHECK(rep.passed);
  CHECK(rep.residuals.at("level0_closure") < 1e-12);
  CHECK(rep.residuals.at("level1_covariance") < 1e-12);
  CHECK(rep.residuals.at("serre") < 1e-12);

  // Three spin-1/2 sites need the staggered imaginary weights.
  auto r3 = realize_su2({1, 1, 1}, {0.7, -0.2, 0.4},
                        WScheme::explicit_matrix(staggered_w(3)), 1.0);
  auto rep3 = verify_defining(r3, 1e-9);
  CHECK(rep3.passed);
  CHECK(rep3.residuals.at("serre") < 1e-12);
  // ... and the plain step weights break the quartic relation there.
  auto r3bad = realize_su2({1, 1, 1}, {0.7, -0.2, 0.4}, WScheme::step(), 1.0);
  CHECK(verify_defining(r3bad, 1e-9).residuals.at("serre") > 1e-3);

  // A single evaluation site passes trivially.
  auto r1 = realize_su2({3}, {1.7}, WScheme::step(), 1.0);
  auto rep1 = verify_defining(r1, 1e-9);
  CHECK(rep1.passed);
  CHECK(rep1.residuals.at("serre") < 1e-12);

  // Corrupting a level-1 generator must be caught by the covariance check.
  auto bad = r;
  bad.level1[2] = bad.level1[2] + 0.1 * bad.level0.generators[0];
  auto brep = verify_defining(bad, 1e-9);
  CHECK_FALSE(brep.passed);
  CHECK(brep.residuals.at("level1_covariance") > 0.05);
}

TEST_CASE("shifting level 1 by a level-0 multiple preserves the relations") {
  auto r = realize_su2({1, 1}, {0.4, -0.9}, WScheme::step(), 1.3);
  auto shifted = r;
  for (int c = 0; c < 3; ++c)
    shifted.level1[c] =
        shifted.level1[c] + cdouble{0.37, 0.0} * r.level0.generators[c];
  auto a = verify_defining(r, 1e-9);
  auto b = verify_defining(shifted, 1e-9);
  CHECK(b.passed);
  for (const auto& [key, val] : a.residuals)
    CHECK(std::abs(val - b.residuals.at(key)) < 1e-10);

  auto s3 = realize_su3(2, {0.9, -0.4}, WScheme::step(), 0.8);
  auto s3s = s3;
  for (int m = 0; m < 8; ++m)
    s3s.level1[m] =
        s3s.level1[m] + cdouble{-0.21, 0.0} * s3.level0.generators[m];
  auto a3 = verify_defining(s3, 1e-9);
  auto b3 = verify_defining(s3s, 1e-9);
  CHECK(b3.passed);
  for (const auto& [key, val] : a3.residuals)
    CHECK(std::abs(val - b3.residuals.at(key)) < 1e-10);
}

TEST_CASE("su3 realization: weight validation and h=0 structure") {
  // h = 0: level 1 is the plain weighted sum of site generators.
  auto r = realize_su3(2, {0.3, 1.1}, WScheme::step(), 0.0);
  const auto gm = liegen::gell_mann();
  TensorSpace sp({3, 3});
  for (int m = 0; m < 8; ++m) {
    ComplexMatrix expect = 0.3 * sp.embed(gm.generators[m], 0) +
                           1.1 * sp.embed(gm.generators[m], 1);
    CHECK(max_diff(r.level1[m], expect) < 1e-15);
  }
  // Step default for su3 is +1 below the diagonal.
  CHECK(r.params.w[0][1] == cdouble{-1.0, 0.0});
  CHECK(r.params.w[1][0] == cdouble{1.0, 0.0});
  CHECK(r.level0.named.count("I+") == 1);
  CHECK(r.level0.named.count("V-") == 1);
  CHECK(r.level0.named.count("I8") == 1);

  // The default step weights satisfy the triple condition at 3 sites.
  auto r3 = realize_su3(3, {0.0, 0.0, 0.0}, WScheme::step(), 0.25);
  CHECK(r3.space.dim() == 27);
  // An all-equal explicit weight set violates it.
  std::vector<std::vector<cdouble>> w3(3, std::vector<cdouble>(3));
  w3[0][1] = w3[1][2] = w3[2][0] = cdouble{1.0, 0.0};
  w3[1][0] = w3[2][1] = w3[0][2] = cdouble{-1.0, 0.0};
  CHECK_THROWS_AS(
      realize_su3(3, {0.0, 0.0, 0.0}, WScheme::explicit_matrix(w3), 0.25),
      YangianError);
}

TEST_CASE("su3 level 1: contraction build matches the ladder build") {
  const std::vector<std::vector<double>> mus = {{0.4, -1.1}, {0.4, -1.1, 0.6}};
  for (const auto& mu : mus) {
    const int n = static_cast<int>(mu.size());
    auto r = realize_su3(n, mu, WScheme::step(), 0.37);
    auto lad = su3_ladder_form_level1(n, mu, r.params.w, 0.37);
    auto fromf = su3_ladder_components(r.level1);
    for (const char* k : {"I+", "I-", "U+", "U-", "V+", "V-", "I3", "I8"})
      CHECK(max_diff(lad.at(k), fromf.at(k)) < 1e-10);
  }
}

TEST_CASE("su3 defining relations and the coupling window at three sites") {
  auto r = realize_su3(2, {0.9, -0.4}, WScheme::step(), 0.8);
  auto rep = verify_defining(r, 1e-9);
  CHECK(rep.passed);
  CHECK(rep.residuals.at("serre") < 1e-12);

  // Three fundamental sites certify only at h = +/- 1/4.
  auto r3 = realize_su3(3, {0.2, 0.5, -0.3}, WScheme::step(), 0.25);
  CHECK(verify_defining(r3, 1e-9).passed);
  auto r3bad = realize_su3(3, {0.2, 0.5, -0.3}, WScheme::step(), 0.5);
  CHECK(verify_defining(r3bad, 1e-9).residuals.at("serre") > 1e-3);
}

TEST_CASE("reduced su2 identity holds in the corrected form only") {
  auto r = realize_su2({1, 1}, {1.0, 1.0}, WScheme::step(), 2.0);
  auto rep = verify_simplified(r, 1e-9);
  CHECK(rep.passed);
  CHECK(rep.residuals.at("reduced_commutator") < 1e-12);
  CHECK(rep.info.at("printed_form_residual") > 0.01);
}

TEST_CASE("reduced su3 Cartan-pair identity at one and two sites") {
  auto r1 = realize_su3(1, {0.8}, WScheme::step(), 0.3);
  auto rep1 = verify_simplified(r1, 1e-9);
  CHECK(rep1.passed);
  CHECK(rep1.info.at("lhs_norm") < 1e-12);  // both sides vanish on one site

  auto r2 = realize_su3(2, {0.6, -1.2}, WScheme::step(), 0.7);
  CHECK(verify_simplified(r2, 1e-9).passed);
}

TEST_CASE("reduced so5 ladder identity with unit fitted scale") {
  auto r = realize_so_n_bilocal(5, 2);
  auto rep = verify_simplified(r, 1e-9);
  CHECK(rep.passed);
  CHECK(rep.residuals.at("cartan_pair_identity") < 1e-12);
  CHECK(is_near(rep.info.at("rhs_fitted_scale"), 1.0, 1e-9));
  CHECK(rep.info.at("lhs_norm") > 0.2);
}

TEST_CASE("reduced so6 pair-commutator identities") {
  auto rep = verify_simplified(realize_so_n_bilocal(6, 2), 1e-9);
  CHECK(rep.passed);
  for (const char* k :
       {"j12_j34_identity", "j12_j56_identity", "j34_j56_identity"}) {
    CHECK(rep.residuals.at(k) < 1e-12);
    CHECK(is_near(rep.info.at(std::string(k) + "_fitted_scale"), 1.0, 1e-6));
  }
  // The uncorrected third term list is off by far more than a global scale.
  CHECK(rep.info.at("j34_j56_printed_residual") > 0.1);
  CHECK(is_near(rep.info.at("j34_j56_printed_fitted_scale"), 6.0 / 19.0, 1e-6));
  CHECK(rep.info.at("j34_j56_printed_fit_residual") > 0.1);
}

TEST_CASE("so(n) bilocal realization: edges and the explicit two-site form") {
  CHECK_THROWS(realize_so_n_bilocal(4, 2));

  // One site: the bilocal sum is empty.
  auto r1 = realize_so_n_bilocal(5, 1);
  for (const auto& j : r1.level1) CHECK(j.norm_max() == 0.0);

  // Two sites: J_12 = (i/2) sum_c [I_1c(2) I_c2(1) - I_1c(1) I_c2(2)].
  auto r = realize_so_n_bilocal(5, 2);
  const auto gs = liegen::so_n_generators(5);
  TensorSpace sp({5, 5});
  auto pair_op = [&](int site, int a, int b) {  // 1-based pair, a != b
    const auto idx = [&](int p, int q) {
      return static_cast<std::size_t>((p - 1) * 5 - p * (p - 1) / 2 +
                                      (q - p - 1));
    };
    ComplexMatrix loc = a < b ? gs.generators[idx(a, b)]
                              : -gs.generators[idx(b, a)];
    return sp.embed(loc, static_cast<std::size_t>(site));
  };
  ComplexMatrix expect(25, 25);
  for (int c = 3; c <= 5; ++c)
    expect = expect + cdouble{0.0, 0.5} * (pair_op(1, 1, c) * pair_op(0, c, 2) -
                                           pair_op(0, 1, c) * pair_op(1, c, 2));
  CHECK(max_diff(r.level1[0], expect) < 1e-14);

  CHECK(verify_defining(r, 1e-9).passed);
  CHECK(verify_defining(realize_so_n_bilocal(6, 2), 1e-9).passed);
}

TEST_CASE("su2 co-product equals the staggered-weight two-site build") {
  auto a = realize_su2({1}, {0.7}, WScheme::step(), 1.0);
  auto b = realize_su2({1}, {-0.3}, WScheme::step(), 1.0);
  auto ab = coproduct_extend(a, b);
  auto direct = realize_su2({1, 1}, {0.7, -0.3},
                            WScheme::explicit_matrix(staggered_w(2)), 1.0);
  for (int c = 0; c < 3; ++c) {
    CHECK(max_diff(ab.level0.generators[c], direct.level0.generators[c]) <
          1e-14);
    CHECK(max_diff(ab.level1[c], direct.level1[c]) < 1e-14);
  }
  // Highest-weight action of the total S3 on |up, up>.
  CHECK(is_near(ab.level0.generators[2].at(0, 0), cdouble{1.0, 0.0}, 1e-14));
  CHECK(verify_defining(ab, 1e-9).passed);

  CHECK_THROWS_AS(
      coproduct_extend(a, realize_su3(1, {0.1}, WScheme::step(), 0.0)),
      YangianError);
}

TEST_CASE("co-product extension is coassociative") {
  auto a = realize_su2({1}, {0.5}, WScheme::step(), 1.0);
  auto b = realize_su2({1}, {-0.2}, WScheme::step(), 1.0);
  auto c = realize_su2({1}, {0.9}, WScheme::step(), 1.0);
  auto left = coproduct_extend(coproduct_extend(a, b), c);
  auto right = coproduct_extend(a, coproduct_extend(b, c));
  for (int m = 0; m < 3; ++m) {
    CHECK(max_diff(left.level0.generators[m], right.level0.generators[m]) <
          1e-12);
    CHECK(max_diff(left.level1[m], right.level1[m]) < 1e-12);
  }

  auto f1 = realize_su3(1, {0.4}, WScheme::step(), 0.0);
  auto f2 = realize_su3(1, {-1.3}, WScheme::step(), 0.0);
  auto f3 = realize_su3(1, {0.6}, WScheme::step(), 0.0);
  auto l3 = coproduct_extend(coproduct_extend(f1, f2), f3);
  auto r3 = coproduct_extend(f1, coproduct_extend(f2, f3));
  for (int m = 0; m < 8; ++m) {
    CHECK(max_diff(l3.level0.generators[m], r3.level0.generators[m]) < 1e-12);
    CHECK(max_diff(l3.level1[m], r3.level1[m]) < 1e-12);
  }
}

TEST_CASE("su3 co-product cross term has the closed ladder form") {
  auto a = realize_su3(1, {0.0}, WScheme::step(), 0.0);
  auto ab = coproduct_extend(a, a);
  // With mu = 0 on both sites the level-1 ladder is the pure cross term
  //   (1/2)(I+ x F3 - F3 x I+) + (1/4)(U- x V- - V- x U-).
  const auto gm = liegen::gell_mann();
  const ComplexMatrix& Ip = gm.op("I+");
  const ComplexMatrix& F3 = gm.op("I3");
  const ComplexMatrix& Um = gm.op("U-");
  const ComplexMatrix& Vm = gm.op("V-");
  using matcore::kron;
  ComplexMatrix cross = 0.5 * (kron(Ip, F3) - kron(F3, Ip)) +
                        0.25 * (kron(Um, Vm) - kron(Vm, Um));
  ComplexMatrix Jp = ab.level1[0] + kI * ab.level1[1];
  CHECK(max_diff(Jp, cross) < 1e-12);
}

TEST_CASE("Haldane-Shastry chain Hamiltonian commutes with both levels") {
  auto res3 = haldane_shastry_h2(3);
  CHECK(res3.report.passed);

  auto res4 = haldane_shastry_h2(4);
  CHECK(res4.report.passed);
  CHECK(res4.report.residuals.at("hermiticity") < 1e-12);
  CHECK(res4.report.residuals.at("level0_commutant") < 1e-12);
  CHECK(res4.report.residuals.at("level1_commutant") < 1e-8);

  // The exchange factor 2 (S_i . S_j + 1/4) is the transposition operator.
  const auto loc = liegen::spin_matrices(1);
  TensorSpace sp({2, 2, 2, 2});
  ComplexMatrix sdot(16, 16);
  for (int c = 0; c < 3; ++c)
    sdot = sdot + sp.embed(loc.generators[c], 1) * sp.embed(loc.generators[c], 2);
  ComplexMatrix p12 = 2.0 * (sdot + 0.25 * ComplexMatrix::identity(16));
  CHECK(max_diff(p12, sp.embed_pair(liegen::permutation_op(2), 1)) < 1e-14);

  CHECK_THROWS_AS(haldane_shastry_h2(2), YangianError);
}

TEST_CASE("defining relations certify across random parameter draws") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int draw = 0; draw < 5; ++draw) {
    auto r = realize_su2({1, 1}, {dist(rng), dist(rng)}, WScheme::step(),
                         1.5 * dist(rng));
    CHECK(verify_defining(r, 1e-9).passed);
  }
  for (int draw = 0; draw < 5; ++draw) {
    auto r =
        realize_su3(2, {dist(rng), dist(rng)}, WScheme::step(), dist(rng));
    CHECK(verify_defining(r, 1e-9).passed);
  }
}
