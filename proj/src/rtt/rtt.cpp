#include "rtt/rtt.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "liegen/liegen.hpp"

namespace rtt {

namespace {

ComplexMatrix unit_entry(std::size_t d, std::size_t a, std::size_t b) {
  ComplexMatrix m(d, d);
  m.at(a, b) = cdouble{1.0, 0.0};
  return m;
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double v = 1.0;
  for (int i = 0; i < k; ++i) v = v * static_cast<double>(n - i) / (i + 1);
  return std::round(v);
}

// Signed labels in ascending order, matching the reversal pairing of the A
// operator: (-2,-1,0,1,2) for n = 5, (-3,-2,-1,1,2,3) for n = 6.
std::vector<int> signed_labels(int n) {
  std::vector<int> lab;
  const int top = n / 2;
  for (int q = -top; q <= top; ++q) {
    if (q == 0 && n % 2 == 0) continue;
    lab.push_back(q);
  }
  return lab;
}

void require_aux(const Monodromy& m, std::size_t d, const char* who) {
  if (m.aux_dim != d)
    throw RttError(std::string(who) + ": auxiliary dimension is " +
                   std::to_string(m.aux_dim) + ", expected " +
                   std::to_string(d));
}

}  // namespace

RMatrixSpec RMatrixSpec::rational_sun(int d) {
  if (d < 2) throw RttError("rational_sun: site dimension must be >= 2");
  const std::size_t dd = static_cast<std::size_t>(d);
  const ComplexMatrix P = liegen::permutation_op(dd);
  const ComplexMatrix id = ComplexMatrix::identity(dd * dd);
  RMatrixSpec spec;
  spec.family = "rational_sun(" + std::to_string(d) + ")";
  spec.site_dim = dd;
  spec.evaluate = [P, id](cdouble u) { return u * P + id; };
  return spec;
}

RMatrixSpec RMatrixSpec::rational_son(int n, cdouble xi) {
  const std::size_t dd = static_cast<std::size_t>(n);
  const ComplexMatrix P = liegen::permutation_op(dd);
  const ComplexMatrix A = liegen::a_n_op(n);  // throws for n outside {5, 6}
  const ComplexMatrix id = ComplexMatrix::identity(dd * dd);
  const double kappa = (n - 2) / 2.0;
  RMatrixSpec spec;
  spec.family = "rational_son(" + std::to_string(n) + ")";
  spec.site_dim = dd;
  spec.evaluate = [P, A, id, kappa, xi](cdouble u) {
    return (u * u) * P + (u * xi) * (A - id - kappa * P) +
           (kappa * xi * xi) * id;
  };
  return spec;
}

RMatrixSpec RMatrixSpec::son_form_3813(int n, cdouble alpha) {
  const std::size_t dd = static_cast<std::size_t>(n);
  const ComplexMatrix P = liegen::permutation_op(dd);
  const ComplexMatrix A = liegen::a_n_op(n);
  const ComplexMatrix id = ComplexMatrix::identity(dd * dd);
  const double kappa = (n - 2) / 2.0;
  RMatrixSpec spec;
  spec.family = "son_form_3813(" + std::to_string(n) + ")";
  spec.site_dim = dd;
  spec.evaluate = [P, A, id, kappa, alpha](cdouble u) {
    return (u * (u - kappa * alpha)) * P + (alpha * u) * A +
           (-u * alpha + kappa * alpha * alpha) * id;
  };
  return spec;
}

double ybe_residual(const RMatrixSpec& spec, cdouble u, cdouble v) {
  const std::size_t d = spec.site_dim;
  const ComplexMatrix id = ComplexMatrix::identity(d);
  auto r12 = [&](cdouble w) { return matcore::kron(spec.evaluate(w), id); };
  auto r23 = [&](cdouble w) { return matcore::kron(id, spec.evaluate(w)); };
  const ComplexMatrix lhs = r12(u - v) * r23(u) * r12(v);
  const ComplexMatrix rhs = r23(v) * r12(u) * r23(u - v);
  return (lhs - rhs).norm_max();
}

double son_element_table_diff(int n, cdouble xi, cdouble u) {
  const RMatrixSpec spec = RMatrixSpec::rational_son(n, xi);
  const std::vector<int> lab = signed_labels(n);
  const std::size_t d = static_cast<std::size_t>(n);
  ComplexMatrix lit(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t e = 0; e < d; ++e) {
          cdouble val{0.0, 0.0};
          if (lab[a] == lab[b] && lab[b] == lab[c]) val += u * u;
          cdouble lin{0.0, 0.0};
          if (lab[a] == -lab[b] && lab[c] == -lab[e]) lin += 1.0;
          if (a == c && b == e) lin -= 1.0;
          if (a == e && b == c) lin -= 1.5;
          val += u * xi * lin;
          if (a == c && b == e) val += 1.5 * xi * xi;
          lit.at(a * d + b, c * d + e) = val;
        }
  return (lit - spec.evaluate(u)).norm_max();
}

ComplexMatrix Monodromy::block(std::size_t n, std::size_t a,
                               std::size_t b) const {
  if (n < blocks.size()) return blocks[n][a][b];
  return ComplexMatrix(sites.dim(), sites.dim());
}

ComplexMatrix Monodromy::block_eval(cdouble u, std::size_t a,
                                    std::size_t b) const {
  if (u == cdouble{0.0, 0.0})
    throw RttError("monodromy evaluation requires u != 0");
  ComplexMatrix acc = blocks[0][a][b];
  cdouble pow{1.0, 0.0};
  for (std::size_t n = 1; n < blocks.size(); ++n) {
    pow /= u;
    acc = acc + pow * blocks[n][a][b];
  }
  return acc;
}

ComplexMatrix Monodromy::order_matrix(std::size_t n) const {
  const std::size_t D = sites.dim();
  ComplexMatrix out(aux_dim * D, aux_dim * D);
  for (std::size_t a = 0; a < aux_dim; ++a)
    for (std::size_t b = 0; b < aux_dim; ++b)
      out = out + matcore::kron(unit_entry(aux_dim, a, b), block(n, a, b));
  return out;
}

ComplexMatrix Monodromy::evaluate(cdouble u) const {
  const std::size_t D = sites.dim();
  ComplexMatrix out(aux_dim * D, aux_dim * D);
  for (std::size_t a = 0; a < aux_dim; ++a)
    for (std::size_t b = 0; b < aux_dim; ++b)
      out = out + matcore::kron(unit_entry(aux_dim, a, b), block_eval(u, a, b));
  return out;
}

Monodromy monodromy(std::size_t aux_dim, const TensorSpace& sites) {
  for (std::size_t i = 0; i < sites.sites(); ++i)
    if (sites.dims()[i] != aux_dim)
      throw RttError("monodromy: site " + std::to_string(i) +
                     " has dimension " + std::to_string(sites.dims()[i]) +
                     ", auxiliary space has " + std::to_string(aux_dim));
  const std::size_t d = aux_dim;
  const std::size_t N = sites.sites();
  const std::size_t D = sites.dim();

  Monodromy m;
  m.aux_dim = d;
  m.sites = sites;
  m.blocks.assign(
      N + 1, std::vector<std::vector<ComplexMatrix>>(
                 d, std::vector<ComplexMatrix>(d, ComplexMatrix(D, D))));
  for (std::size_t a = 0; a < d; ++a)
    m.blocks[0][a][a] = ComplexMatrix::identity(D);

  // Multiply by L_site = I + u^{-1} P_{aux,site} from the right; the (c,b)
  // auxiliary block of P_{aux,site} is the matrix unit E_bc at the site.
  for (std::size_t site = 0; site < N; ++site) {
    auto next = m.blocks;
    for (std::size_t n = 1; n <= N; ++n)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          ComplexMatrix acc = m.blocks[n][a][b];
          for (std::size_t c = 0; c < d; ++c)
            acc = acc + m.blocks[n - 1][a][c] *
                            sites.embed(unit_entry(d, b, c), site);
          next[n][a][b] = acc;
        }
    m.blocks = next;
  }
  return m;
}

double rtt_residual(const RMatrixSpec& spec, const Monodromy& mono, cdouble u,
                    cdouble v) {
  if (spec.site_dim != mono.aux_dim)
    throw RttError("rtt_residual: R-matrix site dimension differs from the "
                   "auxiliary dimension");
  if (u == cdouble{0.0, 0.0} || v == cdouble{0.0, 0.0})
    throw RttError("rtt_residual: spectral parameters must be nonzero");

  const std::size_t d = mono.aux_dim;
  const std::size_t D = mono.sites.dim();
  const ComplexMatrix idd = ComplexMatrix::identity(d);
  const ComplexMatrix idq = ComplexMatrix::identity(D);
  auto slot1 = [&](cdouble w) {
    ComplexMatrix out(d * d * D, d * d * D);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        out = out + matcore::kron(matcore::kron(unit_entry(d, a, b), idd),
                                  mono.block_eval(w, a, b));
    return out;
  };
  auto slot2 = [&](cdouble w) {
    ComplexMatrix out(d * d * D, d * d * D);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        out = out + matcore::kron(matcore::kron(idd, unit_entry(d, a, b)),
                                  mono.block_eval(w, a, b));
    return out;
  };
  const ComplexMatrix r12 = matcore::kron(spec.evaluate(u - v), idq);
  const ComplexMatrix lhs = r12 * slot1(u) * slot2(v);
  const ComplexMatrix rhs = slot1(v) * slot2(u) * r12;
  return (lhs - rhs).norm_max();
}

MonodromyRealization su2_from_monodromy(const Monodromy& mono) {
  require_aux(mono, 2, "su2_from_monodromy");
  auto cart = [](const std::vector<std::vector<ComplexMatrix>>& t) {
    std::vector<ComplexMatrix> out;
    out.push_back((t[1][0] + t[0][1]) * 0.5);
    out.push_back((t[1][0] - t[0][1]) * (cdouble{0.0, -0.5}));
    out.push_back((t[0][0] - t[1][1]) * 0.5);
    return out;
  };
  std::vector<std::vector<ComplexMatrix>> t1(2, std::vector<ComplexMatrix>(2));
  std::vector<std::vector<ComplexMatrix>> t2 = t1, t2c = t1;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      t1[a][b] = mono.block(1, a, b);
      t2[a][b] = mono.block(2, a, b);
    }
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      ComplexMatrix corr = t2[a][b];
      for (std::size_t c = 0; c < 2; ++c)
        corr = corr - 0.5 * (t1[a][c] * t1[c][b]);
      t2c[a][b] = corr;
    }
  MonodromyRealization r;
  r.level0 = cart(t1);
  r.level1 = cart(t2c);
  r.level1_raw = cart(t2);
  return r;
}

MonodromyRealization su3_from_monodromy(const Monodromy& mono) {
  require_aux(mono, 3, "su3_from_monodromy");
  auto cart = [](const std::vector<std::vector<ComplexMatrix>>& t) {
    const double s3 = std::sqrt(3.0);
    std::vector<ComplexMatrix> out;
    out.push_back((t[1][0] + t[0][1]) * 0.5);
    out.push_back((t[1][0] - t[0][1]) * (cdouble{0.0, -0.5}));
    out.push_back((t[0][0] - t[1][1]) * 0.5);
    out.push_back((t[2][0] + t[0][2]) * 0.5);
    out.push_back((t[2][0] - t[0][2]) * (cdouble{0.0, -0.5}));
    out.push_back((t[2][1] + t[1][2]) * 0.5);
    out.push_back((t[2][1] - t[1][2]) * (cdouble{0.0, -0.5}));
    out.push_back((t[0][0] + t[1][1] - 2.0 * t[2][2]) * (1.0 / (2.0 * s3)));
    return out;
  };
  std::vector<std::vector<ComplexMatrix>> t1(3, std::vector<ComplexMatrix>(3));
  std::vector<std::vector<ComplexMatrix>> t2 = t1, t2c = t1;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      t1[a][b] = mono.block(1, a, b);
      t2[a][b] = mono.block(2, a, b);
    }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      ComplexMatrix corr = t2[a][b];
      for (std::size_t c = 0; c < 3; ++c)
        corr = corr - 0.5 * (t1[a][c] * t1[c][b]);
      t2c[a][b] = corr;
    }
  MonodromyRealization r;
  r.level0 = cart(t1);
  r.level1 = cart(t2c);
  r.level1_raw = cart(t2);
  return r;
}

namespace {

// Coefficients of T(u - shift) as a series in u^{-1}:
// (u - k)^{-m} = sum_{n >= m} binom(n-1, n-m) k^{n-m} u^{-n}.
std::vector<std::vector<std::vector<ComplexMatrix>>> shifted_blocks(
    const Monodromy& mono, int shift, std::size_t nmax) {
  const std::size_t d = mono.aux_dim;
  const std::size_t D = mono.sites.dim();
  std::vector<std::vector<std::vector<ComplexMatrix>>> B(
      nmax + 1, std::vector<std::vector<ComplexMatrix>>(
                    d, std::vector<ComplexMatrix>(d, ComplexMatrix(D, D))));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      B[0][a][b] = mono.block(0, a, b);
      for (std::size_t n = 1; n <= nmax; ++n) {
        ComplexMatrix acc(D, D);
        const std::size_t mtop = std::min(n, mono.order());
        for (std::size_t m = 1; m <= mtop; ++m)
          acc = acc +
                (binom(static_cast<int>(n) - 1, static_cast<int>(n - m)) *
                 std::pow(static_cast<double>(shift),
                          static_cast<double>(n - m))) *
                    mono.block(m, a, b);
        B[n][a][b] = acc;
      }
    }
  return B;
}

}  // namespace

QdetResult qdet_su2(const Monodromy& mono) {
  require_aux(mono, 2, "qdet_su2");
  const std::size_t D = mono.sites.dim();
  const std::size_t nmax = mono.order() + 2;
  const auto A0 = shifted_blocks(mono, 0, nmax);
  const auto A1 = shifted_blocks(mono, 1, nmax);

  QdetResult q;
  for (std::size_t n = 0; n <= nmax; ++n) {
    ComplexMatrix acc(D, D);
    for (std::size_t k = 0; k <= n; ++k) {
      const std::size_t m = n - k;
      acc = acc + A0[k][0][0] * A1[m][1][1] - A0[k][0][1] * A1[m][1][0];
    }
    q.coeffs.push_back(acc);
  }

  const ComplexMatrix id = ComplexMatrix::identity(D);
  const ComplexMatrix t01 = mono.block(1, 0, 0) + mono.block(1, 1, 1);
  const ComplexMatrix t02 = mono.block(2, 0, 0) + mono.block(2, 1, 1);
  const auto gen = su2_from_monodromy(mono);
  ComplexMatrix isq(D, D);
  for (const auto& g : gen.level0) isq = isq + g * g;
  const ComplexMatrix corrected =
      t02 - isq + 0.5 * (t01 * (id + 0.5 * t01));
  const ComplexMatrix literal = t02 - isq + t01 * (id + 0.5 * t01);
  q.closed_c2_residual = (q.coeffs[2] - corrected).norm_fro();
  q.literal_c2_residual = (q.coeffs[2] - literal).norm_fro();
  return q;
}

QdetResult qdet_su3(const Monodromy& mono) {
  require_aux(mono, 3, "qdet_su3");
  const std::size_t D = mono.sites.dim();
  const std::size_t nmax = mono.order() + 2;
  const std::array<decltype(shifted_blocks(mono, 0, nmax)), 3> A = {
      shifted_blocks(mono, 0, nmax), shifted_blocks(mono, 1, nmax),
      shifted_blocks(mono, 2, nmax)};

  // All six column permutations with signs; rows carry shifts 0, 1, 2.
  const std::array<std::array<std::size_t, 3>, 6> perms = {{{0, 1, 2},
                                                            {1, 2, 0},
                                                            {2, 0, 1},
                                                            {0, 2, 1},
                                                            {2, 1, 0},
                                                            {1, 0, 2}}};
  const std::array<double, 6> sgn = {1.0, 1.0, 1.0, -1.0, -1.0, -1.0};

  QdetResult q;
  for (std::size_t n = 0; n <= nmax; ++n) {
    ComplexMatrix acc(D, D);
    for (std::size_t p = 0; p < 6; ++p)
      for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t m = 0; m + k <= n; ++m) {
          const std::size_t r = n - k - m;
          acc = acc + sgn[p] * (A[0][k][0][perms[p][0]] *
                                (A[1][m][1][perms[p][1]] *
                                 A[2][r][2][perms[p][2]]));
        }
    q.coeffs.push_back(acc);
  }

  const ComplexMatrix t01 =
      mono.block(1, 0, 0) + mono.block(1, 1, 1) + mono.block(1, 2, 2);
  const ComplexMatrix t02 =
      mono.block(2, 0, 0) + mono.block(2, 1, 1) + mono.block(2, 2, 2);
  const auto gen = su3_from_monodromy(mono);
  ComplexMatrix isq(D, D);
  for (const auto& g : gen.level0) isq = isq + g * g;
  const ComplexMatrix corrected =
      t02 + t01 + (1.0 / 3.0) * (t01 * t01) - isq;
  const ComplexMatrix literal = t02 + t01 + 2.0 * (t01 * t01) - isq;
  q.closed_c2_residual = (q.coeffs[2] - corrected).norm_fro();
  q.literal_c2_residual = (q.coeffs[2] - literal).norm_fro();
  return q;
}

ComplexMatrix hamiltonian_from_r(const RMatrixSpec& spec) {
  const ComplexMatrix r0 = spec.evaluate(cdouble{0.0, 0.0});
  ComplexMatrix r0inv(0, 0);
  try {
    r0inv = matcore::inverse(r0);
  } catch (const matcore::MatcoreError&) {
    throw RttError("hamiltonian_from_r: R(0) is singular for family " +
                   spec.family);
  }
  const double h = 1e-5;
  const ComplexMatrix deriv =
      (spec.evaluate(cdouble{h, 0.0}) - spec.evaluate(cdouble{-h, 0.0})) *
      (1.0 / (2.0 * h));
  return deriv * r0inv;
}

ComplexMatrix chain_hamiltonian(const RMatrixSpec& spec, std::size_t n_sites) {
  if (n_sites < 2)
    throw RttError("chain_hamiltonian: need at least two sites");
  const ComplexMatrix density = hamiltonian_from_r(spec);
  TensorSpace space(std::vector<std::size_t>(n_sites, spec.site_dim));
  ComplexMatrix h(space.dim(), space.dim());
  for (std::size_t i = 0; i + 1 < n_sites; ++i)
    h = h + space.embed_pair(density, i);
  return h;
}

}  // namespace rtt
