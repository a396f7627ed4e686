#include "yangian/yangian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace yangian {

namespace {

constexpr cdouble kI{0.0, 1.0};
const double kPi = std::acos(-1.0);

using matcore::commutator;
using matcore::kron;
using matcore::sym3;

using WMatrix = std::vector<std::vector<cdouble>>;

// Nonzero epsilon entries as (c, a, b, sign) with eps_{cab} = sign.
constexpr std::array<std::array<int, 4>, 6> kEpsEntries = {{
    {0, 1, 2, 1},
    {1, 2, 0, 1},
    {2, 0, 1, 1},
    {0, 2, 1, -1},
    {2, 1, 0, -1},
    {1, 0, 2, -1},
}};

double eps3(int a, int b, int c) {
  for (const auto& e : kEpsEntries)
    if (e[0] == a && e[1] == b && e[2] == c) return static_cast<double>(e[3]);
  return 0.0;
}

std::string spin_str(int two_s) {
  if (two_s % 2 == 0) return std::to_string(two_s / 2);
  return std::to_string(two_s) + "/2";
}

ComplexMatrix zeros_like_dim(std::size_t d) { return ComplexMatrix(d, d); }

WMatrix zero_w(std::size_t n) {
  return WMatrix(n, std::vector<cdouble>(n, cdouble{0.0, 0.0}));
}

// Resolve a WScheme into an explicit antisymmetric matrix for n sites.
WMatrix resolve_w(const WScheme& w, std::size_t n, double default_step_sign) {
  WMatrix out = zero_w(n);
  switch (w.kind) {
    case WScheme::Kind::Step: {
      const double s = w.step_sign.value_or(default_step_sign);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          out[i][j] = cdouble{s, 0.0};
          out[j][i] = cdouble{-s, 0.0};
        }
      break;
    }
    case WScheme::Kind::HaldaneShastry: {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (j == k) continue;
          const double arg =
              (static_cast<double>(j) - static_cast<double>(k)) * kPi /
              static_cast<double>(n);
          out[j][k] = kI / std::tan(arg);
        }
      break;
    }
    case WScheme::Kind::Explicit: {
      if (w.matrix.size() != n)
        throw YangianError("explicit W matrix has " +
                           std::to_string(w.matrix.size()) + " rows, expected " +
                           std::to_string(n));
      for (std::size_t i = 0; i < n; ++i) {
        if (w.matrix[i].size() != n)
          throw YangianError("explicit W matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
          if (w.matrix[i][j] != -w.matrix[j][i])
            throw YangianError(
                "explicit W matrix is not antisymmetric at (" +
                std::to_string(i) + "," + std::to_string(j) + ")");
      }
      out = w.matrix;
      break;
    }
  }
  return out;
}

// Real least-squares scale: argmin_s || lhs - s * rhs ||_F over real s.
double fit_scale(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  double num = 0.0, den = 0.0;
  const cdouble* l = lhs.data();
  const cdouble* r = rhs.data();
  const std::size_t n = lhs.rows() * lhs.cols();
  for (std::size_t k = 0; k < n; ++k) {
    num += std::real(std::conj(r[k]) * l[k]);
    den += std::norm(r[k]);
  }
  return den > 1e-20 ? num / den : 0.0;
}

void finalize(VerificationReport& rep, double tol) {
  rep.tol = tol;
  rep.passed = true;
  for (const auto& [k, v] : rep.residuals) {
    (void)k;
    if (!(v < tol)) rep.passed = false;
  }
}

// ---------------------------------------------------------------------------
// Defining-relation residuals
// ---------------------------------------------------------------------------

// Max Frobenius residual of [X_a, Y_b] = i f_abc Y_c over all (a, b).
double lie_residual(const liegen::Rank3& f,
                    const std::vector<ComplexMatrix>& X,
                    const std::vector<ComplexMatrix>& Y) {
  const std::size_t m = X.size();
  const std::size_t d = X[0].rows();
  double worst = 0.0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      ComplexMatrix rhs = zeros_like_dim(d);
      for (std::size_t c = 0; c < m; ++c)
        if (f[a][b][c] != 0.0) rhs = rhs + (kI * f[a][b][c]) * Y[c];
      worst = std::max(worst, (commutator(X[a], Y[b]) - rhs).norm_fro());
    }
  return worst;
}

struct FNonzeros {
  // per first index: list of (second, third, value)
  std::vector<std::vector<std::tuple<int, int, double>>> rows;
};

FNonzeros f_nonzeros(const liegen::Rank3& f) {
  const std::size_t m = f.size();
  FNonzeros nz;
  nz.rows.resize(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (f[a][b][c] != 0.0)
          nz.rows[a].emplace_back(static_cast<int>(b), static_cast<int>(c),
                                  f[a][b][c]);
  return nz;
}

// Cubic Serre residual, maximized over all ordered index triples:
//   [J_l, [J_m, I_n]] - [I_l, [J_m, J_n]] = a_{lmn,abg} {I_a, I_b, I_g},
//   a = (1/4!) C_la^s C_mb^t C_ng^p C_st^p with C = i f (so a is real).
double serre_cubic_residual(const liegen::Rank3& f,
                            const std::vector<ComplexMatrix>& I,
                            const std::vector<ComplexMatrix>& J) {
  const int m = static_cast<int>(I.size());
  const std::size_t d = I[0].rows();
  const FNonzeros nz = f_nonzeros(f);

  // Pair commutators for the left sides.
  std::vector<std::vector<ComplexMatrix>> JI(m, std::vector<ComplexMatrix>(m));
  std::vector<std::vector<ComplexMatrix>> JJ(m, std::vector<ComplexMatrix>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      JI[a][b] = commutator(J[a], I[b]);
      JJ[a][b] = commutator(J[a], J[b]);
    }

  // Pair products of level-0 generators feed the symmetrized triples.
  std::vector<std::vector<ComplexMatrix>> P(m, std::vector<ComplexMatrix>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) P[a][b] = I[a] * I[b];

  std::map<std::array<int, 3>, ComplexMatrix> sym_cache;
  auto sym3_sorted = [&](std::array<int, 3> key) -> const ComplexMatrix& {
    auto it = sym_cache.find(key);
    if (it != sym_cache.end()) return it->second;
    const int a = key[0], b = key[1], c = key[2];
    ComplexMatrix s = (P[a][b] + P[b][a]) * I[c] + (P[a][c] + P[c][a]) * I[b] +
                      (P[b][c] + P[c][b]) * I[a];
    return sym_cache.emplace(key, std::move(s)).first->second;
  };

  std::vector<double> acc(static_cast<std::size_t>(m) * m * m, 0.0);
  std::vector<int> touched;
  double worst = 0.0;
  for (int l = 0; l < m; ++l)
    for (int mm = 0; mm < m; ++mm)
      for (int nn = 0; nn < m; ++nn) {
        ComplexMatrix lhs =
            commutator(J[l], JI[mm][nn]) - commutator(I[l], JJ[mm][nn]);
        // Sparse assembly of the a-tensor slice for this (l, mm, nn).
        touched.clear();
        for (const auto& [al, s, v1] : nz.rows[l])
          for (const auto& [be, t, v2] : nz.rows[mm]) {
            const double v12 = v1 * v2;
            for (const auto& [ga, p, v3] : nz.rows[nn]) {
              const double v4 = f[s][t][p];
              if (v4 == 0.0) continue;
              const int idx = (al * m + be) * m + ga;
              if (acc[idx] == 0.0) touched.push_back(idx);
              acc[idx] += v12 * v3 * v4 / 24.0;
            }
          }
        // Fold duplicate orderings into sorted triples (sym3 is symmetric).
        std::map<std::array<int, 3>, double> merged;
        for (int idx : touched) {
          const double c = acc[idx];
          acc[idx] = 0.0;
          if (c == 0.0) continue;
          std::array<int, 3> key = {idx / (m * m), (idx / m) % m, idx % m};
          std::sort(key.begin(), key.end());
          merged[key] += c;
        }
        ComplexMatrix rhs = zeros_like_dim(d);
        for (const auto& [key, c] : merged)
          if (std::abs(c) > 1e-15) rhs = rhs + cdouble{c, 0.0} * sym3_sorted(key);
        worst = std::max(worst, (lhs - rhs).norm_fro());
      }
  return worst;
}

// Quartic sl2 substitute for the cubic relation, over all index quadruples:
//   [[J_l,J_m],[I_s,J_t]] + [[J_s,J_t],[I_l,J_m]]
//     = (a_{lmn,abg} C_stn + a_{stn,abg} C_lmn) {I_a, I_b, J_g},  C = i eps.
double serre_sl2_residual(const std::vector<ComplexMatrix>& I,
                          const std::vector<ComplexMatrix>& J) {
  const std::size_t d = I[0].rows();

  // a_{lmn,abg} = (1/24) sum_{s,t,p} eps_las eps_mbt eps_ngp eps_stp (real).
  static const auto a = [] {
    std::array<double, 729> t{};
    for (int l = 0; l < 3; ++l)
      for (int mm = 0; mm < 3; ++mm)
        for (int nn = 0; nn < 3; ++nn)
          for (int al = 0; al < 3; ++al)
            for (int be = 0; be < 3; ++be)
              for (int ga = 0; ga < 3; ++ga) {
                double v = 0.0;
                for (int s = 0; s < 3; ++s)
                  for (int tt = 0; tt < 3; ++tt)
                    for (int p = 0; p < 3; ++p)
                      v += eps3(l, al, s) * eps3(mm, be, tt) * eps3(nn, ga, p) *
                           eps3(s, tt, p);
                t[((((l * 3 + mm) * 3 + nn) * 3 + al) * 3 + be) * 3 + ga] =
                    v / 24.0;
              }
    return t;
  }();
  auto a6 = [&](int l, int mm, int nn, int al, int be, int ga) {
    return a[((((l * 3 + mm) * 3 + nn) * 3 + al) * 3 + be) * 3 + ga];
  };

  std::vector<std::vector<ComplexMatrix>> JJ(3, std::vector<ComplexMatrix>(3));
  std::vector<std::vector<ComplexMatrix>> IJ(3, std::vector<ComplexMatrix>(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      JJ[x][y] = commutator(J[x], J[y]);
      IJ[x][y] = commutator(I[x], J[y]);
    }
  std::vector<ComplexMatrix> iij(27);
  for (int al = 0; al < 3; ++al)
    for (int be = 0; be < 3; ++be)
      for (int ga = 0; ga < 3; ++ga)
        iij[(al * 3 + be) * 3 + ga] = sym3(I[al], I[be], J[ga]);

  double worst = 0.0;
  for (int l = 0; l < 3; ++l)
    for (int mm = 0; mm < 3; ++mm)
      for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t) {
          ComplexMatrix lhs =
              commutator(JJ[l][mm], IJ[s][t]) + commutator(JJ[s][t], IJ[l][mm]);
          ComplexMatrix rhs = zeros_like_dim(d);
          for (int al = 0; al < 3; ++al)
            for (int be = 0; be < 3; ++be)
              for (int ga = 0; ga < 3; ++ga) {
                cdouble coef{0.0, 0.0};
                for (int nu = 0; nu < 3; ++nu)
                  coef += a6(l, mm, nu, al, be, ga) * (kI * eps3(s, t, nu)) +
                          a6(s, t, nu, al, be, ga) * (kI * eps3(l, mm, nu));
                if (std::abs(coef) > 1e-15)
                  rhs = rhs + coef * iij[(al * 3 + be) * 3 + ga];
              }
          worst = std::max(worst, (lhs - rhs).norm_fro());
        }
  return worst;
}

// so(n) pair bookkeeping: lexicographic flat index of 1-based pair a < b.
std::size_t so_pair_index(int n, int a, int b) {
  return static_cast<std::size_t>((a - 1) * n - a * (a - 1) / 2 + (b - a - 1));
}

// Antisymmetric continuation X_(a,b) over a generator list in pair order.
ComplexMatrix so_pair_component(const std::vector<ComplexMatrix>& X, int n,
                                int a, int b) {
  if (a == b) return zeros_like_dim(X[0].rows());
  if (a < b) return X[so_pair_index(n, a, b)];
  return -X[so_pair_index(n, b, a)];
}

}  // namespace

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::Su2: return "su2";
    case Algebra::Su3: return "su3";
    case Algebra::So5: return "so5";
    case Algebra::So6: return "so6";
  }
  throw YangianError("unknown algebra tag");
}

WScheme WScheme::step() { return WScheme{}; }

WScheme WScheme::step(double sign) {
  WScheme w;
  w.step_sign = sign;
  return w;
}

WScheme WScheme::haldane_shastry() {
  WScheme w;
  w.kind = Kind::HaldaneShastry;
  return w;
}

WScheme WScheme::explicit_matrix(std::vector<std::vector<cdouble>> mat) {
  WScheme w;
  w.kind = Kind::Explicit;
  w.matrix = std::move(mat);
  return w;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

YangianRealization realize_su2(const std::vector<int>& two_s,
                               const std::vector<double>& mu, const WScheme& w,
                               double coupling) {
  const std::size_t n = two_s.size();
  if (n == 0) throw YangianError("realize_su2: need at least one site");
  if (mu.size() != n)
    throw YangianError("realize_su2: mu has " + std::to_string(mu.size()) +
                       " entries for " + std::to_string(n) + " sites");
  if (w.kind == WScheme::Kind::HaldaneShastry)
    for (int ts : two_s)
      if (ts != 1)
        throw YangianError(
            "realize_su2: haldane_shastry weights require spin-1/2 sites");

  std::vector<liegen::GeneratorSet> loc;
  std::vector<std::size_t> dims;
  loc.reserve(n);
  for (int ts : two_s) {
    loc.push_back(liegen::spin_matrices(ts));
    dims.push_back(static_cast<std::size_t>(ts) + 1);
  }
  TensorSpace space(dims);
  const std::size_t D = space.dim();
  const WMatrix W = resolve_w(w, n, +1.0);

  std::vector<std::vector<ComplexMatrix>> S(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c)
      S[i].push_back(space.embed(loc[i].generators[c], i));

  YangianRealization r;
  r.algebra = Algebra::Su2;
  r.space = space;
  r.level0.algebra_label = [&] {
    std::string s = "su2_total[";
    for (std::size_t i = 0; i < n; ++i)
      s += (i ? "," : "") + spin_str(two_s[i]);
    return s + "]";
  }();
  r.level0.index_names = {"S1", "S2", "S3"};
  r.level0.structure = loc[0].structure;
  for (int c = 0; c < 3; ++c) {
    ComplexMatrix tot = zeros_like_dim(D);
    for (std::size_t i = 0; i < n; ++i) tot = tot + S[i][c];
    r.level0.generators.push_back(tot);
  }
  r.level0.named["S+"] = r.level0.generators[0] + kI * r.level0.generators[1];
  r.level0.named["S-"] = r.level0.generators[0] - kI * r.level0.generators[1];

  for (int c = 0; c < 3; ++c) {
    ComplexMatrix jc = zeros_like_dim(D);
    for (std::size_t i = 0; i < n; ++i)
      if (mu[i] != 0.0) jc = jc + cdouble{mu[i], 0.0} * S[i][c];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (W[i][j] == cdouble{0.0, 0.0}) continue;
        for (const auto& e : kEpsEntries)
          if (e[0] == c)
            jc = jc + (coupling * W[i][j] * static_cast<double>(e[3])) *
                          (S[i][e[1]] * S[j][e[2]]);
      }
    r.level1.push_back(jc);
  }
  r.params = {mu, coupling, W};
  return r;
}

std::vector<ComplexMatrix> su3_f_form_level1(
    const std::vector<std::vector<ComplexMatrix>>& site_gens,
    const std::vector<double>& mu,
    const std::vector<std::vector<cdouble>>& w, double h) {
  const std::size_t n = site_gens.size();
  if (n == 0 || mu.size() != n || w.size() != n)
    throw YangianError("su3_f_form_level1: inconsistent site counts");
  for (const auto& g : site_gens)
    if (g.size() != 8)
      throw YangianError("su3_f_form_level1: each site needs 8 generators");
  const liegen::Rank3 f = liegen::gell_mann().structure;
  const std::size_t D = site_gens[0][0].rows();

  std::vector<ComplexMatrix> J;
  J.reserve(8);
  for (int m = 0; m < 8; ++m) {
    ComplexMatrix jm = zeros_like_dim(D);
    for (std::size_t i = 0; i < n; ++i)
      if (mu[i] != 0.0) jm = jm + cdouble{mu[i], 0.0} * site_gens[i][m];
    for (int nu = 0; nu < 8; ++nu)
      for (int la = 0; la < 8; ++la) {
        if (f[m][nu][la] == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j || w[i][j] == cdouble{0.0, 0.0}) continue;
            jm = jm - (kI * h * f[m][nu][la] * w[i][j]) *
                          (site_gens[i][nu] * site_gens[j][la]);
          }
      }
    J.push_back(jm);
  }
  return J;
}

std::map<std::string, ComplexMatrix> su3_ladder_components(
    const std::vector<ComplexMatrix>& cart) {
  if (cart.size() != 8)
    throw YangianError("su3_ladder_components: need 8 Cartesian components");
  std::map<std::string, ComplexMatrix> out;
  out["I+"] = cart[0] + kI * cart[1];
  out["I-"] = cart[0] - kI * cart[1];
  out["U+"] = cart[5] + kI * cart[6];
  out["U-"] = cart[5] - kI * cart[6];
  out["V+"] = cart[3] - kI * cart[4];
  out["V-"] = cart[3] + kI * cart[4];
  out["I3"] = cart[2];
  out["I8"] = (2.0 / std::sqrt(3.0)) * cart[7];
  return out;
}

std::map<std::string, ComplexMatrix> su3_ladder_form_level1(
    int n_sites, const std::vector<double>& mu,
    const std::vector<std::vector<cdouble>>& w, double h) {
  const std::size_t n = static_cast<std::size_t>(n_sites);
  if (n == 0 || mu.size() != n || w.size() != n)
    throw YangianError("su3_ladder_form_level1: inconsistent site counts");
  const liegen::GeneratorSet gm = liegen::gell_mann();
  TensorSpace space(std::vector<std::size_t>(n, 3));
  const std::size_t D = space.dim();

  // Embedded ladder operators per site; I3 is the halved Cartan, Y = (2/v3)F8.
  const std::array<const char*, 8> keys = {"I+", "I-", "U+", "U-",
                                           "V+", "V-", "I3", "Y"};
  std::vector<std::map<std::string, ComplexMatrix>> o(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const char* k : keys) o[i][k] = space.embed(gm.op(k), i);

  auto bilocal = [&](auto term) {
    ComplexMatrix m = zeros_like_dim(D);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && w[i][j] != cdouble{0.0, 0.0})
          m = m + w[i][j] * term(i, j);
    return m;
  };
  auto musum = [&](const char* k) {
    ComplexMatrix m = zeros_like_dim(D);
    for (std::size_t i = 0; i < n; ++i)
      if (mu[i] != 0.0) m = m + cdouble{mu[i], 0.0} * o[i][k];
    return m;
  };

  std::map<std::string, ComplexMatrix> out;
  for (int sg = +1; sg >= -1; sg -= 2) {
    const std::string s = sg > 0 ? "+" : "-";
    const std::string t = sg > 0 ? "-" : "+";
    out["I" + s] =
        musum(("I" + s).c_str()) +
        cdouble{-sg * 2.0 * h, 0.0} * bilocal([&](std::size_t i, std::size_t j) {
          return o[i]["I" + s] * o[j]["I3"] +
                 cdouble{0.5, 0.0} * (o[i]["U" + t] * o[j]["V" + t]);
        });
    out["U" + s] =
        musum(("U" + s).c_str()) +
        cdouble{sg * h, 0.0} * bilocal([&](std::size_t i, std::size_t j) {
          return o[i]["U" + s] * (o[j]["I3"] - cdouble{1.5, 0.0} * o[j]["Y"]) +
                 o[i]["I" + t] * o[j]["V" + t];
        });
    out["V" + s] =
        musum(("V" + s).c_str()) +
        cdouble{sg * h, 0.0} * bilocal([&](std::size_t i, std::size_t j) {
          return o[i]["V" + s] * (o[j]["I3"] + cdouble{1.5, 0.0} * o[j]["Y"]) +
                 o[i]["U" + t] * o[j]["I" + t];
        });
  }
  out["I3"] = musum("I3") +
              cdouble{h, 0.0} * bilocal([&](std::size_t i, std::size_t j) {
                return o[i]["I+"] * o[j]["I-"] -
                       cdouble{0.5, 0.0} * (o[i]["U+"] * o[j]["U-"] +
                                            o[i]["V+"] * o[j]["V-"]);
              });
  out["I8"] = musum("Y") +
              cdouble{h, 0.0} * bilocal([&](std::size_t i, std::size_t j) {
                return o[i]["U+"] * o[j]["U-"] - o[i]["V+"] * o[j]["V-"];
              });
  return out;
}

YangianRealization realize_su3(int n_sites, const std::vector<double>& mu,
                               const WScheme& w, double h) {
  if (n_sites < 1) throw YangianError("realize_su3: need at least one site");
  const std::size_t n = static_cast<std::size_t>(n_sites);
  if (mu.size() != n)
    throw YangianError("realize_su3: mu has " + std::to_string(mu.size()) +
                       " entries for " + std::to_string(n) + " sites");
  const WMatrix W = resolve_w(w, n, -1.0);  // default step: +1 for i > j
  // Site-triple consistency condition on the weights.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const cdouble delta =
            W[i][j] * W[j][k] + W[j][k] * W[k][i] + W[k][i] * W[i][j];
        if (std::abs(delta + 1.0) > 1e-9) {
          std::ostringstream msg;
          msg << "realize_su3: weight triple condition violated at sites ("
              << i << "," << j << "," << k << "): got " << delta.real();
          if (delta.imag() != 0.0) msg << "+" << delta.imag() << "i";
          msg << ", need -1";
          throw YangianError(msg.str());
        }
      }

  const liegen::GeneratorSet gm = liegen::gell_mann();
  TensorSpace space(std::vector<std::size_t>(n, 3));
  const std::size_t D = space.dim();
  std::vector<std::vector<ComplexMatrix>> F(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int m = 0; m < 8; ++m)
      F[i].push_back(space.embed(gm.generators[m], i));

  YangianRealization r;
  r.algebra = Algebra::Su3;
  r.space = space;
  r.level0.algebra_label =
      "su3_total[" + std::to_string(n) + " fundamental sites]";
  r.level0.index_names = gm.index_names;
  r.level0.structure = gm.structure;
  for (int m = 0; m < 8; ++m) {
    ComplexMatrix tot = zeros_like_dim(D);
    for (std::size_t i = 0; i < n; ++i) tot = tot + F[i][m];
    r.level0.generators.push_back(tot);
  }
  for (auto& [k, v] : su3_ladder_components(r.level0.generators))
    r.level0.named[k] = v;
  r.level0.named["Y"] = r.level0.named["I8"];
  r.level1 = su3_f_form_level1(F, mu, W, h);
  r.params = {mu, h, W};
  return r;
}

YangianRealization realize_so_n_bilocal(int n, int n_sites) {
  if (n_sites < 1)
    throw YangianError("realize_so_n_bilocal: need at least one site");
  const liegen::GeneratorSet gs = liegen::so_n_generators(n);  // throws n!=5,6
  const std::size_t ns = static_cast<std::size_t>(n_sites);
  const std::size_t m = gs.size();
  TensorSpace space(
      std::vector<std::size_t>(ns, static_cast<std::size_t>(n)));
  const std::size_t D = space.dim();

  std::vector<std::vector<ComplexMatrix>> L(ns);
  for (std::size_t x = 0; x < ns; ++x)
    for (std::size_t k = 0; k < m; ++k)
      L[x].push_back(space.embed(gs.generators[k], x));

  YangianRealization r;
  r.algebra = n == 5 ? Algebra::So5 : Algebra::So6;
  r.space = space;
  r.level0.algebra_label = "so" + std::to_string(n) + "_total[" +
                           std::to_string(ns) + " vector sites]";
  r.level0.index_names = gs.index_names;
  r.level0.structure = gs.structure;
  for (std::size_t k = 0; k < m; ++k) {
    ComplexMatrix tot = zeros_like_dim(D);
    for (std::size_t x = 0; x < ns; ++x) tot = tot + L[x][k];
    r.level0.generators.push_back(tot);
  }

  // J_ab = (i/2) sum_{x != y} sgn(x - y) sum_{c != a,b} I_ac(x) I_cb(y).
  auto site_comp = [&](std::size_t x, int p, int q) {
    return so_pair_component(L[x], n, p, q);
  };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      ComplexMatrix jab = zeros_like_dim(D);
      for (std::size_t x = 0; x < ns; ++x)
        for (std::size_t y = 0; y < ns; ++y) {
          if (x == y) continue;
          const double sgn = x > y ? 1.0 : -1.0;
          for (int c = 1; c <= n; ++c) {
            if (c == a || c == b) continue;
            jab = jab + (cdouble{0.0, 0.5} * sgn) *
                            (site_comp(x, a, c) * site_comp(y, c, b));
          }
        }
      r.level1.push_back(jab);
    }

  r.params.mu.assign(ns, 0.0);
  r.params.coupling = 1.0;
  r.params.w = zero_w(ns);
  for (std::size_t x = 0; x < ns; ++x)
    for (std::size_t y = 0; y < ns; ++y)
      if (x != y) r.params.w[x][y] = cdouble{0.0, x > y ? 0.5 : -0.5};
  return r;
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

VerificationReport verify_defining(const YangianRealization& r, double tol) {
  if (r.level0.structure.empty())
    throw YangianError("verify_defining: realization lacks structure constants");
  const auto& I = r.level0.generators;
  const auto& J = r.level1;
  if (I.size() != J.size())
    throw YangianError("verify_defining: level-0/level-1 size mismatch");

  VerificationReport rep;
  rep.name = "defining_relations:" + r.level0.algebra_label;
  rep.residuals["level0_closure"] = lie_residual(r.level0.structure, I, I);
  rep.residuals["level1_covariance"] = lie_residual(r.level0.structure, I, J);
  if (r.algebra == Algebra::Su2)
    rep.residuals["serre"] = serre_sl2_residual(I, J);
  else
    rep.residuals["serre"] = serre_cubic_residual(r.level0.structure, I, J);
  finalize(rep, tol);
  return rep;
}

namespace {

VerificationReport simplified_su2(const YangianRealization& r, double tol) {
  const auto& I = r.level0.generators;
  const auto& J = r.level1;
  const ComplexMatrix Jp = J[0] + kI * J[1];
  const ComplexMatrix Jm = J[0] - kI * J[1];
  const ComplexMatrix Ip = I[0] + kI * I[1];
  const ComplexMatrix Im = I[0] - kI * I[1];
  const ComplexMatrix lhs = commutator(J[2], commutator(Jp, Jm));
  const ComplexMatrix rhs = (Jm * Ip - Im * Jp) * I[2];
  const ComplexMatrix printed = (Jm * Jp - Im * Jp) * I[2];

  VerificationReport rep;
  rep.name = "reduced_identity:" + r.level0.algebra_label;
  rep.residuals["reduced_commutator"] = (lhs - rhs).norm_fro();
  rep.info["printed_form_residual"] = (lhs - printed).norm_fro();
  rep.info["rhs_fitted_scale"] = fit_scale(lhs, rhs);
  rep.info["lhs_norm"] = lhs.norm_fro();
  finalize(rep, tol);
  return rep;
}

VerificationReport simplified_su3(const YangianRealization& r, double tol) {
  const auto lad0 = su3_ladder_components(r.level0.generators);
  const auto& J = r.level1;
  const ComplexMatrix lhs =
      commutator((2.0 / std::sqrt(3.0)) * J[7], J[2]);
  const ComplexMatrix rhs =
      cdouble{1.0 / 6.0, 0.0} *
      (sym3(lad0.at("I+"), lad0.at("U+"), lad0.at("V+")) -
       sym3(lad0.at("I-"), lad0.at("U-"), lad0.at("V-")));

  VerificationReport rep;
  rep.name = "reduced_identity:" + r.level0.algebra_label;
  rep.residuals["cartan_pair_identity"] = (lhs - rhs).norm_fro();
  rep.info["rhs_fitted_scale"] = fit_scale(lhs, rhs);
  rep.info["lhs_norm"] = lhs.norm_fro();
  finalize(rep, tol);
  return rep;
}

VerificationReport simplified_so5(const YangianRealization& r, double tol) {
  const liegen::GeneratorSet cw = liegen::so5_cartan_weyl();
  const liegen::GeneratorSet loc = liegen::so_n_generators(5);
  const ComplexMatrix B = liegen::signed_basis(5);
  const ComplexMatrix Bd = B.adjoint();

  // Expand each ladder operator over the conjugated generator basis
  // (orthogonal with tr(L L) = 2), then lift the coefficients to the chain.
  const std::size_t m = loc.size();
  std::vector<ComplexMatrix> Ls;
  for (std::size_t a = 0; a < m; ++a) Ls.push_back(B * loc.generators[a] * Bd);
  std::map<std::string, ComplexMatrix> lv0, lv1;
  const std::size_t D = r.level0.generators[0].rows();
  for (std::size_t k = 0; k < cw.size(); ++k) {
    ComplexMatrix recon(5, 5);
    ComplexMatrix at0 = zeros_like_dim(D);
    ComplexMatrix at1 = zeros_like_dim(D);
    for (std::size_t a = 0; a < m; ++a) {
      const cdouble c = (cw.generators[k] * Ls[a]).trace() / 2.0;
      if (std::abs(c) < 1e-14) continue;
      recon = recon + c * Ls[a];
      at0 = at0 + c * r.level0.generators[a];
      at1 = at1 + c * r.level1[a];
    }
    if ((recon - cw.generators[k]).norm_fro() > 1e-10)
      throw YangianError(
          "simplified so5: ladder operator fails to expand over the algebra");
    lv0[cw.index_names[k]] = at0;
    lv1[cw.index_names[k]] = at1;
  }

  const ComplexMatrix lhs = commutator(lv1.at("E3"), lv1.at("F3"));
  const ComplexMatrix rhs =
      cdouble{1.0 / 24.0, 0.0} *
      (sym3(lv0.at("U-"), lv0.at("E+"), lv0.at("F-")) -
       sym3(lv0.at("U+"), lv0.at("E-"), lv0.at("F+")) -
       sym3(lv0.at("V+"), lv0.at("E-"), lv0.at("F-")) +
       sym3(lv0.at("V-"), lv0.at("E+"), lv0.at("F+")));

  VerificationReport rep;
  rep.name = "reduced_identity:" + r.level0.algebra_label;
  rep.residuals["cartan_pair_identity"] = (lhs - rhs).norm_fro();
  rep.info["rhs_fitted_scale"] = fit_scale(lhs, rhs);
  rep.info["lhs_norm"] = lhs.norm_fro();
  finalize(rep, tol);
  return rep;
}

// Term list entry for the so6 pair-commutator identities: sign and three
// 1-based index pairs feeding sgn * sym3(I_p1, I_p2, I_p3).
struct So6Term {
  double sign;
  std::array<int, 2> p1, p2, p3;
};

ComplexMatrix so6_terms_rhs(const std::vector<ComplexMatrix>& I,
                            const std::vector<So6Term>& terms) {
  ComplexMatrix rhs = zeros_like_dim(I[0].rows());
  for (const auto& t : terms)
    rhs = rhs + (kI / 24.0 * t.sign) *
                    sym3(so_pair_component(I, 6, t.p1[0], t.p1[1]),
                         so_pair_component(I, 6, t.p2[0], t.p2[1]),
                         so_pair_component(I, 6, t.p3[0], t.p3[1]));
  return rhs;
}

VerificationReport simplified_so6(const YangianRealization& r, double tol) {
  const auto& I = r.level0.generators;
  const auto& J = r.level1;
  auto pj = [&](int a, int b) { return so_pair_component(J, 6, a, b); };

  const std::vector<So6Term> t_12_34 = {
      {+1, {2, 3}, {1, 6}, {4, 6}}, {+1, {2, 3}, {1, 5}, {4, 5}},
      {+1, {1, 4}, {2, 5}, {3, 5}}, {+1, {1, 4}, {2, 6}, {3, 6}},
      {-1, {1, 3}, {2, 6}, {4, 6}}, {-1, {1, 3}, {2, 5}, {4, 5}},
      {-1, {2, 4}, {1, 5}, {3, 5}}, {-1, {2, 4}, {1, 6}, {3, 6}},
  };
  const std::vector<So6Term> t_12_56 = {
      {+1, {1, 5}, {2, 3}, {3, 6}}, {+1, {1, 5}, {2, 4}, {4, 6}},
      {+1, {2, 6}, {1, 3}, {3, 5}}, {+1, {2, 6}, {1, 4}, {4, 5}},
      {-1, {2, 5}, {1, 3}, {3, 6}}, {-1, {2, 5}, {1, 4}, {4, 6}},
      {-1, {1, 6}, {2, 3}, {3, 5}}, {-1, {1, 6}, {2, 4}, {4, 5}},
  };
  // Index-relabeled completion of the third identity (the transcription in
  // the source lists pairs inconsistent with the first two; the corrected
  // list is its image under the site relabeling 1..6 -> 3,4,5,6,1,2).
  const std::vector<So6Term> t_34_56 = {
      {+1, {4, 5}, {3, 2}, {6, 2}}, {+1, {4, 5}, {3, 1}, {6, 1}},
      {+1, {3, 6}, {4, 1}, {5, 1}}, {+1, {3, 6}, {4, 2}, {5, 2}},
      {-1, {3, 5}, {4, 2}, {6, 2}}, {-1, {3, 5}, {4, 1}, {6, 1}},
      {-1, {4, 6}, {3, 1}, {5, 1}}, {-1, {4, 6}, {3, 2}, {5, 2}},
  };
  const std::vector<So6Term> t_34_56_printed = {
      {+1, {4, 5}, {1, 3}, {1, 6}}, {+1, {4, 5}, {2, 3}, {2, 6}},
      {+1, {3, 6}, {1, 4}, {1, 6}}, {+1, {3, 6}, {2, 4}, {2, 6}},
      {-1, {3, 5}, {1, 4}, {1, 6}}, {-1, {3, 5}, {2, 4}, {2, 6}},
      {-1, {4, 6}, {1, 3}, {1, 6}}, {-1, {4, 6}, {2, 3}, {2, 6}},
  };

  VerificationReport rep;
  rep.name = "reduced_identity:" + r.level0.algebra_label;
  const struct {
    const char* key;
    ComplexMatrix lhs;
    const std::vector<So6Term>* terms;
  } cases[] = {
      {"j12_j34_identity", commutator(pj(1, 2), pj(3, 4)), &t_12_34},
      {"j12_j56_identity", commutator(pj(1, 2), pj(5, 6)), &t_12_56},
      {"j34_j56_identity", commutator(pj(3, 4), pj(5, 6)), &t_34_56},
  };
  for (const auto& c : cases) {
    const ComplexMatrix rhs = so6_terms_rhs(I, *c.terms);
    rep.residuals[c.key] = (c.lhs - rhs).norm_fro();
    rep.info[std::string(c.key) + "_fitted_scale"] = fit_scale(c.lhs, rhs);
  }
  const ComplexMatrix lhs3 = commutator(pj(3, 4), pj(5, 6));
  const ComplexMatrix rhs_printed = so6_terms_rhs(I, t_34_56_printed);
  rep.info["j34_j56_printed_residual"] = (lhs3 - rhs_printed).norm_fro();
  const double s = fit_scale(lhs3, rhs_printed);
  rep.info["j34_j56_printed_fitted_scale"] = s;
  rep.info["j34_j56_printed_fit_residual"] =
      (lhs3 - cdouble{s, 0.0} * rhs_printed).norm_fro();
  finalize(rep, tol);
  return rep;
}

}  // namespace

VerificationReport verify_simplified(const YangianRealization& r, double tol) {
  switch (r.algebra) {
    case Algebra::Su2: return simplified_su2(r, tol);
    case Algebra::Su3: return simplified_su3(r, tol);
    case Algebra::So5: return simplified_so5(r, tol);
    case Algebra::So6: return simplified_so6(r, tol);
  }
  throw YangianError("verify_simplified: unsupported algebra");
}

YangianRealization coproduct_extend(const YangianRealization& r1,
                                    const YangianRealization& r2) {
  if (r1.algebra != r2.algebra)
    throw YangianError("coproduct_extend: mixed algebras " +
                       algebra_name(r1.algebra) + " and " +
                       algebra_name(r2.algebra));
  const std::size_t m = r1.level0.generators.size();
  if (m != r2.level0.generators.size())
    throw YangianError("coproduct_extend: generator count mismatch");

  std::vector<std::size_t> dims = r1.space.dims();
  dims.insert(dims.end(), r2.space.dims().begin(), r2.space.dims().end());
  TensorSpace space(std::move(dims));
  const ComplexMatrix id1 = ComplexMatrix::identity(r1.space.dim());
  const ComplexMatrix id2 = ComplexMatrix::identity(r2.space.dim());
  const auto& f = r1.level0.structure;

  YangianRealization out;
  out.algebra = r1.algebra;
  out.space = space;
  out.level0.algebra_label =
      r1.level0.algebra_label + "(x)" + r2.level0.algebra_label;
  out.level0.index_names = r1.level0.index_names;
  out.level0.structure = f;
  for (std::size_t a = 0; a < m; ++a)
    out.level0.generators.push_back(
        kron(r1.level0.generators[a], id2) + kron(id1, r2.level0.generators[a]));
  for (std::size_t a = 0; a < m; ++a) {
    ComplexMatrix ja =
        kron(r1.level1[a], id2) + kron(id1, r2.level1[a]);
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::size_t nu = 0; nu < m; ++nu)
        if (f[a][mu][nu] != 0.0)
          ja = ja + (kI * 0.5 * f[a][mu][nu]) *
                        kron(r1.level0.generators[mu], r2.level0.generators[nu]);
    out.level1.push_back(ja);
  }
  if (r1.algebra == Algebra::Su2) {
    out.level0.named["S+"] =
        out.level0.generators[0] + kI * out.level0.generators[1];
    out.level0.named["S-"] =
        out.level0.generators[0] - kI * out.level0.generators[1];
  } else if (r1.algebra == Algebra::Su3) {
    for (auto& [k, v] : su3_ladder_components(out.level0.generators))
      out.level0.named[k] = v;
  }
  out.params.mu = r1.params.mu;
  out.params.mu.insert(out.params.mu.end(), r2.params.mu.begin(),
                       r2.params.mu.end());
  out.params.coupling = 0.0;  // level 1 is stored explicitly
  out.params.w = zero_w(space.sites());
  return out;
}

H2Result haldane_shastry_h2(int n_sites) {
  if (n_sites < 3)
    throw YangianError("haldane_shastry_h2: need at least 3 sites");
  const std::size_t n = static_cast<std::size_t>(n_sites);
  YangianRealization hs =
      realize_su2(std::vector<int>(n, 1), std::vector<double>(n, 0.0),
                  WScheme::haldane_shastry(), 1.0);
  const TensorSpace& space = hs.space;
  const std::size_t D = space.dim();
  const liegen::GeneratorSet loc = liegen::spin_matrices(1);
  std::vector<std::vector<ComplexMatrix>> S(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) S[i].push_back(space.embed(loc.generators[c], i));

  const ComplexMatrix id = ComplexMatrix::identity(D);
  std::vector<cdouble> Z(n);
  for (std::size_t k = 0; k < n; ++k)
    Z[k] = std::exp(kI * (2.0 * kPi * static_cast<double>(k + 1) /
                          static_cast<double>(n)));
  ComplexMatrix h2 = zeros_like_dim(D);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const cdouble zij = Z[i] - Z[j];
      const cdouble coef = Z[i] * Z[j] / (zij * (-zij));
      ComplexMatrix sdot = zeros_like_dim(D);
      for (int c = 0; c < 3; ++c) sdot = sdot + S[i][c] * S[j][c];
      const ComplexMatrix pij = 2.0 * (sdot + 0.25 * id);
      h2 = h2 + coef * (pij - id);
    }

  VerificationReport rep;
  rep.name = "haldane_shastry_h2[" + std::to_string(n) + " sites]";
  rep.residuals["hermiticity"] = (h2 - h2.adjoint()).norm_fro();
  double ci = 0.0, cj = 0.0;
  for (int c = 0; c < 3; ++c) {
    ci = std::max(ci, commutator(h2, hs.level0.generators[c]).norm_fro());
    cj = std::max(cj, commutator(h2, hs.level1[c]).norm_fro());
  }
  rep.residuals["level0_commutant"] = ci;
  rep.residuals["level1_commutant"] = cj;
  finalize(rep, 1e-8);
  return H2Result{std::move(h2), std::move(rep)};
}

}  // namespace yangian
