#include "liegen/liegen.hpp"

#include <cmath>

namespace liegen {

namespace {

const cdouble kI(0.0, 1.0);

ComplexMatrix unit(std::size_t d, std::size_t r, std::size_t c) {
  ComplexMatrix m(d, d);
  m.at(r, c) = 1.0;
  return m;
}

}  // namespace

const ComplexMatrix& GeneratorSet::op(const std::string& name) const {
  for (std::size_t k = 0; k < index_names.size(); ++k)
    if (index_names[k] == name) return generators[k];
  auto it = named.find(name);
  if (it == named.end())
    throw LiegenError("no operator named '" + name + "' in " + algebra_label);
  return it->second;
}

GeneratorSet spin_matrices(int two_s) {
  if (two_s < 1) throw LiegenError("spin_matrices: two_s must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(two_s) + 1;
  const double s = 0.5 * two_s;

  ComplexMatrix sp(dim, dim), s3(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double m = s - static_cast<double>(k);  // descending
    s3.at(k, k) = m;
    if (k > 0) sp.at(k - 1, k) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
  }
  ComplexMatrix sm = sp.adjoint();
  ComplexMatrix s1 = (sp + sm) * 0.5;
  ComplexMatrix s2 = (sp - sm) * (-0.5 * kI);

  GeneratorSet gs;
  gs.algebra_label = "su2_spin(" + (two_s % 2 == 0
                                        ? std::to_string(two_s / 2)
                                        : std::to_string(two_s) + "/2") +
                     ")";
  gs.generators = {s1, s2, s3};
  gs.index_names = {"S1", "S2", "S3"};
  gs.structure = structure_constants(gs.generators);
  gs.named["S+"] = sp;
  gs.named["S-"] = sm;
  return gs;
}

GeneratorSet gell_mann() {
  std::vector<ComplexMatrix> lam(8, ComplexMatrix(3, 3));
  lam[0] = {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
  lam[1] = {{0, -kI, 0}, {kI, 0, 0}, {0, 0, 0}};
  lam[2] = {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}};
  lam[3] = {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}};
  lam[4] = {{0, 0, -kI}, {0, 0, 0}, {kI, 0, 0}};
  lam[5] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  lam[6] = {{0, 0, 0}, {0, 0, -kI}, {0, kI, 0}};
  const double r3 = 1.0 / std::sqrt(3.0);
  lam[7] = {{r3, 0, 0}, {0, r3, 0}, {0, 0, -2.0 * r3}};

  GeneratorSet gs;
  gs.algebra_label = "su3";
  for (int m = 0; m < 8; ++m) {
    gs.generators.push_back(lam[m] * 0.5);
    gs.index_names.push_back("F" + std::to_string(m + 1));
    gs.named["lambda" + std::to_string(m + 1)] = lam[m];
  }
  gs.structure = structure_constants(gs.generators);

  const auto& f = gs.generators;
  gs.named["I+"] = f[0] + kI * f[1];
  gs.named["I-"] = f[0] - kI * f[1];
  gs.named["U+"] = f[5] + kI * f[6];
  gs.named["U-"] = f[5] - kI * f[6];
  gs.named["V+"] = f[3] - kI * f[4];  // note the sign flip vs I+/U+
  gs.named["V-"] = f[3] + kI * f[4];
  gs.named["I3"] = f[2];
  gs.named["I8"] = f[7];
  gs.named["Y"] = f[7] * (2.0 / std::sqrt(3.0));
  return gs;
}

GeneratorSet so_n_generators(int n) {
  if (n != 5 && n != 6)
    throw LiegenError("so_n_generators: n must be 5 or 6, got " +
                      std::to_string(n));
  const std::size_t d = static_cast<std::size_t>(n);
  GeneratorSet gs;
  gs.algebra_label = "so(" + std::to_string(n) + ")";
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      ComplexMatrix m(d, d);
      m.at(a, b) = -kI;
      m.at(b, a) = kI;
      gs.generators.push_back(m);
      gs.index_names.push_back("L" + std::to_string(a + 1) +
                               std::to_string(b + 1));
    }
  gs.structure = structure_constants(gs.generators);
  return gs;
}

GeneratorSet so5_cartan_weyl() {
  // Position of signed label q in the ordered basis (-2,-1,0,1,2).
  auto pos = [](int q) { return static_cast<std::size_t>(q + 2); };
  auto es = [&](int a, int b) { return unit(5, pos(a), pos(b)); };

  GeneratorSet gs;
  gs.algebra_label = "so5_cartan_weyl";
  const std::vector<std::pair<std::string, ComplexMatrix>> ops = {
      {"E3", es(2, 2) - es(-2, -2)},
      {"F3", es(1, 1) - es(-1, -1)},
      {"E+", es(2, 0) - es(0, -2)},
      {"E-", es(0, 2) - es(-2, 0)},
      {"F+", es(1, 0) - es(0, -1)},
      {"F-", es(0, 1) - es(-1, 0)},
      {"U+", es(2, 1) - es(-1, -2)},
      {"U-", es(1, 2) - es(-2, -1)},
      {"V+", es(2, -1) - es(1, -2)},
      {"V-", es(-1, 2) - es(-2, 1)},
  };
  for (const auto& [name, m] : ops) {
    gs.generators.push_back(m);
    gs.index_names.push_back(name);
    gs.named[name] = m;
  }
  return gs;
}

ComplexMatrix signed_basis(int n) {
  if (n != 5 && n != 6)
    throw LiegenError("signed_basis: n must be 5 or 6, got " +
                      std::to_string(n));
  const std::size_t d = static_cast<std::size_t>(n);
  const int p = n / 2;  // number of +/- label pairs
  std::vector<int> order;
  for (int q = -p; q <= p; ++q) {
    if (q == 0 && n % 2 == 0) continue;
    order.push_back(q);
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix b(d, d);
  for (std::size_t row = 0; row < d; ++row) {
    const int q = order[row];
    if (q == 0) {
      b.at(row, d - 1) = 1.0;
    } else {
      const std::size_t k = static_cast<std::size_t>(q > 0 ? q : -q);
      // Bra of (e_{2k-2} -/+ i e_{2k-1})/sqrt2 for q>0 / q<0.
      b.at(row, 2 * k - 2) = inv_sqrt2;
      b.at(row, 2 * k - 1) = (q > 0 ? kI : -kI) * inv_sqrt2;
    }
  }
  return b;
}

ComplexMatrix permutation_op(std::size_t d) {
  if (d < 2) throw LiegenError("permutation_op: d must be >= 2");
  ComplexMatrix p(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p.at(i * d + j, j * d + i) = 1.0;
  return p;
}

ComplexMatrix a_n_op(int n) {
  if (n != 5 && n != 6)
    throw LiegenError("a_n_op: n must be 5 or 6, got " + std::to_string(n));
  const std::size_t d = static_cast<std::size_t>(n);
  ComplexMatrix a(d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      a.at(x * d + (d - 1 - x), y * d + (d - 1 - y)) = 1.0;
  return a;
}

Rank3 structure_constants(const std::vector<ComplexMatrix>& gens) {
  const std::size_t ng = gens.size();
  if (ng == 0) throw LiegenError("structure_constants: empty generator list");
  for (const auto& g : gens)
    if (!g.square() || g.rows() != gens[0].rows())
      throw LiegenError("structure_constants: generators must share one "
                        "square shape");

  // Trace form must be diagonal and non-degenerate.
  std::vector<cdouble> diag(ng);
  double max_diag = 0.0;
  for (std::size_t a = 0; a < ng; ++a) {
    diag[a] = (gens[a] * gens[a]).trace();
    max_diag = std::max(max_diag, std::abs(diag[a]));
  }
  for (std::size_t a = 0; a < ng; ++a) {
    if (std::abs(diag[a]) < 1e-12 * std::max(1.0, max_diag))
      throw LiegenError("structure_constants: degenerate trace form at index " +
                        std::to_string(a));
    for (std::size_t b = a + 1; b < ng; ++b) {
      const cdouble off = (gens[a] * gens[b]).trace();
      if (std::abs(off) > 1e-10 * std::max(1.0, max_diag))
        throw LiegenError(
            "structure_constants: generators not trace-orthogonal at (" +
            std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }

  Rank3 f(ng, std::vector<std::vector<double>>(ng, std::vector<double>(ng)));
  for (std::size_t l = 0; l < ng; ++l)
    for (std::size_t m = 0; m < ng; ++m) {
      const ComplexMatrix c = matcore::commutator(gens[l], gens[m]);
      for (std::size_t n = 0; n < ng; ++n)
        f[l][m][n] = ((c * gens[n]).trace() / (kI * diag[n])).real();
    }
  return f;
}

double closure_residual(const GeneratorSet& gs) {
  if (gs.structure.empty())
    throw LiegenError("closure_residual: generator set has no structure "
                      "tensor (" + gs.algebra_label + ")");
  const std::size_t ng = gs.size();
  double worst = 0.0;
  for (std::size_t l = 0; l < ng; ++l)
    for (std::size_t m = 0; m < ng; ++m) {
      ComplexMatrix rhs(gs.dim(), gs.dim());
      for (std::size_t n = 0; n < ng; ++n) {
        const double fv = gs.structure[l][m][n];
        if (fv != 0.0) rhs = rhs + gs.generators[n] * (kI * fv);
      }
      worst = std::max(
          worst,
          (matcore::commutator(gs.generators[l], gs.generators[m]) - rhs)
              .norm_max());
    }
  return worst;
}

}  // namespace liegen
