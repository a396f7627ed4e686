#pragma once
// Catalog of concrete Lie-algebra generator sets — su(2) spin triples, su(3)
// in the half-Gell-Mann normalization, so(n) antisymmetric bases, the so(5)
// Cartan-Weyl ladders — plus the permutation and pairing operators that the
// R-matrix families are built from.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "matcore/matcore.hpp"

namespace liegen {

using matcore::cdouble;
using matcore::ComplexMatrix;

class LiegenError : public std::runtime_error {
 public:
  explicit LiegenError(const std::string& what) : std::runtime_error(what) {}
};

// structure[l][m][n] in [g_l, g_m] = i sum_n structure[l][m][n] g_n.
using Rank3 = std::vector<std::vector<std::vector<double>>>;

struct GeneratorSet {
  std::string algebra_label;
  std::vector<ComplexMatrix> generators;  // ordered, parallel to index_names
  std::vector<std::string> index_names;
  // Real structure tensor; empty for bases (like Cartan-Weyl ladders) that
  // close only with complex coefficients.
  Rank3 structure;
  // Distinguished named combinations (ladder operators, raw Gell-Mann
  // matrices, hypercharge, ...).
  std::map<std::string, ComplexMatrix> named;

  std::size_t size() const { return generators.size(); }
  std::size_t dim() const { return generators.empty() ? 0 : generators[0].rows(); }
  // Lookup by index name first, then by named combination; throws on miss.
  const ComplexMatrix& op(const std::string& name) const;
};

// Spin-s triple S1,S2,S3 of dimension two_s+1 with [S1,S2] = i S3 (cyclic)
// and S3 diagonal descending (s, s-1, ..., -s). Named: "S+", "S-".
GeneratorSet spin_matrices(int two_s);

// su(3) with generators F_mu = lambda_mu / 2 (mu = 1..8). Named entries:
// "lambda1".."lambda8" (trace normalization tr(lambda_a lambda_b) = 2 delta),
// ladders "I+","I-","U+","U-","V+","V-", Cartans "I3","I8", and the
// hypercharge "Y" = (2/sqrt3) F8 = diag(1,1,-2)/3.
GeneratorSet gell_mann();

// so(n) basis L_ab = -i(E_ab - E_ba) for a<b (n in {5,6}), names "Lab".
GeneratorSet so_n_generators(int n);

// The ten so(5) Cartan-Weyl operators as matrix-unit differences in the
// signed basis ordered (-2,-1,0,1,2): E3,F3,E+,E-,F+,F-,U+,U-,V+,V-.
// No real structure tensor (ladder basis).
GeneratorSet so5_cartan_weyl();

// Unitary change of basis from the real so(n) basis to the signed basis with
// labels ascending; row q of the result is the signed-basis bra <q|, so an
// operator g transforms as B g B^dagger. Signed label q>0 pairs the real
// coordinates (2q-2, 2q-1); label 0 (odd n) is the last real coordinate.
ComplexMatrix signed_basis(int n);

// Permutation P(e_i (x) e_j) = e_j (x) e_i on C^d (x) C^d; exact entries.
ComplexMatrix permutation_op(std::size_t d);

// Pairing operator A on C^n (x) C^n over the signed labels:
// A_{(a,b),(c,d)} = [b = rev(a)][d = rev(c)] with rev(i) = n-1-i (label q
// pairs with -q). Satisfies A^2 = n A. n in {5,6}.
ComplexMatrix a_n_op(int n);

// f_{lmn} = tr([g_l, g_m] g_n) / (i tr(g_n^2)). Requires pairwise trace
// orthogonality and non-degenerate diagonal; throws LiegenError otherwise.
Rank3 structure_constants(const std::vector<ComplexMatrix>& gens);

// Closure certificate: max over (l,m) of ||[g_l,g_m] - i sum f g||_max.
double closure_residual(const GeneratorSet& gs);

}  // namespace liegen
