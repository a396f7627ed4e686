#pragma once
// Multi-site realizations of the Yangians Y(su2), Y(su3), Y(so5), Y(so6):
// level-0 generators I (plain sums of site generators) together with level-1
// generators J (weighted sums plus an antisymmetric bilocal part), residual
// certification of the defining relations and of the per-algebra reduced
// identities, co-product extension, and the Haldane-Shastry chain Hamiltonian.

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liegen/liegen.hpp"
#include "matcore/matcore.hpp"

namespace yangian {

using matcore::cdouble;
using matcore::ComplexMatrix;
using matcore::TensorSpace;

class YangianError : public std::runtime_error {
 public:
  explicit YangianError(const std::string& what) : std::runtime_error(what) {}
};

enum class Algebra { Su2, Su3, So5, So6 };

std::string algebra_name(Algebra a);

// Site-pair weight scheme for the bilocal part of the level-1 generators.
//   step:            W_ij = sign for i < j (antisymmetric continuation).
//                    Default sign is per-constructor: +1 for su2, -1 for su3.
//   haldane_shastry: W_jk = i cot(pi (j-k) / N)  (spin-1/2 chains only).
//   explicit_matrix: caller-supplied antisymmetric complex matrix.
struct WScheme {
  enum class Kind { Step, HaldaneShastry, Explicit };
  Kind kind = Kind::Step;
  std::optional<double> step_sign;                // Step: W_ij for i<j
  std::vector<std::vector<cdouble>> matrix;       // Explicit only

  static WScheme step();                          // constructor default sign
  static WScheme step(double sign);
  static WScheme haldane_shastry();
  static WScheme explicit_matrix(std::vector<std::vector<cdouble>> w);
};

// Parameter record for a realization. `w` is the resolved antisymmetric site
// matrix actually used in the bilocal sum. For co-product results the level-1
// matrices are stored explicitly and `w` is left zero.
struct RealizationParams {
  std::vector<double> mu;
  double coupling = 1.0;
  std::vector<std::vector<cdouble>> w;
};

struct YangianRealization {
  Algebra algebra = Algebra::Su2;
  TensorSpace space{std::vector<std::size_t>{1}};
  liegen::GeneratorSet level0;          // total I_a plus the local structure tensor
  std::vector<ComplexMatrix> level1;    // J_a, ordered like level0.index_names
  RealizationParams params;
};

// Residual report. `residuals` drive `passed` (every entry < tol); `info`
// carries reported-only diagnostics such as literal-transcription residuals
// and least-squares scale fits, and never affects `passed`.
struct VerificationReport {
  std::string name;
  std::map<std::string, double> residuals;
  std::map<std::string, double> info;
  double tol = 0.0;
  bool passed = false;
};

// I = sum_i S_i, J = sum_i mu_i S_i + coupling * sum_{i<j} W_ij (S_i x S_j),
// with (S_i x S_j)_c = eps_{cab} S_i^a S_j^b (site-i factor first).
// `two_s` lists the doubled spin per site.
YangianRealization realize_su2(const std::vector<int>& two_s,
                               const std::vector<double>& mu, const WScheme& w,
                               double coupling);

// Fundamental representation at each site. J is built in the f-contraction
// form J_m = sum_i mu_i F_i^m - i h f_{mnl} sum_{i != j} W_ij F_i^n F_j^l;
// the ladder-component form is available through su3_ladder_form_level1 for
// cross-checking. W must satisfy W_ij W_jk + W_jk W_ki + W_ki W_ij = -1 on
// every distinct site triple.
YangianRealization realize_su3(int n_sites, const std::vector<double>& mu,
                               const WScheme& w, double h);

// Vector representation of so(n), n in {5, 6}, at each site. Level 1 is the
// ordered bilocal J_ab = (i/2) sum_{x != y} sgn(x - y) sum_{c != a,b}
// I_ac(x) I_cb(y); the i/2 scale is what makes the cubic Serre relation hold
// with unit coefficient. One site gives J = 0.
YangianRealization realize_so_n_bilocal(int n, int n_sites);

// Residuals of the defining relations: level-0 closure, level-1 covariance
// and the Serre-type relation (the quartic four-index identity for su2, the
// cubic anticommutator identity otherwise), each maximized over all index
// combinations. Frobenius norms throughout.
VerificationReport verify_defining(const YangianRealization& r, double tol);

// Residual of the algebra's single reduced identity (su2/su3/so5) or of the
// three ordered pair-commutator identities (so6), with least-squares scale
// fits and literal-transcription variants reported in `info`.
VerificationReport verify_simplified(const YangianRealization& r, double tol);

// Joint realization on the concatenated site list:
// I -> I (x) 1 + 1 (x) I,  J -> J (x) 1 + 1 (x) J + (i/2) f_{amn} I_m (x) I_n.
YangianRealization coproduct_extend(const YangianRealization& r1,
                                    const YangianRealization& r2);

struct H2Result {
  ComplexMatrix h2;
  VerificationReport report;
};

// Haldane-Shastry spin-1/2 chain Hamiltonian
//   H2 = sum_{i != j} (Z_i Z_j / (Z_ij Z_ji)) (P_ij - 1),  Z_k = e^{2 pi i k/N},
// with P_ij = 2 (S_i . S_j + 1/4). The report carries Hermiticity and the
// commutants with the Haldane-Shastry realization (mu = 0, coupling 1).
H2Result haldane_shastry_h2(int n_sites);

// --- building blocks shared with the application studies ---

// f-contraction level-1 build from embedded per-site generator octets
// (site_gens[i][m] already acts on the full space). Works for any
// representation choice per site, e.g. a conjugate-representation site.
std::vector<ComplexMatrix> su3_f_form_level1(
    const std::vector<std::vector<ComplexMatrix>>& site_gens,
    const std::vector<double>& mu,
    const std::vector<std::vector<cdouble>>& w, double h);

// Ladder components of a Cartesian su3 octet: I+/-, U+/-, V+/- (V+ = X4-iX5),
// I3 = X3, and I8 = (2/sqrt3) X8 (hypercharge normalization).
std::map<std::string, ComplexMatrix> su3_ladder_components(
    const std::vector<ComplexMatrix>& cart);

// Direct ladder-component build of the su3 level-1 generators on fundamental
// sites (the component form of the f-contraction build; agrees entrywise).
std::map<std::string, ComplexMatrix> su3_ladder_form_level1(
    int n_sites, const std::vector<double>& mu,
    const std::vector<std::vector<cdouble>>& w, double h);

}  // namespace yangian
