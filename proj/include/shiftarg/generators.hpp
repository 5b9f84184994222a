#pragma once

#include "shiftarg/cpoly.hpp"
#include "shiftarg/jordan.hpp"
#include "shiftarg/qmatrix.hpp"
#include "shiftarg/ring_poly.hpp"
#include "shiftarg/ugl.hpp"
#include "shiftarg/young.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shiftarg {

/* The five generator families: phi from the column determinant/minor
 * expansion, psi_mm and theta_mm from the permanent-type and power traces of
 * the operator matrix, varphi and psi_plain from the projected traces of
 * mu + E z^{-1} without the derivative term. */
enum class Family { Phi, PsiMM, ThetaMM, Varphi, PsiPlain };

Family family_from_string(std::string_view name);  // phi | psi-mm | theta-mm | varphi | psi
std::string family_name(Family f);

using TableKey = std::pair<int, int>;  // (m, k), 1 <= m <= n, 0 <= k <= m

/* Polynomial in z^{-1}: the coefficient at degree d is the z^{-d} part. */
using ZPoly = RingPoly<CPoly>;

struct GeneratorTable {
  Family family = Family::Phi;
  int n = 0;
  QMatrix mu;
  std::map<TableKey, UElement> entries;  // absent key = zero entry
  std::map<TableKey, CPoly> symbols;     // degree-(m-k) classical images

  UElement entry(int m, int k) const;     // zero element when absent
  CPoly symbol_entry(int m, int k) const; // zero polynomial when absent
};

/* Full U(gl_n) table of one family, symbols attached.  The phi family runs
 * the minor route at every n and cross-checks the projected-trace route for
 * n <= 4; a route mismatch throws.  The families needing a symmetrizer or a
 * permanent-type sum are guarded to n <= 4 (the permutation sum over n^m
 * index tuples is out of desk scale beyond that). */
GeneratorTable generator_table(Family f, const QMatrix& mu);

/* Symbol table alone; cheap at n = 5, 6 for phi and theta. */
std::map<TableKey, CPoly> symbol_table(Family f, const QMatrix& mu);

/* Degree-m series: coefficient of degree d is the z^{-d} part, so the (m,k)
 * table entry sits at degree m-k.  phi runs two independent groupings
 * (subset determinants vs. signed two-row minor sums) and asserts equality. */
ZPoly symbol_series(Family f, int m, const QMatrix& mu);

/* Row polynomials Phi_l(t) = sum_{k=0}^{n-l} entry(l+k, k) t^{n-l-k} for
 * l = 1..n (index l-1 in the result). */
std::vector<RingPoly<UElement>> row_polynomials(const GeneratorTable& t);
RingPoly<CPoly> symbol_row_polynomial(const std::map<TableKey, CPoly>& symbols, int n, int l);

/* Phi_l(t, mu + a) == Phi_l(t + a, mu) for every row. */
bool check_shift(const QMatrix& mu, const Rational& a);

/* Boxes (l+k, k) forced to vanish when mu starts with the nilpotent block
 * J_alpha(0): with delta_l = #boxes of alpha below row l, the range is
 * n-l-delta_l+1 <= k <= n-l. */
std::vector<TableKey> vanishing_boxes(int n, const YoungDiagram& alpha);
bool check_vanishing(const QMatrix& mu, const YoungDiagram& alpha);

/* Row polynomial divisibility: each eigenvalue lambda_i of multiplicity
 * profile delta_l^{(i)} must divide Phi_l at least delta_l^{(i)} times as the
 * monic factor (t + lambda_i).  achieved counts exact divisions. */
struct FactorExponent {
  int l = 0;
  Rational lambda;
  int required = 0;
  int achieved = 0;
};

std::vector<FactorExponent> check_factorization(const GeneratorTable& t, const JordanData& jd);
std::vector<FactorExponent> check_factorization_symbols(const std::map<TableKey, CPoly>& symbols,
                                                        const JordanData& jd);
bool factorization_ok(const std::vector<FactorExponent>& profile);

/* Loop-level binomial relations: the u-expansion of cdet(u + tau + E[-1])
 * against the projected traces, and phi_ma = C(n-a, m-a) phi_a. */
bool check_loop_binomial(int n);

/* The same relations pushed through the evaluation map: comparing the
 * d^{m-a} coefficient series of the projected trace with the d^{n-a}
 * coefficient series of cdet(-d + mu + E z^{-1}) picks up the sign
 * (-1)^{n-m}, because both series expand in powers of d = -tau.  n <= 4. */
bool check_dop_binomial(const QMatrix& mu);

/* Symbol-level MacMahon and Newton identities over the z-series, m = 1..n;
 * n <= 4 (the symmetrized series is permutation-priced). */
bool check_macmahon(const QMatrix& mu);
bool check_newton(const QMatrix& mu);

/* phi^(k)_m = varphi^(k)_m + sum_{r=k+1}^{m-1} c_r varphi^(k)_r, constants
 * solved exactly per (m,k); unit diagonal by construction.  n <= 4. */
struct TriangularChange {
  bool ok = false;
  std::map<TableKey, std::vector<Rational>> constants;  // (m,k) -> c_{k+1}..c_{m-1}
};
TriangularChange triangular_change(const QMatrix& mu);

struct IdentityReport {
  bool loop_binomial = true;
  bool dop_binomial = true;
  bool macmahon = true;
  bool newton = true;
  bool triangular = true;
  std::map<TableKey, std::vector<Rational>> triangular_constants;
  bool ok() const { return loop_binomial && dop_binomial && macmahon && newton && triangular; }
};

/* Composite identity check; loop binomial runs for n <= 3, the rest for
 * n <= 4, skipped (left true) beyond their scale guards. */
IdentityReport check_identities(const QMatrix& mu);

/* Every excluded box of the selection written as an exact Rational-linear
 * combination of the retained entries of its own row of the staircase. */
struct RowDependence {
  bool ok = false;
  std::map<TableKey, std::vector<Rational>> coefficients;  // excluded -> combo over retained row keys
};
RowDependence excluded_dependence(const GeneratorTable& t, const SkewSelection& sel);

/* Closed form C(m,k) tr A^{(m)} mu_1 ... mu_k E_{k+1} ... E_m of the varphi
 * entry, kept as an independent cross-check route.  n <= 4. */
UElement varphi_closed_form(const QMatrix& mu, int m, int k);

}  // namespace shiftarg
