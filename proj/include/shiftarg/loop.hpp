#pragma once

#include "shiftarg/diffop.hpp"
#include "shiftarg/matrix_ops.hpp"
#include "shiftarg/qmatrix.hpp"
#include "shiftarg/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace shiftarg {

/* Loop generator E_ij[r].  Stored words keep r <= -1; nonnegative modes only
 * ever appear transiently inside vacuum normal ordering. */
struct LoopGen {
  int r;     // mode
  int i, j;  // 1-based gl indices
  auto operator<=>(const LoopGen&) const = default;
};

/* PBW word: loop generators sorted by (r, i, j) with all tau factors on the
 * right. */
struct LoopMono {
  std::vector<LoopGen> word;
  int tau = 0;
  auto operator<=>(const LoopMono&) const = default;
};

/* Terms print and iterate with higher tau-powers first, then words in
 * lexicographic order, so cdet(tau + E[-1]) reads off as a polynomial in
 * tau. */
struct LoopTermOrder {
  bool operator()(const LoopMono& a, const LoopMono& b) const {
    if (a.tau != b.tau) return a.tau > b.tau;
    return a.word < b.word;
  }
};

/* Element of U(t^{-1}gl_n[t^{-1}]) extended by tau, at the critical level
 * K = -n.  The straightening rules are
 *   [E_ij[r], E_kl[s]] = d_kj E_il[r+s] - d_il E_kj[r+s]   (r+s <= -2 here,
 *                        so no central term arises among stored modes)
 *   [tau, X[r]] = -r X[r-1]. */
class LoopElement {
 public:
  explicit LoopElement(int n);

  static LoopElement scalar(int n, const Rational& c);
  static LoopElement gen(int n, int i, int j, int r);  // requires r <= -1
  static LoopElement tau(int n);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<LoopMono, Rational, LoopTermOrder>& terms() const { return terms_; }
  void add_term(const LoopMono& m, const Rational& c);

  LoopElement operator-() const;
  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator-=(const LoopElement& o);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
  LoopElement operator*(const LoopElement& o) const;
  LoopElement operator*(const Rational& c) const;
  bool operator==(const LoopElement& o) const;

  /* coefficient of tau^p with the tau factor stripped */
  LoopElement tau_coefficient(int p) const;

  std::string str() const;

 private:
  int n_;
  std::map<LoopMono, Rational, LoopTermOrder> terms_;
};

/* the n x n matrix tau*1 + E[-1] */
RMatrix<LoopElement> loop_matrix(int n);

/* derivation T with T(E_ij[r]) = -r E_ij[r-1]; input must be tau-free */
LoopElement translate(const LoopElement& v);

/* grading degree: each term has degree sum(-r) + tau-power; throws if the
 * element mixes degrees */
int d_grade(const LoopElement& v);

/* E_ij[r] (r >= 0) acting on v|0>, normal ordering at K = -n: the central
 * term r*K*(d_kj d_il - d_ij d_kl / n) enters when the mode meets s = -r,
 * and any leftover nonnegative mode annihilates the vacuum.  v must be
 * tau-free. */
LoopElement apply_mode(int i, int j, int r, const LoopElement& v);

/* Segal-Sugawara membership probe: v passes iff E_ij[0] v|0> = 0 and
 * E_ij[1] v|0> = 0 for all i, j.  Modes 0 and 1 suffice: they generate
 * gl_n[0] + sl_n[t] t under brackets, and the remaining modes I[r], r >= 1,
 * of the identity are central with <I, .> = 0, so they act trivially on
 * tau-free vectors.  On failure the first nonzero image is the witness. */
struct SsCheck {
  bool ok = true;
  int i = 0, j = 0, r = 0;  // failing probe when !ok
  LoopElement image;
  SsCheck() : image(1) {}
};
SsCheck is_ss_vector(const LoopElement& v);

enum class SsFamily { Phi, Psi, Theta };

/* Coefficient lists of the tau-expansions
 *   tr A^(m) (tau+E[-1])_1 ... (tau+E[-1])_m = sum_a phi_ma tau^(m-a)
 * (H^(m) for psi, tr (tau+E[-1])^m for theta); entry a of the result is
 * phi_ma, a = 0..m. */
std::vector<LoopElement> ss_family(SsFamily family, int m, int n);

/* evaluation homomorphism rho_{mu,z}: E_ij[r] -> E_ij z^r + d_{r,-1} mu_ij,
 * tau -> -d_z */
DOp evaluate_rho(const LoopElement& v, const QMatrix& mu);

}  // namespace shiftarg
