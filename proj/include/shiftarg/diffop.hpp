#pragma once

#include "shiftarg/matrix_ops.hpp"
#include "shiftarg/qmatrix.hpp"
#include "shiftarg/ugl.hpp"

#include <map>
#include <string>

namespace shiftarg {

/* Element of U(gl_n)[z^{-1}, d_z], normal form u * z^{-k} * d^l with the
 * z-power written left of the d-power.  The single nontrivial rewrite is
 * d o z^{-k} = z^{-k} d - k z^{-k-1}. */
class DOp {
public:
  struct Key {
    int k;  // z^{-k}, k >= 0
    int l;  // d^l, l >= 0
    auto operator<=>(const Key&) const = default;
  };

  explicit DOp(int n);

  static DOp coeff(const UElement& u) { return monomial(u, 0, 0); }
  static DOp monomial(const UElement& u, int k, int l);
  static DOp dz(int n) { return monomial(UElement::scalar(n, Rational(1)), 0, 1); }

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, UElement>& terms() const { return terms_; }
  UElement coeff_at(int k, int l) const;

  void add_term(int k, int l, const UElement& u);

  DOp operator-() const;
  DOp& operator+=(const DOp& o);
  DOp& operator-=(const DOp& o);
  friend DOp operator+(DOp a, const DOp& b) { return a += b; }
  friend DOp operator-(DOp a, const DOp& b) { return a -= b; }
  DOp operator*(const DOp& o) const;
  DOp operator*(const Rational& c) const;
  bool operator==(const DOp& o) const;

  /* apply to the constant function 1: drops every term with l > 0,
   * returns z-power -> coefficient */
  std::map<int, UElement> apply_to_one() const;

  std::string str() const;

private:
  int n_;
  std::map<Key, UElement> terms_;  // nonzero coefficients only
};

/* M = -d_z + mu + E z^{-1}, the n x n operator matrix of the evaluated
 * Segal-Sugawara generators */
RMatrix<DOp> operator_matrix(const QMatrix& mu);

/* mu + E z^{-1} without the derivative term */
RMatrix<DOp> coefficient_matrix(const QMatrix& mu);

}  // namespace shiftarg
