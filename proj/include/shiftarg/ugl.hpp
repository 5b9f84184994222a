#pragma once

#include "shiftarg/cpoly.hpp"
#include "shiftarg/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace shiftarg {

/* PBW monomial: exponent of each generator E_ij of gl_n, row-major
 * (E_11 < E_12 < ... < E_1n < E_21 < ... < E_nn). */
using PbwExp = std::vector<std::uint8_t>;

struct PbwGrlexGreater {
  bool operator()(const PbwExp& a, const PbwExp& b) const {
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

/* Element of U(gl_n) in PBW normal form.  Products straighten out-of-order
 * generator pairs bottom-up through [E_ij, E_kl] = d_kj E_il - d_il E_kj,
 * with single-generator straightening steps memoized per n. */
class UElement {
public:
  explicit UElement(int n);

  static UElement scalar(int n, const Rational& c);
  static UElement gen(int n, int i, int j);  // 1-based indices
  static UElement parse(int n, std::string_view text);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar(Rational* value = nullptr) const;
  int degree() const;  // filtration degree; -1 for zero

  const std::map<PbwExp, Rational, PbwGrlexGreater>& terms() const { return terms_; }
  void add_term(const PbwExp& e, const Rational& c);

  UElement operator-() const;
  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  UElement operator*(const UElement& o) const;
  UElement operator*(const Rational& c) const;
  bool operator==(const UElement& o) const;

  std::string str() const;

private:
  void check_compatible(const UElement& o) const;

  int n_;
  std::map<PbwExp, Rational, PbwGrlexGreater> terms_;
};

UElement commutator(const UElement& a, const UElement& b);

/* Image of a in the degree-d component of gr U(gl_n) = S(gl_n), over
 * VarTable::gl(n).  Throws when deg a > d. */
CPoly symbol(const UElement& a, int d);

/* Poisson bracket on S(gl_n) induced by {E_ij, E_kl} = d_kj E_il - d_il E_kj;
 * both polynomials must live over VarTable::gl(n). */
CPoly poisson(const CPoly& a, const CPoly& b);

}  // namespace shiftarg
