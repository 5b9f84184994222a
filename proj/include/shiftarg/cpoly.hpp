#pragma once

#include "shiftarg/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace shiftarg {

/* Ordered variable table shared by interoperating polynomials.  The order of
 * names fixes the lexicographic tie-break of the term order. */
class VarTable {
public:
  explicit VarTable(std::vector<std::string> names);

  static std::shared_ptr<const VarTable> gl(int n);      // E[1,1], E[1,2], ... row-major
  static std::shared_ptr<const VarTable> single(const std::string& name);
  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);

  int size() const { return int(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  int index(std::string_view name) const;  // -1 when absent

  bool operator==(const VarTable& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

using Exponents = std::vector<unsigned>;

/* graded-lexicographic, greatest term first: higher total degree wins, then
 * the first differing variable with the larger exponent */
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class CPoly {
public:
  CPoly() = default;
  explicit CPoly(VarTablePtr table) : table_(std::move(table)) {}

  static CPoly constant(VarTablePtr table, const Rational& c);
  static CPoly var(VarTablePtr table, int index, unsigned power = 1);
  static CPoly parse(VarTablePtr table, std::string_view text);

  const VarTablePtr& table() const { return table_; }
  const std::map<Exponents, Rational, GrlexGreater>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // total degree; -1 for the zero polynomial
  bool is_constant(Rational* value = nullptr) const;

  void add_term(const Exponents& e, const Rational& c);

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  CPoly operator*(const CPoly& o) const;
  CPoly operator*(const Rational& c) const;
  CPoly pow(unsigned e) const;
  bool operator==(const CPoly& o) const;

  Rational eval(const std::vector<Rational>& point) const;
  CPoly diff(int var) const;

  std::string str() const;

private:
  void check_compatible(const CPoly& o) const;

  VarTablePtr table_;
  std::map<Exponents, Rational, GrlexGreater> terms_;
};

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity), sorted
  int remainder_degree = 0;                     // degree of the root-free cofactor
};

/* Rational roots of a univariate polynomial (candidates from the divisors of
 * the extreme coefficients after clearing denominators, each verified by
 * exact evaluation; multiplicities by repeated deflation). */
RationalRoots rational_roots(const CPoly& p);
RationalRoots rational_roots(const std::vector<Rational>& dense_coeffs);

}  // namespace shiftarg
