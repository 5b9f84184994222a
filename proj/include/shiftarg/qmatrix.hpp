#pragma once

#include "shiftarg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shiftarg {

/* Dense matrix over Rational.  All elimination-based routines are exact;
 * rank goes through fraction-free (Bareiss) elimination over the integers
 * after clearing denominators row by row. */
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMatrix identity(int n);
  static QMatrix scalar(int n, const Rational& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& c) const;
  bool operator==(const QMatrix& o) const = default;

  QMatrix transpose() const;
  QMatrix pow(int e) const;

  std::string str() const;  // rows as [p, q, ...]; one line per row

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

int rank(const QMatrix& m);
Rational det(const QMatrix& m);
std::optional<QMatrix> inverse(const QMatrix& m);

/* Coefficients of det(t*I - m), index = power of t (degree n, monic).
 * Exact Faddeev-LeVerrier recursion. */
std::vector<Rational> charpoly(const QMatrix& m);

/* One exact solution of A x = b, or nullopt when inconsistent.
 * Free coordinates are set to zero. */
std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b);

}  // namespace shiftarg
