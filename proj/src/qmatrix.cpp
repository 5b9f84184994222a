#include "shiftarg/qmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace shiftarg {

QMatrix QMatrix::identity(int n) { return scalar(n, Rational(1)); }

QMatrix QMatrix::scalar(int n, const Rational& c) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QMatrix QMatrix::pow(int e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
  if (e < 0) throw std::invalid_argument("negative matrix power");
  QMatrix r = identity(rows_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]";
    if (i + 1 < rows_) os << '\n';
  }
  return os.str();
}

int rank(const QMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // clear denominators row-wise, then Bareiss on integers
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      mpq_class v = m.at(i, j).raw() * mpq_class(l);
      a[i][j] = v.get_num();  // denominator is 1 by construction
    }
  }
  int r = 0;
  mpz_class prev(1);
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

namespace {

// Gauss-Jordan over Rational on [a | rhs]; returns pivot column list.
std::vector<int> eliminate(QMatrix& a, std::vector<std::vector<Rational>>& rhs) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(pivot, j));
      for (auto& col : rhs) std::swap(col[r], col[pivot]);
    }
    Rational inv = a.at(r, c).inv();
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (auto& col : rhs) col[r] *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
      for (auto& col : rhs) col[i] -= f * col[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational det(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix a = m;
  const int n = a.rows();
  Rational d(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) { pivot = i; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(c, j), a.at(pivot, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rational inv = a.at(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c) * inv;
      for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return d;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  QMatrix a = m;
  std::vector<std::vector<Rational>> rhs(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j) rhs[j][j] = Rational(1);
  std::vector<int> pivots = eliminate(a, rhs);
  if (int(pivots.size()) != n) return std::nullopt;
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = rhs[j][i];
  return inv;
}

std::vector<Rational> charpoly(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly of non-square matrix");
  const int n = m.rows();
  // det(tI - m) = t^n + c_{n-1} t^{n-1} + ... + c_0
  std::vector<Rational> c(size_t(n) + 1);
  c[n] = Rational(1);
  QMatrix mk = QMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Rational tr(0);
    for (int i = 0; i < n; ++i) tr += mk.at(i, i);
    Rational ck = tr / Rational(-long(k));
    c[n - k] = ck;
    mk = mk + QMatrix::scalar(n, ck);
  }
  return c;
}

std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b) {
  if (int(b.size()) != a.rows()) throw std::invalid_argument("rhs length mismatch");
  QMatrix w = a;
  std::vector<std::vector<Rational>> rhs{b};
  std::vector<int> pivots = eliminate(w, rhs);
  // rows past the pivot count must have zero rhs, else inconsistent
  for (int i = int(pivots.size()); i < a.rows(); ++i)
    if (!rhs[0][i].is_zero()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs[0][r];
  return x;
}

}  // namespace shiftarg
